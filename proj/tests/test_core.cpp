#include <random>
#include <sstream>

#include "doctest.h"
#include "lfree/core.hpp"
#include "lfree/detect.hpp"
#include "lfree/error.hpp"

using namespace lfree;

TEST_SUITE("core") {

TEST_CASE("element arithmetic in both ambient kinds") {
  auto I = Ambient::interval(10);
  CHECK(elem_add(Element{3}, Element{5}, I) == Element{8});
  CHECK(elem_sub(Element{8}, Element{5}, I) == Element{3});
  CHECK(elem_add(Element{9}, Element{9}, I) == Element{18});

  auto G = Ambient::product({4, 4});
  CHECK(elem_add(Element{1, 3}, Element{3, 2}, G) == Element{0, 1});
  CHECK(elem_sub(Element{0, 1}, Element{3, 2}, G) == Element{1, 3});

  auto G3 = Ambient::product({4, 4, 4});
  CHECK(elem_add(Element{0, 0, 0}, Element{2, 1, 3}, G3) == Element{2, 1, 3});
  CHECK_THROWS_AS(elem_add(Element{1, 2}, Element{1, 2, 3}, G3), StructuralError);
  CHECK_THROWS_AS(elem_add(Element{1, 2}, Element{1}, I), StructuralError);
}

TEST_CASE("addition is associative and commutative, subtraction inverts it") {
  std::mt19937_64 rng(7);
  auto G = Ambient::product({3, 5, 4});
  auto I = Ambient::interval(100);
  std::uniform_int_distribution<std::size_t> pick(0, G.cardinality() - 1);
  std::uniform_int_distribution<Value> iv(-1000, 1000);
  for (int t = 0; t < 1000; ++t) {
    Element a = G.element_at(pick(rng)), b = G.element_at(pick(rng)), c = G.element_at(pick(rng));
    CHECK(G.add(G.add(a, b), c) == G.add(a, G.add(b, c)));
    CHECK(G.add(a, b) == G.add(b, a));
    CHECK(G.sub(G.add(a, b), b) == a);
    CHECK(G.index_of(G.add(a, b)) == G.add_index(G.index_of(a), G.index_of(b)));
    CHECK(G.index_of(G.sub(a, b)) == G.sub_index(G.index_of(a), G.index_of(b)));
    Element x{iv(rng)}, y{iv(rng)}, z{iv(rng)};
    CHECK(I.add(I.add(x, y), z) == I.add(x, I.add(y, z)));
    CHECK(I.add(x, y) == I.add(y, x));
    CHECK(I.sub(I.add(x, y), y) == x);
  }
}

TEST_CASE("product index order is lexicographic") {
  auto G = Ambient::product({2, 3, 4});
  for (std::size_t i = 0; i + 1 < G.cardinality(); ++i) CHECK(G.element_at(i) < G.element_at(i + 1));
  for (std::size_t i = 0; i < G.cardinality(); ++i) CHECK(G.index_of(G.element_at(i)) == i);
}

TEST_CASE("signature normalization") {
  auto s = normalize_signature({3, 2});
  CHECK(s.r() == 2);
  CHECK(s.lengths() == std::vector<int>{2, 3});
  CHECK(normalize_signature({2, 2, 2}).lengths() == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(normalize_signature({1, 2}), InvalidInput);
  CHECK_THROWS_AS(normalize_signature({}), InvalidInput);
  auto t = normalize_signature({4, 2, 3});
  CHECK(t.product() == 24);
  CHECK(t.prefix_product() == 6);
  CHECK(t.sum() == 9);
  CHECK(t.tail().lengths() == std::vector<int>{3, 4});
  CHECK(normalize_signature({5}).prefix_product() == 1);
}

TEST_CASE("ground set sorts, dedups and rejects outside elements") {
  auto I = Ambient::interval(16);
  auto a = GroundSet::from_values(I, {5, 1, 5, 16});
  CHECK(a.values() == std::vector<Value>{1, 5, 16});
  CHECK(a.membership().count() == a.size());
  CHECK(a.contains(Element{5}));
  CHECK_FALSE(a.contains(Element{6}));
  CHECK_FALSE(a.contains(Element{17}));
  CHECK_THROWS_AS(GroundSet::from_values(I, {0}), InvalidInput);
  CHECK_THROWS_AS(GroundSet(Ambient::product({4, 4}), {Element{4, 0}}), InvalidInput);
  auto shifted = GroundSet::from_values(Ambient::interval(256, 0), {0, 255});
  CHECK(shifted.size() == 2);
}

TEST_CASE("canonicalization is idempotent and moves basepoints to zero") {
  auto I = Ambient::interval(20);
  SumsetWitness w{Element{0}, {{Element{3}, Element{1}}, {Element{7}, Element{5}, Element{9}}}};
  auto c = canonicalize(w, I);
  CHECK(c.offset == Element{6});
  CHECK(c.summands[0] == std::vector<Element>{Element{0}, Element{2}});
  CHECK(c.summands[1] == std::vector<Element>{Element{0}, Element{2}, Element{4}});
  CHECK(canonicalize(c, I) == c);
  CHECK(c.value_set(I) == w.value_set(I));

  auto G = Ambient::product({5, 5});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, G.cardinality() - 1);
  for (int t = 0; t < 200; ++t) {
    SumsetWitness g{G.element_at(pick(rng)), {{G.element_at(pick(rng)), G.element_at(pick(rng))},
                                             {G.element_at(pick(rng)), G.element_at(pick(rng))}}};
    auto once = canonicalize(g, G);
    CHECK(canonicalize(once, G) == once);
    CHECK(once.value_set(G) == g.value_set(G));
    for (const auto& L : once.summands) CHECK(L.front() == G.zero());
  }
}

TEST_CASE("set files round-trip") {
  for (const auto& set : {GroundSet::from_values(Ambient::interval(16), {1, 2, 5, 11}),
                          GroundSet::from_values(Ambient::interval(256, 0), {0, 73, 147}),
                          GroundSet(Ambient::product({4, 4, 4}), {Element{1, 1, 1}, Element{3, 2, 2}})}) {
    std::stringstream ss;
    write_set(ss, set);
    CHECK(read_set(ss) == set);
  }
  std::stringstream in("# comment\n#ambient product 4,4,4\n1,3,2\n\n0,0,0\n");
  auto g = read_set(in);
  CHECK(g.size() == 2);
  CHECK(g.elements().front() == Element{0, 0, 0});
  std::stringstream bad("#ambient interval n=4\n1,2\n");
  CHECK_THROWS_AS(read_set(bad), StructuralError);
  std::stringstream none("1\n2\n");
  CHECK_THROWS_AS(read_set(none), InvalidInput);
  std::stringstream junk("#ambient interval n=4\nabc\n");
  CHECK_THROWS_AS(read_set(junk), InvalidInput);
}

TEST_CASE("freeness does not depend on the order of the signature entries") {
  std::mt19937_64 rng(11);
  auto I = Ambient::interval(20);
  std::bernoulli_distribution coin(0.35);
  for (int t = 0; t < 100; ++t) {
    std::vector<Value> vals;
    for (Value v = 1; v <= 20; ++v)
      if (coin(rng)) vals.push_back(v);
    auto a = GroundSet::from_values(I, vals);
    for (auto [x, y] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}, std::pair{3, 3}}) {
      auto fwd = contains_sumset(a, normalize_signature({x, y})).has_value();
      auto rev = contains_sumset(a, normalize_signature({y, x})).has_value();
      CHECK(fwd == rev);
    }
  }
}

}
