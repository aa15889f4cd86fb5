#include <cmath>

#include "doctest.h"
#include "lfree/construct.hpp"
#include "lfree/detect.hpp"
#include "lfree/error.hpp"
#include "lfree/sequences.hpp"
#include "oracle.hpp"

using namespace lfree;

namespace {

std::vector<Value> oracle_greedy(int n, const std::vector<int>& sig) {
  const auto ds = oracle::interval_decomps(n, sig);
  oracle::Mask set = 0;
  std::vector<Value> out;
  for (int c = 1; c <= n; ++c) {
    const oracle::Mask next = set | (oracle::Mask{1} << (c - 1));
    if (!oracle::contains_any(next, ds)) {
      set = next;
      out.push_back(c);
    }
  }
  return out;
}

Value pow4(int m) { return Value{1} << (2 * m); }

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("greedy Sidon sequence") {
  auto s = greedy_sequence(Signature::normalize({2, 2}), 45);
  CHECK(s.terms == std::vector<Value>{1, 2, 4, 8, 13, 21, 31, 45});
  CHECK(s.provenance == "greedy");
  CHECK(greedy_sequence(Signature::normalize({2, 2}), 44).terms.size() == 7);
}

TEST_CASE("greedy matches the brute-force greedy") {
  for (auto sig : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 4}}) {
    const int n = sig.size() == 3 ? 30 : 40;
    CAPTURE(sig.size());
    CHECK(greedy_sequence(Signature::normalize(sig), n).terms == oracle_greedy(n, sig));
  }
  auto s23 = greedy_sequence(Signature::normalize({2, 3}), 5);
  CHECK(s23.terms == std::vector<Value>{1, 2, 3, 5});
}

TEST_CASE("greedy with r = 1 stops after l - 1 terms") {
  for (int l = 2; l <= 6; ++l) {
    auto s = greedy_sequence(Signature::normalize({l}), 50);
    REQUIRE(s.terms.size() == static_cast<std::size_t>(l - 1));
    for (int i = 0; i < l - 1; ++i) CHECK(s.terms[static_cast<std::size_t>(i)] == i + 1);
  }
  CHECK_THROWS_AS(greedy_sequence(Signature::normalize({2, 2}), 0), InvalidInput);
}

TEST_CASE("every greedy prefix is free") {
  for (auto sig : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2}}) {
    const auto g = Signature::normalize(sig);
    auto s = greedy_sequence(g, 120);
    const auto amb = Ambient::interval(120);
    for (std::size_t k = 1; k <= std::min<std::size_t>(s.terms.size(), 30); ++k) {
      std::vector<Value> prefix(s.terms.begin(), s.terms.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK_FALSE(contains_sumset(GroundSet::from_values(amb, prefix), g));
    }
  }
}

TEST_CASE("counting function") {
  SequencePrefix a{{1, 2, 4, 8, 13, 21, 31, 45}, Signature::normalize({2, 2}), "greedy"};
  CHECK(counting_function(a, 8) == 4);
  CHECK(counting_function(a, 0) == 0);
  CHECK(counting_function(a, 1000) == 8);
  for (Value x = 1; x <= 60; ++x) {
    auto d = counting_function(a, x) - counting_function(a, x - 1);
    CHECK((d == 0 || d == 1));
  }
}

TEST_CASE("liminf statistic") {
  SequencePrefix a{{1, 2, 4, 8, 13, 21, 31, 45}, Signature::normalize({2, 2}), "greedy"};
  auto st = liminf_statistic(a, {45, 3});
  CHECK(st[0] == doctest::Approx(2.3267831840227657).epsilon(1e-12));
  CHECK(st[1] == doctest::Approx(2 * std::sqrt(3 * std::log(3.0)) / 3).epsilon(1e-12));
  SequencePrefix empty{{}, Signature::normalize({2, 3}), "greedy"};
  CHECK(liminf_statistic(empty, {10, 100}) == std::vector<double>{0, 0});
  // (2,2,3): exponent 1/(2*2)
  SequencePrefix b{{5}, Signature::normalize({2, 2, 3}), "greedy"};
  CHECK(liminf_statistic(b, {10})[0] == doctest::Approx(std::pow(10 * std::log(10.0), 0.25) / 10));
  CHECK_THROWS_AS(liminf_statistic(a, {1}), InvalidInput);
  SequencePrefix r1{{1}, Signature::normalize({3}), "greedy"};
  CHECK_THROWS_AS(liminf_statistic(r1, {10}), InvalidInput);
}

TEST_CASE("dyadic exponent") {
  CHECK(dyadic_alpha(Signature::normalize({2, 2}), 0.1) == doctest::Approx(2.0 / 3 + 0.05));
  CHECK(dyadic_alpha(Signature::normalize({2, 3}), 0.1) == doctest::Approx(3.0 / 5 + 0.05));
  CHECK(dyadic_alpha(Signature::normalize({2, 2, 2}), 0.2) == doctest::Approx(3.0 / 7 + 0.1));
  CHECK_THROWS_AS(dyadic_alpha(Signature::normalize({4}), 0.1), InvalidInput);
}

TEST_CASE("dyadic blocks are AP3-free across blocks") {
  std::vector<long long> all;
  for (int m = 1; m <= 6; ++m)
    for (Value v : behrend_values(pow4(m))) all.push_back(pow4(m + 2) + v);
  CHECK(oracle::ap3_free(all));
}

TEST_CASE("dyadic construction") {
  for (auto sig : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2}, {3, 3}}) {
    const auto g = Signature::normalize(sig);
    for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
      DyadicParams p{0.1, 1, 6, seed};
      auto res = dyadic_random_sequence(g, p);
      CHECK(res.experimental == (sig == std::vector<int>{3, 3}));
      REQUIRE(res.blocks.size() == 6);
      std::size_t kept = 0;
      for (const auto& b : res.blocks) {
        CHECK(b.lo == pow4(b.m + 2));
        CHECK(b.bad + b.retained == b.sampled);
        CHECK(b.obstructions >= b.bad);
        kept += b.retained;
      }
      CHECK(kept == res.sequence.terms.size());
      CHECK(std::is_sorted(res.sequence.terms.begin(), res.sequence.terms.end()));
      const auto amb = Ambient::interval(pow4(8) + pow4(6));
      CHECK_FALSE(contains_sumset(GroundSet::from_values(amb, res.sequence.terms), g));

      auto again = dyadic_random_sequence(g, p, DetectOptions{50'000'000, 4});
      CHECK(again.sequence.terms == res.sequence.terms);
      CHECK(again.decompositions == res.decompositions);
      for (std::size_t i = 0; i < res.blocks.size(); ++i) {
        CHECK(again.blocks[i].sampled == res.blocks[i].sampled);
        CHECK(again.blocks[i].obstructions == res.blocks[i].obstructions);
      }
    }
  }
}

TEST_CASE("larger epsilon samples a subset under the same seed") {
  const auto g = Signature::normalize({2, 2});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto dense = dyadic_random_sequence(g, {0.01, 1, 5, seed});
    auto sparse = dyadic_random_sequence(g, {1.0, 1, 5, seed});
    for (std::size_t i = 0; i < dense.blocks.size(); ++i) CHECK(sparse.blocks[i].sampled <= dense.blocks[i].sampled);
  }
}

TEST_CASE("dyadic parameter validation") {
  const auto g = Signature::normalize({2, 2});
  CHECK_THROWS_AS(dyadic_random_sequence(g, {0.0, 1, 4, 1}), InvalidInput);
  CHECK_THROWS_AS(dyadic_random_sequence(g, {0.1, 0, 4, 1}), InvalidInput);
  CHECK_THROWS_AS(dyadic_random_sequence(g, {0.1, 5, 4, 1}), InvalidInput);
  CHECK_THROWS_AS(dyadic_random_sequence(g, {0.1, 1, 13, 1}), InvalidInput);
}

}  // TEST_SUITE
