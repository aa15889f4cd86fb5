#include "lfree/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "lfree/error.hpp"

namespace lfree {

namespace {

void check_group(const Ambient& g, int r, const HypergraphOptions& options) {
  if (!g.is_product()) throw InvalidInput("Cayley hypergraphs need a product-of-cyclic-groups ambient");
  if (r < 2) throw InvalidInput("uniformity r must be >= 2");
  const double n = static_cast<double>(g.cardinality());
  double subsets = 1;
  for (int i = 0; i < r; ++i) subsets = std::max(0.0, subsets * (n - i) / (i + 1));
  if (subsets > static_cast<double>(options.max_subsets))
    throw ResourceExceeded("C(|G|, r) = " + std::to_string(static_cast<long double>(subsets)) +
                           " r-subsets exceed the hypergraph budget");
}

// Visits every r-subset of [0, n) in lexicographic order with the index of its sum.
template <class F>
void for_each_rsubset(const Ambient& g, int r, F&& f) {
  const std::size_t n = g.cardinality();
  const auto ru = static_cast<std::size_t>(r);
  if (n < ru) return;
  std::vector<std::size_t> pick(ru);
  for (std::size_t i = 0; i < ru; ++i) pick[i] = i;
  while (true) {
    std::size_t s = pick[0];
    for (std::size_t i = 1; i < ru; ++i) s = g.add_index(s, pick[i]);
    f(pick, s);
    std::size_t i = ru;
    while (i > 0 && pick[i - 1] == n - ru + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < ru; ++j) pick[j] = pick[j - 1] + 1;
  }
}

using Tuple = std::vector<std::size_t>;

std::optional<std::vector<Tuple>> find_classes(const std::vector<Tuple>& edges, const std::vector<int>& lens,
                                               std::size_t at) {
  const std::size_t need_here = static_cast<std::size_t>(lens[at]);
  if (at + 1 == lens.size()) {
    Tuple verts;
    for (const auto& e : edges) verts.push_back(e[0]);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() < need_here) return std::nullopt;
    verts.resize(need_here);
    return std::vector<Tuple>{verts};
  }
  std::size_t need_rest = 1;
  for (std::size_t i = at + 1; i < lens.size(); ++i) need_rest *= static_cast<std::size_t>(lens[i]);

  // link[v]: sorted edges through v with v removed
  std::vector<std::pair<std::size_t, std::vector<Tuple>>> links;
  {
    std::vector<std::pair<std::size_t, Tuple>> flat;
    for (const auto& e : edges)
      for (std::size_t i = 0; i < e.size(); ++i) {
        Tuple rest;
        for (std::size_t j = 0; j < e.size(); ++j)
          if (j != i) rest.push_back(e[j]);
        flat.emplace_back(e[i], std::move(rest));
      }
    std::sort(flat.begin(), flat.end());
    for (auto& [v, t] : flat) {
      if (links.empty() || links.back().first != v) links.push_back({v, {}});
      links.back().second.push_back(std::move(t));
    }
  }

  Tuple chosen;
  std::optional<std::vector<Tuple>> result;
  auto rec = [&](auto& self, std::size_t from, const std::vector<Tuple>& inter) -> bool {
    if (chosen.size() == need_here) {
      std::vector<Tuple> rest;
      for (const auto& t : inter) {
        bool touches = false;
        for (auto v : t) touches |= std::binary_search(chosen.begin(), chosen.end(), v);
        if (!touches) rest.push_back(t);
      }
      if (rest.size() < need_rest) return false;
      auto sub = find_classes(rest, lens, at + 1);
      if (!sub) return false;
      result = std::vector<Tuple>{chosen};
      result->insert(result->end(), sub->begin(), sub->end());
      return true;
    }
    for (std::size_t i = from; i < links.size(); ++i) {
      std::vector<Tuple> next;
      if (chosen.empty()) {
        next = links[i].second;
      } else {
        std::set_intersection(inter.begin(), inter.end(), links[i].second.begin(), links[i].second.end(),
                              std::back_inserter(next));
      }
      if (next.size() < need_rest) continue;
      chosen.push_back(links[i].first);
      if (self(self, i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(rec, 0, {});
  return result;
}

}  // namespace

Hypergraph cayley_hypergraph(const Ambient& g, const GroundSet& a, int r, const HypergraphOptions& options) {
  check_group(g, r, options);
  if (!(a.ambient() == g)) throw InvalidInput("A does not live in the given group");
  Hypergraph h{g.cardinality(), r, {}};
  const auto& in_a = a.membership();
  for_each_rsubset(g, r, [&](const std::vector<std::size_t>& pick, std::size_t s) {
    if (in_a.test(s)) h.edges.push_back(pick);
  });
  return h;
}

std::vector<std::uint64_t> sum_representation_counts(const Ambient& g, int r, const HypergraphOptions& options) {
  check_group(g, r, options);
  std::vector<std::uint64_t> counts(g.cardinality(), 0);
  for_each_rsubset(g, r, [&](const std::vector<std::size_t>&, std::size_t s) { ++counts[s]; });
  return counts;
}

std::optional<std::vector<std::vector<std::size_t>>> contains_complete_rpartite(const Hypergraph& h,
                                                                                const Signature& sig) {
  if (h.r != sig.r()) throw InvalidInput("hypergraph uniformity " + std::to_string(h.r) + " differs from r = " +
                                         std::to_string(sig.r()));
  if (static_cast<std::int64_t>(h.n) < sig.sum()) return std::nullopt;
  std::vector<Tuple> edges = h.edges;
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return find_classes(edges, sig.lengths(), 0);
}

TranslateResult best_translate(const Ambient& g, const GroundSet& a, int r, const HypergraphOptions& options) {
  if (!(a.ambient() == g)) throw InvalidInput("A does not live in the given group");
  const auto reps = sum_representation_counts(g, r, options);
  TranslateResult res;
  res.per_translate.assign(g.cardinality(), 0);
  const auto idx = a.membership().to_indices();
  std::size_t best = 0;
  for (std::size_t x = 0; x < g.cardinality(); ++x) {
    std::uint64_t c = 0;
    for (auto i : idx) c += reps[g.add_index(i, x)];
    res.per_translate[x] = c;
    if (c > res.per_translate[best]) best = x;
  }
  res.x = g.element_at(best);
  res.edge_count = res.per_translate[best];
  return res;
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  std::optional<Hypergraph> h;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line[b] == '#') {
      if (line.compare(b, 11, "#hypergraph") == 0) {
        std::stringstream ss(line.substr(b + 11));
        std::string kv;
        long long n = -1, r = -1;
        while (ss >> kv) {
          auto eq = kv.find('=');
          if (eq == std::string::npos) throw InvalidInput("bad hypergraph header field: " + kv);
          long long v = 0;
          try {
            v = std::stoll(kv.substr(eq + 1));
          } catch (const std::exception&) {
            throw InvalidInput("bad hypergraph header field: " + kv);
          }
          if (kv.substr(0, eq) == "n") n = v;
          else if (kv.substr(0, eq) == "r") r = v;
          else throw InvalidInput("unknown hypergraph header field: " + kv);
        }
        if (n < 0 || r < 1) throw InvalidInput("hypergraph header needs n=<count> r=<uniformity>");
        h = Hypergraph{static_cast<std::size_t>(n), static_cast<int>(r), {}};
      }
      continue;
    }
    if (!h) throw InvalidInput("hypergraph file lacks a '#hypergraph' header");
    std::stringstream ss(line);
    Tuple e;
    std::string tok;
    while (ss >> tok) {
      long long v = 0;
      std::size_t pos = 0;
      try {
        v = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        throw InvalidInput("not a vertex index: '" + tok + "'");
      }
      if (pos != tok.size() || v < 0 || static_cast<std::size_t>(v) >= h->n)
        throw InvalidInput("vertex out of range: '" + tok + "'");
      e.push_back(static_cast<std::size_t>(v));
    }
    std::sort(e.begin(), e.end());
    if (e.size() != static_cast<std::size_t>(h->r) || std::adjacent_find(e.begin(), e.end()) != e.end())
      throw StructuralError("edge '" + line + "' is not an r-set of distinct vertices");
    h->edges.push_back(std::move(e));
  }
  if (!h) throw InvalidInput("hypergraph file lacks a '#hypergraph' header");
  std::sort(h->edges.begin(), h->edges.end());
  h->edges.erase(std::unique(h->edges.begin(), h->edges.end()), h->edges.end());
  return *h;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "#hypergraph n=" << h.n << " r=" << h.r << '\n';
  for (const auto& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

}  // namespace lfree
