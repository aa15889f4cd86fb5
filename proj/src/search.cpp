#include "lfree/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>

#include "engine.hpp"
#include "lfree/error.hpp"

namespace lfree {

using detail::RawDecomposition;
using detail::ShiftEngine;

namespace {

class Searcher {
 public:
  Searcher(const Ambient& amb, const Signature& sig, const SearchOptions& opt)
      : amb_(amb), sig_(sig), opt_(opt), engine_(amb, sig) {}

  // True iff set (sorted) stays free, given that set without c is free.
  bool free_with(const std::vector<std::size_t>& set, std::size_t c) {
    std::vector<std::size_t> q{c};
    bool hit = false;
    engine_.run(set, &q, [&](const RawDecomposition&) {
      hit = true;
      return false;
    });
    return !hit;
  }

  void tick() {
    if (++nodes_ > opt_.max_nodes)
      throw ResourceExceeded("search node budget of " + std::to_string(opt_.max_nodes) +
                             " exceeded; raise --max-nodes or LFREE_BUDGET");
  }

  static std::vector<std::size_t> with(const std::vector<std::size_t>& s, std::size_t c) {
    std::vector<std::size_t> out(s);
    out.insert(std::upper_bound(out.begin(), out.end(), c), c);
    return out;
  }

  // Interval: is there a free set of size target inside [0, m) containing 0 and m-1?
  bool interval_dfs(const std::vector<std::size_t>& s, const std::vector<std::size_t>& allowed, std::size_t m,
                    std::size_t target) {
    tick();
    if (s.size() >= target) {
      found_ = s;
      return true;
    }
    for (std::size_t i = 0; i < allowed.size(); ++i) {
      const std::size_t c = allowed[i];
      // everything chosen from here on lies in [c, m-1], together with m-1
      if (s.size() - 1 + table_[m - c] < target) {
        ++pruned_["table"];
        break;
      }
      if (s.size() + (allowed.size() - i) < target) {
        ++pruned_["candidates"];
        break;
      }
      auto next = with(s, c);
      std::vector<std::size_t> keep;
      for (std::size_t j = i + 1; j < allowed.size(); ++j)
        if (free_with(with(next, allowed[j]), allowed[j])) keep.push_back(allowed[j]);
        else ++pruned_["conflict"];
      if (interval_dfs(next, keep, m, target)) return true;
    }
    return false;
  }

  void interval_search(std::size_t n) {
    // table_[len] = F(len), table_[0] = 0
    table_.assign(n + 1, 0);
    std::vector<std::size_t> best{0};
    table_[1] = 1;
    for (std::size_t m = 2; m <= n; ++m) {
      const std::size_t target = table_[m - 1] + 1;
      table_[m] = table_[m - 1];
      std::vector<std::size_t> s{0, m - 1};
      tick();
      if (!free_with(s, m - 1)) continue;
      std::vector<std::size_t> allowed;
      for (std::size_t c = 1; c + 1 < m; ++c)
        if (free_with(with(s, c), c)) allowed.push_back(c);
      if (interval_dfs(s, allowed, m, target)) {
        table_[m] = target;
        best = found_;
      }
    }
    found_ = best;
  }

  void group_dfs(const std::vector<std::size_t>& s, const std::vector<std::size_t>& allowed) {
    tick();
    if (s.size() > found_.size()) found_ = s;
    for (std::size_t i = 0; i < allowed.size(); ++i) {
      if (s.size() + (allowed.size() - i) <= found_.size()) {
        ++pruned_["candidates"];
        return;
      }
      const std::size_t c = allowed[i];
      auto next = with(s, c);
      std::vector<std::size_t> keep;
      for (std::size_t j = i + 1; j < allowed.size(); ++j)
        if (free_with(with(next, allowed[j]), allowed[j])) keep.push_back(allowed[j]);
        else ++pruned_["conflict"];
      group_dfs(next, keep);
    }
  }

  void group_search() {
    std::vector<std::size_t> s{0};
    found_ = s;
    std::vector<std::size_t> allowed;
    for (std::size_t c = 1; c < amb_.cardinality(); ++c)
      if (free_with(with(s, c), c)) allowed.push_back(c);
    group_dfs(s, allowed);
  }

  const Ambient& amb_;
  Signature sig_;
  SearchOptions opt_;
  ShiftEngine engine_;
  std::uint64_t nodes_ = 0;
  std::map<std::string, std::uint64_t> pruned_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> found_;
};

}  // namespace

SearchReport max_free_set(const Ambient& ambient, const Signature& sig, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (ambient.cardinality() > options.max_cardinality && !options.allow_large)
    throw ResourceExceeded("ambient of size " + std::to_string(ambient.cardinality()) + " exceeds the search guard of " +
                           std::to_string(options.max_cardinality) + "; pass an explicit override");
  SearchReport rep{ambient, sig, 0, GroundSet(ambient), 0, 0, {}, {}};
  Bitset members(ambient.cardinality());
  if (ambient.is_interval() && sig.r() == 1) {
    // Any l-1 elements are free and any l are not.
    const auto n = ambient.cardinality();
    const auto f = std::min<std::size_t>(n, static_cast<std::size_t>(sig[0] - 1));
    for (std::size_t i = 0; i < f; ++i) members.set(i);
    for (std::size_t m = 1; m <= n; ++m) rep.table.push_back(std::min<std::size_t>(m, static_cast<std::size_t>(sig[0] - 1)));
    rep.pruned_by["closed_form"] = 1;
  } else {
    Searcher s(ambient, sig, options);
    if (ambient.is_interval()) {
      s.interval_search(ambient.cardinality());
      rep.table.assign(s.table_.begin() + 1, s.table_.end());
    } else {
      s.group_search();
    }
    for (auto i : s.found_) members.set(i);
    rep.nodes = s.nodes_;
    rep.pruned_by = s.pruned_;
  }
  rep.witness = GroundSet::from_indices(ambient, members);
  rep.best_size = rep.witness.size();
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

void require_r2(const Signature& sig, const char* what) {
  if (sig.r() < 2) throw InvalidInput(std::string(what) + " needs r >= 2");
}

}  // namespace

double upper_bound_leading(Value n, const Signature& sig) {
  require_r2(sig, "upper_bound_leading");
  const double pp = static_cast<double>(sig.prefix_product());
  const double lr = static_cast<double>(sig[static_cast<std::size_t>(sig.r() - 1)]);
  return std::pow(lr - 1.0, 1.0 / pp) * std::pow(static_cast<double>(n), 1.0 - 1.0 / pp);
}

Rational lower_bound_exponent(const Signature& sig) {
  require_r2(sig, "lower_bound_exponent");
  const std::int64_t den = sig.product() - 1;
  const std::int64_t num = den - (sig.sum() - sig.r());
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

double turan_upper_bound(Value n, const Signature& sig) {
  require_r2(sig, "turan_upper_bound");
  const double pp = static_cast<double>(sig.prefix_product());
  const double lr = static_cast<double>(sig[static_cast<std::size_t>(sig.r() - 1)]);
  double fact = 1;
  for (int i = 2; i <= sig.r(); ++i) fact *= i;
  return std::pow(lr - 1.0, 1.0 / pp) / fact * std::pow(static_cast<double>(n), sig.r() - 1.0 / pp);
}

OverlapResult overlap_check(const GroundSet& a, const GroundSet& b, const GroundSet& x, int r) {
  if (r < 1) throw InvalidInput("r must be >= 1");
  if (a.ambient().kind() != b.ambient().kind() || a.ambient().kind() != x.ambient().kind())
    throw StructuralError("A, B and X must live in the same kind of ambient");
  if (a.ambient().is_product() && !(a.ambient() == b.ambient() && a.ambient() == x.ambient()))
    throw StructuralError("A, B and X must live in the same group");
  if (x.empty()) throw PreconditionError("X is empty");
  const Ambient& amb = x.ambient();
  // The sum of two interval elements is formed with integer arithmetic.
  for (const auto& p : a.elements())
    for (const auto& q : b.elements())
      if (!x.contains(amb.is_interval() ? Element{p.value() + q.value()} : amb.add(p, q)))
        throw PreconditionError("A + B is not contained in X");

  OverlapResult res;
  const double sigma = static_cast<double>(a.size()) * static_cast<double>(b.size()) / static_cast<double>(x.size());
  double rhs = 1;
  for (int i = 0; i < r; ++i) rhs *= (sigma - i) / (i + 1);
  res.rhs = rhs;

  const auto& bs = b.elements();
  const std::size_t rr = static_cast<std::size_t>(r);
  if (bs.size() < rr) return res;
  // Intersections are tracked as indices into X.
  std::vector<Bitset> translate;
  for (const auto& q : bs) {
    Bitset t(amb.cardinality());
    for (const auto& p : a.elements())
      t.set(amb.index_of(amb.is_interval() ? Element{p.value() + q.value()} : amb.add(p, q)));
    translate.push_back(std::move(t));
  }
  std::uint64_t total = 0;
  std::vector<std::size_t> pick(rr);
  std::vector<Bitset> acc(rr + 1, Bitset(amb.cardinality()));
  for (std::size_t i = 0; i < amb.cardinality(); ++i) acc[0].set(i);
  auto rec = [&](auto& self, std::size_t depth, std::size_t from) -> void {
    if (depth == rr) {
      total += acc[depth].count();
      return;
    }
    for (std::size_t j = from; j + (rr - depth) <= bs.size(); ++j) {
      acc[depth + 1] = acc[depth];
      acc[depth + 1] &= translate[j];
      self(self, depth + 1, j + 1);
    }
  };
  rec(rec, 0, 0);
  res.lhs = static_cast<double>(total) / static_cast<double>(x.size());
  return res;
}

}  // namespace lfree
