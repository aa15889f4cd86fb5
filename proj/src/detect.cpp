#include "lfree/detect.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "engine.hpp"
#include "lfree/error.hpp"

namespace lfree {

using detail::RawDecomposition;
using detail::ShiftEngine;

namespace {

std::optional<SumsetWitness> first_witness(const GroundSet& a, const Signature& sig,
                                           const std::vector<std::size_t>* through) {
  if (a.size() < 2) return std::nullopt;
  ShiftEngine eng(a.ambient(), sig);
  std::optional<SumsetWitness> found;
  eng.run(detail::indices_of(a), through, [&](const RawDecomposition& raw) {
    found = detail::to_witness(raw, a.ambient());
    return false;
  });
  return found;
}

// Splits the leading top-level shifts round-robin over worker threads and calls
// work(engine, filter) in each; falls back to one plain run when r == 1.
template <class Work>
void run_partitioned(const GroundSet& a, const Signature& sig, int threads, Work&& work) {
  const auto set = detail::indices_of(a);
  ShiftEngine probe(a.ambient(), sig);
  const auto tops = probe.top_shifts(set);
  const std::size_t nt = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)),
                                                                         std::max<std::size_t>(tops.size(), 1)));
  if (nt == 1 || sig.r() < 2) {
    work(probe, set, std::function<bool(std::size_t)>{});
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      try {
        ShiftEngine eng(a.ambient(), sig);
        std::function<bool(std::size_t)> filter = [&](std::size_t d) {
          auto rank = static_cast<std::size_t>(std::lower_bound(tops.begin(), tops.end(), d) - tops.begin());
          return rank % nt == t;
        };
        work(eng, set, filter);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void over_budget(std::uint64_t limit) {
  throw ResourceExceeded("decomposition budget of " + std::to_string(limit) +
                         " exceeded; raise --max-decompositions or LFREE_BUDGET");
}

}  // namespace

std::optional<SumsetWitness> contains_sumset(const GroundSet& a, const Signature& sig) {
  return first_witness(a, sig, nullptr);
}

std::optional<SumsetWitness> contains_sumset_through(const GroundSet& a, const Signature& sig, const Element& through) {
  if (!a.contains(through)) return std::nullopt;
  std::vector<std::size_t> q{a.ambient().index_of(through)};
  return first_witness(a, sig, &q);
}

void enumerate_sumsets(const GroundSet& a, const Signature& sig, const std::function<bool(const SumsetWitness&)>& visit,
                       const DetectOptions& options) {
  if (a.size() < 2) return;
  ShiftEngine eng(a.ambient(), sig);
  std::uint64_t produced = 0;
  eng.run(detail::indices_of(a), nullptr, [&](const RawDecomposition& raw) {
    if (++produced > options.max_decompositions) over_budget(options.max_decompositions);
    return visit(detail::to_witness(raw, a.ambient()));
  });
}

std::vector<SumsetWitness> list_sumsets(const GroundSet& a, const Signature& sig, const DetectOptions& options) {
  std::vector<SumsetWitness> out;
  enumerate_sumsets(
      a, sig,
      [&](const SumsetWitness& w) {
        out.push_back(w);
        return true;
      },
      options);
  return out;
}

ObstructionSummary summarize_obstructions(const GroundSet& a, const Signature& sig, const DetectOptions& options) {
  if (!a.ambient().is_interval()) throw PreconditionError("obstruction summaries need an interval ambient");
  ObstructionSummary out;
  if (a.size() < 2) return out;
  std::atomic<std::uint64_t> produced{0};
  std::mutex mu;
  std::set<std::vector<std::size_t>> value_sets;
  run_partitioned(a, sig, options.threads, [&](ShiftEngine& eng, const std::vector<std::size_t>& set,
                                               const std::function<bool(std::size_t)>& filter) {
    std::set<std::vector<std::size_t>> local;
    std::vector<std::size_t> sums;
    eng.run(
        set, nullptr,
        [&](const RawDecomposition& raw) {
          if (++produced > options.max_decompositions) over_budget(options.max_decompositions);
          detail::raw_sums(raw, a.ambient(), sums);
          std::sort(sums.begin(), sums.end());
          sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
          local.insert(sums);
          return true;
        },
        filter);
    std::lock_guard<std::mutex> lock(mu);
    value_sets.insert(local.begin(), local.end());
  });
  out.decompositions = produced.load();
  for (const auto& vs : value_sets) ++out.distinct_by_max[a.ambient().lo() + static_cast<Value>(vs.back())];
  return out;
}

std::vector<Value> obstruction_maxima(const GroundSet& a, const Signature& sig, const DetectOptions& options) {
  std::vector<Value> out;
  for (const auto& [mx, count] : summarize_obstructions(a, sig, options).distinct_by_max) out.push_back(mx);
  return out;
}

bool is_sidon(const GroundSet& a) {
  const auto& amb = a.ambient();
  const auto idx = detail::indices_of(a);
  Bitset seen(amb.cardinality());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (i == j) continue;
      std::size_t d;
      if (amb.is_interval()) {
        if (j < i) continue;
        d = idx[j] - idx[i];
      } else {
        d = amb.sub_index(idx[j], idx[i]);
      }
      if (seen.test(d)) return false;
      seen.set(d);
    }
  }
  return true;
}

bool is_hilbert_cube_free(const GroundSet& a, int r) {
  if (r < 2) throw InvalidInput("Hilbert cube dimension must be >= 2");
  if (r == 2) return is_sidon(a);
  if (r == 3) {
    // x + {0,a} + {0,b} + {0,c} lies in A iff A and A - c share a (2,2) sumset.
    const auto& amb = a.ambient();
    const auto idx = detail::indices_of(a);
    std::vector<std::size_t> shifts;
    for (auto s : idx)
      for (auto t : idx) {
        if (s == t) continue;
        if (amb.is_interval()) {
          if (s > t) shifts.push_back(s - t);
        } else {
          shifts.push_back(amb.sub_index(s, t));
        }
      }
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    const auto& bits = a.membership();
    for (auto c : shifts) {
      Bitset inter(amb.cardinality());
      std::size_t cnt = 0;
      for (auto x : idx) {
        std::size_t y = amb.is_interval() ? x + c : amb.add_index(x, c);
        if (bits.test(y)) {
          inter.set(x);
          ++cnt;
        }
      }
      if (cnt < 3) continue;
      if (!is_sidon(GroundSet::from_indices(amb, inter))) return false;
    }
    return true;
  }
  return !contains_sumset(a, Signature::normalize(std::vector<int>(static_cast<std::size_t>(r), 2))).has_value();
}

namespace {

Element scaled(const Element& e, int k, const Ambient& amb) {
  Element acc = amb.zero();
  for (int i = 0; i < k; ++i) acc = amb.add(acc, e);
  return acc;
}

}  // namespace

IndexedMultiset index_sums(const SumsetWitness& w, const Signature& sig, const Ambient& ambient) {
  if (static_cast<int>(w.summands.size()) != sig.r()) throw StructuralError("witness has the wrong number of summands");
  IndexedMultiset x{sig, ambient, {}};
  const auto r = static_cast<std::size_t>(sig.r());
  std::vector<int> idx(r, 1);
  while (true) {
    Element s = w.offset;
    for (std::size_t k = 0; k < r; ++k) s = ambient.add(s, w.summands[k].at(static_cast<std::size_t>(idx[k] - 1)));
    x.values.emplace(idx, s);
    std::size_t k = r;
    while (k > 0 && idx[k - 1] == sig[k - 1]) idx[--k] = 1;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return x;
}

std::optional<std::vector<std::vector<Element>>> verify_multiset(const IndexedMultiset& x) {
  const auto& sig = x.signature;
  const auto& amb = x.ambient;
  const auto r = static_cast<std::size_t>(sig.r());
  if (x.values.size() != static_cast<std::size_t>(sig.product()))
    throw StructuralError("multiset has " + std::to_string(x.values.size()) + " entries, expected " +
                          std::to_string(sig.product()));
  for (const auto& [key, v] : x.values) {
    if (key.size() != r) throw StructuralError("multi-index of wrong length");
    for (std::size_t s = 0; s < r; ++s)
      if (key[s] < 1 || key[s] > sig[s]) throw StructuralError("multi-index out of range");
  }
  auto axis = [&](std::size_t s, int i) -> const Element& {
    std::vector<int> k(r, 1);
    k[s] = i;
    return x.values.at(k);
  };
  for (std::size_t s = 0; s < r; ++s)
    for (int i = 1; i <= sig[s]; ++i)
      for (int j = i + 1; j <= sig[s]; ++j)
        if (axis(s, i) == axis(s, j)) return std::nullopt;
  const Element& base = x.values.at(std::vector<int>(r, 1));
  const Element shift = scaled(base, static_cast<int>(r) - 1, amb);
  for (const auto& [key, v] : x.values) {
    int off = 0;
    for (auto c : key) off += (c != 1);
    if (off < 2) continue;
    Element rhs = amb.zero();
    for (std::size_t s = 0; s < r; ++s) rhs = amb.add(rhs, axis(s, key[s]));
    if (amb.add(v, shift) != rhs) return std::nullopt;
  }
  std::vector<std::vector<Element>> out(r);
  for (int i = 1; i <= sig[0]; ++i) out[0].push_back(axis(0, i));
  for (std::size_t s = 1; s < r; ++s)
    for (int i = 1; i <= sig[s]; ++i) out[s].push_back(amb.sub(axis(s, i), base));
  return out;
}

namespace {

template <class F>
void for_each_tuple(const std::vector<std::vector<Value>>& summands, F&& f) {
  const std::size_t r = summands.size();
  for (const auto& L : summands)
    if (L.empty()) return;
  std::vector<std::size_t> pos(r, 0);
  while (true) {
    if (!f(pos)) return;
    std::size_t k = r;
    while (k > 0 && pos[k - 1] + 1 == summands[k - 1].size()) pos[--k] = 0;
    if (k == 0) return;
    ++pos[k - 1];
  }
}

}  // namespace

bool is_degenerate(const std::vector<std::vector<Value>>& summands) {
  std::unordered_set<Value> sums;
  std::size_t total = 0;
  for_each_tuple(summands, [&](const std::vector<std::size_t>& pos) {
    Value s = 0;
    for (std::size_t k = 0; k < pos.size(); ++k) s += summands[k][pos[k]];
    sums.insert(s);
    ++total;
    return true;
  });
  return sums.size() < total;
}

std::array<Value, 3> ap3_of_degenerate(const std::vector<std::vector<Value>>& summands) {
  std::map<Value, std::vector<std::size_t>> first;
  std::optional<std::array<Value, 3>> ap;
  for_each_tuple(summands, [&](const std::vector<std::size_t>& pos) {
    Value s = 0;
    for (std::size_t k = 0; k < pos.size(); ++k) s += summands[k][pos[k]];
    auto [it, fresh] = first.emplace(s, pos);
    if (fresh) return true;
    const auto& y = it->second;
    std::size_t k = 0;
    while (y[k] == pos[k]) ++k;
    const Value xk = summands[k][pos[k]];
    const Value yk = summands[k][y[k]];
    // Swapping coordinate k between the colliding tuples gives s -+ (xk - yk).
    Value lo = s - (xk - yk), hi = s + (xk - yk);
    if (lo > hi) std::swap(lo, hi);
    ap = std::array<Value, 3>{lo, s, hi};
    return false;
  });
  if (!ap) throw PreconditionError("sumset is not degenerate");
  return *ap;
}

SumsetCount count_all_sumsets(Value n, const Signature& sig, const DetectOptions& options) {
  if (n < 1) throw InvalidInput("n must be positive");
  const Ambient amb = Ambient::interval(n);
  Bitset full(amb.cardinality());
  for (std::size_t i = 0; i < amb.cardinality(); ++i) full.set(i);
  const GroundSet a = GroundSet::from_indices(amb, full);
  SumsetCount out;
  if (a.size() < 2) return out;
  std::atomic<std::uint64_t> produced{0};
  std::mutex mu;
  std::unordered_set<Bitset, BitsetHash> value_sets;
  run_partitioned(a, sig, options.threads, [&](ShiftEngine& eng, const std::vector<std::size_t>& set,
                                               const std::function<bool(std::size_t)>& filter) {
    std::unordered_set<Bitset, BitsetHash> local;
    std::vector<std::size_t> sums;
    eng.run(
        set, nullptr,
        [&](const RawDecomposition& raw) {
          if (++produced > options.max_decompositions) over_budget(options.max_decompositions);
          detail::raw_sums(raw, amb, sums);
          Bitset vs(amb.cardinality());
          for (auto s : sums) vs.set(s);
          local.insert(std::move(vs));
          return true;
        },
        filter);
    std::lock_guard<std::mutex> lock(mu);
    value_sets.insert(local.begin(), local.end());
  });
  out.decompositions = produced.load();
  out.distinct_value_sets = value_sets.size();
  return out;
}

}  // namespace lfree
