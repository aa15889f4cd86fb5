#pragma once

// Brute-force reference implementations over small ambients (at most 64
// elements), written independently of the shift-intersection engine: every
// canonical summand tuple and every offset is tried directly.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

struct Decomp {
  Mask values = 0;   // bit i <-> value lo + i (interval) or residue i (cyclic)
  int offset = 0;
  std::vector<std::vector<int>> summands;
};

inline void subsets_with_zero(int span, int ell, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur{0};
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == ell) {
      f(cur);
      return;
    }
    for (int v = next; v < span; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

// All canonical decompositions (min of each summand 0) with every sum in [1, n].
inline std::vector<Decomp> interval_decomps(int n, const std::vector<int>& sig) {
  std::vector<Decomp> out;
  std::vector<std::vector<int>> ls;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int reach) {
    if (i == sig.size()) {
      std::vector<int> sums{0};
      for (const auto& L : ls) {
        std::vector<int> nx;
        for (int a : sums)
          for (int b : L) nx.push_back(a + b);
        sums = nx;
      }
      for (int x = 1; x + reach <= n; ++x) {
        Decomp d;
        d.offset = x;
        d.summands = ls;
        for (int s : sums) d.values |= Mask{1} << (x + s - 1);
        out.push_back(d);
      }
      return;
    }
    subsets_with_zero(n, sig[i], [&](const std::vector<int>& L) {
      if (reach + L.back() > n - 1) return;
      ls.push_back(L);
      rec(i + 1, reach + L.back());
      ls.pop_back();
    });
  };
  rec(0, 0);
  return out;
}

// All decompositions in Z_n with each summand containing 0 and any offset.
inline std::vector<Decomp> cyclic_decomps(int n, const std::vector<int>& sig) {
  std::vector<Decomp> out;
  std::vector<std::vector<int>> ls;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sig.size()) {
      std::vector<int> sums{0};
      for (const auto& L : ls) {
        std::vector<int> nx;
        for (int a : sums)
          for (int b : L) nx.push_back((a + b) % n);
        sums = nx;
      }
      for (int x = 0; x < n; ++x) {
        Decomp d;
        d.offset = x;
        d.summands = ls;
        for (int s : sums) d.values |= Mask{1} << ((x + s) % n);
        out.push_back(d);
      }
      return;
    }
    // 0-containing l-subsets: 0 plus any (l-1)-subset of the nonzero residues.
    subsets_with_zero(n, sig[i], [&](const std::vector<int>& L) {
      ls.push_back(L);
      rec(i + 1);
      ls.pop_back();
    });
  };
  rec(0);
  return out;
}

inline bool contains_any(Mask set, const std::vector<Decomp>& ds) {
  for (const auto& d : ds)
    if ((d.values & ~set) == 0) return true;
  return false;
}

inline std::size_t count_inside(Mask set, const std::vector<Decomp>& ds) {
  std::size_t c = 0;
  for (const auto& d : ds)
    if ((d.values & ~set) == 0) ++c;
  return c;
}

// Maximum free subset by exhaustive extension of free sets (free sets are
// closed under taking subsets, so every free set is reached).
struct Exhaustive {
  int best = 0;
  Mask arg = 0;
  std::vector<Mask> all_best;
};

inline Exhaustive max_free(int n, const std::vector<Decomp>& ds, bool collect_all = false) {
  std::vector<std::vector<Mask>> by_top(static_cast<std::size_t>(n));
  for (const auto& d : ds) by_top[static_cast<std::size_t>(63 - std::countl_zero(d.values))].push_back(d.values);
  for (auto& v : by_top) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  Exhaustive ex;
  std::function<void(Mask, int, int)> rec = [&](Mask s, int size, int next) {
    if (size > ex.best) {
      ex.best = size;
      ex.arg = s;
      ex.all_best.clear();
    }
    if (collect_all && size == ex.best) ex.all_best.push_back(s);
    for (int e = next; e < n; ++e) {
      Mask t = s | (Mask{1} << e);
      bool ok = true;
      for (Mask m : by_top[static_cast<std::size_t>(e)])
        if ((m & ~t) == 0) {
          ok = false;
          break;
        }
      if (ok) rec(t, size + 1, e + 1);
    }
  };
  rec(0, 0, 0);
  return ex;
}

inline std::vector<int> mask_values(Mask m, int lo) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) out.push_back(lo + i);
  return out;
}

inline Mask random_subset(std::mt19937_64& rng, int n, int max_size) {
  std::uniform_int_distribution<int> sz(0, max_size);
  int k = sz(rng);
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::shuffle(pool.begin(), pool.end(), rng);
  Mask m = 0;
  for (int i = 0; i < k; ++i) m |= Mask{1} << pool[static_cast<std::size_t>(i)];
  return m;
}

inline bool ap3_free(const std::vector<long long>& sorted_values) {
  std::vector<long long> v = sorted_values;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      long long z = 2 * v[j] - v[i];
      if (std::binary_search(v.begin() + static_cast<long>(j) + 1, v.end(), z)) return false;
    }
  return true;
}

}  // namespace oracle
