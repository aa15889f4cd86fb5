#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "lfree/bitset.hpp"
#include "lfree/core.hpp"

namespace lfree::detail {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// A decomposition in carrier-index coordinates. Summand entries are shift
// indices: plain differences for intervals, element indices for products.
// Every summand contains shift 0.
struct RawDecomposition {
  std::size_t offset = 0;
  std::vector<std::vector<std::size_t>> summands;
};

// Shift-intersection recursion: pick L1 = {0 < d2 < ... < dl} among differences
// of the current set T, recurse on the intersection of all T - d with the tail
// signature, and at the last summand choose an l-subset directly.
class ShiftEngine {
 public:
  ShiftEngine(const Ambient& ambient, const Signature& sig)
      : interval_(ambient.is_interval()), ambient_(ambient), sig_(sig), span_(ambient.cardinality()) {
    const int r = sig.r();
    need_.resize(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
      std::size_t s = 0;
      if (interval_) {
        for (int i = k; i < r; ++i) s += static_cast<std::size_t>(sig[static_cast<std::size_t>(i)]);
        s -= static_cast<std::size_t>(r - k - 1);
      } else {
        s = static_cast<std::size_t>(sig[static_cast<std::size_t>(r - 1)]);
      }
      need_[static_cast<std::size_t>(k)] = s;
    }
    bits_.assign(static_cast<std::size_t>(r), Bitset(span_));
    raw_.summands.resize(static_cast<std::size_t>(r));
  }

  std::size_t need(int level) const { return need_[static_cast<std::size_t>(level)]; }

  // Leading shift candidates d2 at the top level (empty when r == 1).
  std::vector<std::size_t> top_shifts(const std::vector<std::size_t>& set) const {
    if (sig_.r() < 2) return {};
    return candidates(set, set, 0);
  }

  // visit(const RawDecomposition&) -> bool (false stops). With `through`, only
  // decompositions whose sumset meets it are produced. `top` restricts the
  // leading top-level shift. Returns false iff stopped by the visitor.
  template <class Visit>
  bool run(const std::vector<std::size_t>& set, const std::vector<std::size_t>* through, Visit&& visit,
           const std::function<bool(std::size_t)>& top = {}) {
    if (set.size() < need_[0]) return true;
    top_ = top ? &top : nullptr;
    std::function<bool(const RawDecomposition&)> v = std::ref(visit);
    visit_ = &v;
    load(0, set);
    bool ok = level(0, set, through);
    unload(0, set);
    return ok;
  }

 private:
  std::size_t add(std::size_t x, std::size_t d) const {
    if (interval_) {
      std::size_t s = x + d;
      return s < span_ ? s : npos;
    }
    return ambient_.add_index(x, d);
  }
  std::size_t sub(std::size_t q, std::size_t d) const {
    if (interval_) return q >= d ? q - d : npos;
    return ambient_.sub_index(q, d);
  }

  void load(int k, const std::vector<std::size_t>& t) {
    auto& b = bits_[static_cast<std::size_t>(k)];
    for (auto x : t) b.set(x);
  }
  void unload(int k, const std::vector<std::size_t>& t) {
    auto& b = bits_[static_cast<std::size_t>(k)];
    for (auto x : t) b.reset(x);
  }

  // Differences s - t > prev with t in cur, s in base.
  std::vector<std::size_t> candidates(const std::vector<std::size_t>& cur, const std::vector<std::size_t>& base,
                                      std::size_t prev) const {
    std::vector<std::size_t> out;
    for (auto t : cur) {
      if (interval_) {
        for (auto it = std::upper_bound(base.begin(), base.end(), t + prev); it != base.end(); ++it)
          out.push_back(*it - t);
      } else {
        for (auto s : base) {
          if (s == t) continue;
          auto d = ambient_.sub_index(s, t);
          if (d > prev) out.push_back(d);
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool level(int k, const std::vector<std::size_t>& t, const std::vector<std::size_t>* q) {
    if (k == sig_.r() - 1) return base(k, t, q);
    auto& d = raw_.summands[static_cast<std::size_t>(k)];
    d.assign(1, 0);
    return choose(k, t, t, q);
  }

  bool choose(int k, const std::vector<std::size_t>& t, const std::vector<std::size_t>& cur,
              const std::vector<std::size_t>* q) {
    const auto ku = static_cast<std::size_t>(k);
    auto& d = raw_.summands[ku];
    const std::size_t ell = static_cast<std::size_t>(sig_[ku]);
    const std::size_t need = need_[ku + 1];
    if (d.size() == ell) return descend(k, cur, q);
    const auto& tb = bits_[ku];
    const bool leading = (k == 0 && d.size() == 1 && top_);
    for (auto c : candidates(cur, t, d.back())) {
      if (leading && !(*top_)(c)) continue;
      std::vector<std::size_t> next;
      next.reserve(cur.size());
      for (auto x : cur) {
        auto y = add(x, c);
        if (y != npos && tb.test(y)) next.push_back(x);
      }
      if (next.size() < need) continue;
      d.push_back(c);
      bool ok = choose(k, t, next, q);
      d.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  bool descend(int k, const std::vector<std::size_t>& tn, const std::vector<std::size_t>* q) {
    const auto ku = static_cast<std::size_t>(k);
    load(k + 1, tn);
    std::vector<std::size_t> qn;
    if (q) {
      const auto& nb = bits_[ku + 1];
      for (auto p : *q)
        for (auto s : raw_.summands[ku]) {
          auto y = sub(p, s);
          if (y != npos && nb.test(y)) qn.push_back(y);
        }
      std::sort(qn.begin(), qn.end());
      qn.erase(std::unique(qn.begin(), qn.end()), qn.end());
    }
    bool ok = true;
    if (!q || !qn.empty()) ok = level(k + 1, tn, q ? &qn : nullptr);
    unload(k + 1, tn);
    return ok;
  }

  bool base(int k, const std::vector<std::size_t>& t, const std::vector<std::size_t>* q) {
    const std::size_t ell = static_cast<std::size_t>(sig_[static_cast<std::size_t>(k)]);
    if (t.size() < ell) return true;
    std::vector<bool> inq;
    if (q) {
      inq.assign(t.size(), false);
      for (std::size_t i = 0; i < t.size(); ++i) inq[i] = std::binary_search(q->begin(), q->end(), t[i]);
    }
    std::vector<std::size_t> pick(ell);
    for (std::size_t i = 0; i < ell; ++i) pick[i] = i;
    auto& L = raw_.summands[static_cast<std::size_t>(k)];
    while (true) {
      bool hit = !q;
      if (q)
        for (auto i : pick)
          if (inq[i]) {
            hit = true;
            break;
          }
      if (hit) {
        if (interval_) {
          raw_.offset = t[pick[0]];
          L.resize(ell);
          for (std::size_t i = 0; i < ell; ++i) L[i] = t[pick[i]] - raw_.offset;
          if (!(*visit_)(raw_)) return false;
        } else {
          for (std::size_t j = 0; j < ell; ++j) {
            raw_.offset = t[pick[j]];
            L.resize(ell);
            for (std::size_t i = 0; i < ell; ++i) L[i] = ambient_.sub_index(t[pick[i]], raw_.offset);
            std::sort(L.begin(), L.end());
            if (!(*visit_)(raw_)) return false;
          }
        }
      }
      // next combination in lexicographic order
      std::size_t i = ell;
      while (i > 0 && pick[i - 1] == t.size() - ell + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < ell; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
  }

  bool interval_;
  const Ambient& ambient_;
  Signature sig_;
  std::size_t span_;
  std::vector<std::size_t> need_;
  std::vector<Bitset> bits_;
  RawDecomposition raw_;
  const std::function<bool(std::size_t)>* top_ = nullptr;
  std::function<bool(const RawDecomposition&)>* visit_ = nullptr;
};

inline std::vector<std::size_t> indices_of(const GroundSet& s) { return s.membership().to_indices(); }

// Converts a raw decomposition to an element-level witness.
inline SumsetWitness to_witness(const RawDecomposition& raw, const Ambient& amb) {
  SumsetWitness w;
  w.summands.resize(raw.summands.size());
  if (amb.is_interval()) {
    w.offset = Element{amb.lo() + static_cast<Value>(raw.offset)};
    for (std::size_t i = 0; i < raw.summands.size(); ++i)
      for (auto d : raw.summands[i]) w.summands[i].push_back(Element{static_cast<Value>(d)});
  } else {
    w.offset = amb.element_at(raw.offset);
    for (std::size_t i = 0; i < raw.summands.size(); ++i)
      for (auto d : raw.summands[i]) w.summands[i].push_back(amb.element_at(d));
  }
  return w;
}

// Carrier indices of all sums, with multiplicity.
inline void raw_sums(const RawDecomposition& raw, const Ambient& amb, std::vector<std::size_t>& out) {
  out.assign(1, raw.offset);
  std::vector<std::size_t> next;
  for (const auto& L : raw.summands) {
    next.clear();
    for (auto a : out)
      for (auto d : L) next.push_back(amb.is_interval() ? a + d : amb.add_index(a, d));
    out.swap(next);
  }
}

// Largest sum of an interval decomposition, as a carrier index.
inline std::size_t raw_max(const RawDecomposition& raw) {
  std::size_t m = raw.offset;
  for (const auto& L : raw.summands) m += L.back();
  return m;
}

}  // namespace lfree::detail
