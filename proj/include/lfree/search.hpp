#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lfree/core.hpp"

namespace lfree {

struct SearchOptions {
  std::uint64_t max_nodes = 500'000'000;
  /// Ambients larger than this are refused unless allow_large is set.
  std::size_t max_cardinality = 64;
  bool allow_large = false;
};

struct SearchReport {
  Ambient ambient;
  Signature signature;
  std::size_t best_size = 0;
  GroundSet witness;
  std::uint64_t nodes = 0;
  double ms = 0;
  std::map<std::string, std::uint64_t> pruned_by;
  /// Interval searches: F(m) for m = 1..n (table[m-1]).
  std::vector<std::size_t> table;
};

/// Exact F(n, sig) on an interval or F(G, sig) on a cyclic product, with one
/// maximum witness (the first found in increasing index order).
SearchReport max_free_set(const Ambient& ambient, const Signature& sig, const SearchOptions& options = {});

/// (lr - 1)^(1/P') n^(1 - 1/P'), P' = l1...l(r-1). Throws InvalidInput for r = 1.
double upper_bound_leading(Value n, const Signature& sig);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// 1 - (S - r)/(P - 1) in lowest terms. Throws InvalidInput for r = 1.
Rational lower_bound_exponent(const Signature& sig);

/// (lr - 1)^(1/P') / r! * n^(r - 1/P'). Throws InvalidInput for r = 1.
double turan_upper_bound(Value n, const Signature& sig);

struct OverlapResult {
  double lhs = 0;
  double rhs = 0;
};

/// lhs = sum over r-subsets {x1..xr} of B of |(A+x1) n ... n (A+xr)| / |X|,
/// rhs = s(s-1)...(s-r+1)/r! with s = |A||B|/|X|.
/// Throws PreconditionError unless A + B is contained in X.
OverlapResult overlap_check(const GroundSet& a, const GroundSet& b, const GroundSet& x, int r);

}  // namespace lfree
