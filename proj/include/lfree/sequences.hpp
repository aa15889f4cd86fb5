#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfree/core.hpp"
#include "lfree/detect.hpp"

namespace lfree {

struct SequencePrefix {
  std::vector<Value> terms;
  Signature signature;
  /// "greedy" or "dyadic(eps=...,m_min=...,m_max=...,seed=...)"
  std::string provenance;
};

/// Smallest-first greedy L-free sequence with every term <= limit.
SequencePrefix greedy_sequence(const Signature& sig, Value limit);

struct DyadicParams {
  double epsilon = 0.1;
  int m_min = 1;
  int m_max = 8;
  std::uint64_t seed = 0;
};

/// (Σ - r)/(Π - 1) + ε/2
double dyadic_alpha(const Signature& sig, double epsilon);

struct DyadicBlock {
  int m = 0;
  Value lo = 0;  ///< I_m = [lo, lo + 4^m)
  std::size_t behrend = 0;
  bool dense = false;  ///< |B_m| >= 4^{m(1 - ε/2)}
  double expected = 0;  ///< sum of ν^{-α} over B_m
  std::size_t sampled = 0;
  std::uint64_t obstructions = 0;  ///< N(S_m): distinct obstruction value-sets with maximum in S_m
  std::size_t bad = 0;
  std::size_t retained = 0;
};

struct DyadicResult {
  SequencePrefix sequence;
  DyadicParams params;
  double alpha = 0;
  bool experimental = false;
  std::uint64_t decompositions = 0;
  std::vector<DyadicBlock> blocks;
};

/// Throws InvalidInput unless r >= 2, ε > 0 and 1 <= m_min <= m_max <= 12.
DyadicResult dyadic_random_sequence(const Signature& sig, const DyadicParams& params,
                                    const DetectOptions& options = {});

/// |A ∩ [1, x]|
std::size_t counting_function(const SequencePrefix& a, Value x);

/// A(x) (x ln x)^{1/Π'} / x with Π' = l1 ... l_{r-1}. Throws InvalidInput for x <= 1 or r < 2.
std::vector<double> liminf_statistic(const SequencePrefix& a, const std::vector<Value>& xs);

}  // namespace lfree
