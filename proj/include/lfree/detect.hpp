#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lfree/core.hpp"

namespace lfree {

struct DetectOptions {
  /// Enumeration stops with ResourceExceeded once this many decompositions were produced.
  std::uint64_t max_decompositions = 50'000'000;
  /// Worker threads for enumeration-style operations (maxima collection, counting).
  int threads = 1;
};

/// First witness in the fixed search order (shift tuples increasing), or nullopt if A is free.
std::optional<SumsetWitness> contains_sumset(const GroundSet& a, const Signature& sig);

/// Like contains_sumset, restricted to sumsets that contain the element `through`.
std::optional<SumsetWitness> contains_sumset_through(const GroundSet& a, const Signature& sig, const Element& through);

/// Calls visit once per canonical decomposition; visit returns false to stop early.
/// Throws ResourceExceeded past options.max_decompositions.
void enumerate_sumsets(const GroundSet& a, const Signature& sig, const std::function<bool(const SumsetWitness&)>& visit,
                       const DetectOptions& options = {});

/// All canonical decompositions, in enumeration order.
std::vector<SumsetWitness> list_sumsets(const GroundSet& a, const Signature& sig, const DetectOptions& options = {});

/// Maximum sums of all decompositions of an interval set (sorted, distinct).
/// Parallel over options.threads; the result does not depend on the thread count.
std::vector<Value> obstruction_maxima(const GroundSet& a, const Signature& sig, const DetectOptions& options = {});

struct ObstructionSummary {
  std::uint64_t decompositions = 0;
  /// Distinct obstruction value-sets, keyed by their maximum.
  std::map<Value, std::uint64_t> distinct_by_max;
};

/// Interval sets only; thread-count independent like obstruction_maxima.
ObstructionSummary summarize_obstructions(const GroundSet& a, const Signature& sig, const DetectOptions& options = {});

bool is_sidon(const GroundSet& a);

/// True iff A contains no sumset of signature (2,...,2) of length r. Throws InvalidInput for r < 2.
bool is_hilbert_cube_free(const GroundSet& a, int r);

/// Values x_{i1...ir}, 1 <= is <= ls, keyed by the multi-index.
struct IndexedMultiset {
  Signature signature;
  Ambient ambient;
  std::map<std::vector<int>, Element> values;
};

/// Indexes the sums of offset + L1 + ... + Lr by their summand positions.
IndexedMultiset index_sums(const SumsetWitness& w, const Signature& sig, const Ambient& ambient);

/// Reconstructs (L1, ..., Lr) with L1 as indexed and L2..Lr zero-based when the
/// distinctness conditions and sum equalities hold; nullopt otherwise.
/// Throws StructuralError when the index set does not match the signature.
std::optional<std::vector<std::vector<Element>>> verify_multiset(const IndexedMultiset& x);

/// |L1 + ... + Lr| < l1 ... lr
bool is_degenerate(const std::vector<std::vector<Value>>& summands);

/// A 3-term progression (a, a+d, a+2d), d > 0, inside a degenerate sumset.
/// Throws PreconditionError when the sumset is not degenerate.
std::array<Value, 3> ap3_of_degenerate(const std::vector<std::vector<Value>>& summands);

struct SumsetCount {
  std::uint64_t decompositions = 0;
  std::uint64_t distinct_value_sets = 0;
};

/// Decompositions with all sums in [1,n] and the distinct value-sets among them.
SumsetCount count_all_sumsets(Value n, const Signature& sig, const DetectOptions& options = {});

}  // namespace lfree
