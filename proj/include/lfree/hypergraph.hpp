#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lfree/core.hpp"

namespace lfree {

/// r-uniform hypergraph on vertices [0, n); edges sorted, each edge sorted.
struct Hypergraph {
  std::size_t n = 0;
  int r = 2;
  std::vector<std::vector<std::size_t>> edges;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

struct HypergraphOptions {
  /// Refuse to enumerate more than this many r-subsets of the group.
  std::uint64_t max_subsets = 100'000'000;
};

/// Edges are the r-subsets of distinct group elements (by carrier index) whose sum lies in A.
Hypergraph cayley_hypergraph(const Ambient& g, const GroundSet& a, int r, const HypergraphOptions& options = {});

/// R_r(y): number of r-subsets of distinct elements summing to y, for every y (by index).
std::vector<std::uint64_t> sum_representation_counts(const Ambient& g, int r, const HypergraphOptions& options = {});

/// Disjoint classes V1..Vr, |Vi| = li, with every transversal an edge; first in
/// lexicographic class order. Throws InvalidInput when H.r != sig.r().
std::optional<std::vector<std::vector<std::size_t>>> contains_complete_rpartite(const Hypergraph& h,
                                                                                const Signature& sig);

struct TranslateResult {
  Element x;
  std::uint64_t edge_count = 0;
  /// Edge count of cayley_hypergraph(G, A + x, r) for every x, by index.
  std::vector<std::uint64_t> per_translate;
};

TranslateResult best_translate(const Ambient& g, const GroundSet& a, int r, const HypergraphOptions& options = {});

// File format: "#hypergraph n=<n> r=<r>" then one edge per line, vertices separated by spaces.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace lfree
