#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tricirc/graph.hpp"
#include "tricirc/permutation.hpp"

namespace tricirc {

using BigInt = boost::multiprecision::cpp_int;

struct SearchOptions {
  /// Also compute a canonical labeling (explores more of the tree).
  bool canonical = true;
  /// Abort with GuardExceeded after this many search-tree nodes.
  std::size_t node_limit = 20'000'000;
};

struct SearchResult {
  /// Generators of Aut(G); each fixes a prefix of `base` pointwise.
  std::vector<Permutation> generators;
  /// Vertices individualized along the first path of the search tree.
  std::vector<int> base;
  /// Product over the base of the orbit lengths of the point stabilisers.
  BigInt group_order = 1;
  /// vertex -> canonical position; empty unless options.canonical.
  std::vector<int> canonical_labeling;
  std::size_t nodes = 0;
};

/// Individualization-refinement search: equitable partition refinement by
/// neighbour counts, branching on the first smallest non-singleton cell,
/// pruning by refinement-trace invariants and by orbits of automorphisms
/// already found. Deterministic for a fixed vertex numbering.
SearchResult search_automorphisms(const SimpleGraph& g, const SearchOptions& options = {});

/// The graph relabeled so vertex v becomes labeling[v].
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& labeling);

}  // namespace tricirc
