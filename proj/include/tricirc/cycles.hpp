#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tricirc/graph.hpp"

namespace tricirc {

/// Counts of simple cycles of one length.
struct CycleCounts {
  int length = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_edge;    // indexed by edge id
  std::vector<std::uint64_t> per_vertex;
};

/// Bounded DFS, each cycle found once: anchored at its least vertex and
/// walked in the direction whose second vertex is smaller than its last.
/// Parallel over anchors.
CycleCounts count_cycles(const SimpleGraph& g, int c);

/// Reference: every closed trail from every start in both directions,
/// divided by 2c. Single-threaded.
CycleCounts count_cycles_serial(const SimpleGraph& g, int c);

/// Length of a shortest cycle, 0 for forests. Parallel over BFS roots.
int girth(const SimpleGraph& g);
int girth_serial(const SimpleGraph& g);
/// Length of a shortest cycle through v, 0 if none.
int girth_at(const SimpleGraph& g, int v);

/// Number of c-cycles through edge {a, b}.
std::uint64_t cycles_through_edge(const SimpleGraph& g, int a, int b, int c);

/// Number of c-cycles through vertex v.
std::uint64_t cycles_through_vertex(const SimpleGraph& g, int v, int c);

/// Sorted c-cycle counts of the three edges at a vertex of a cubic graph.
struct CycleSignature {
  int c = 0;
  std::array<std::uint64_t, 3> triple{};
  bool operator==(const CycleSignature&) const = default;
};

CycleSignature c_signature(const SimpleGraph& g, int v, int c);
/// Signatures of all vertices from precomputed counts.
std::vector<CycleSignature> c_signatures(const SimpleGraph& g, const CycleCounts& counts);

bool is_c_cycle_regular(const SimpleGraph& g, int c);
bool is_c_vertex_regular(const SimpleGraph& g, int c);

}  // namespace tricirc
