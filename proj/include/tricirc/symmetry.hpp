#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricirc/graph.hpp"
#include "tricirc/permutation.hpp"
#include "tricirc/search.hpp"

namespace tricirc {

inline constexpr int kDeskScaleOrder = 600;
inline constexpr std::uint64_t kDefaultElementCap = 10'000'000;

struct AutomorphismGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<int> base;
  BigInt order = 1;
};

/// Throws GuardExceeded above `max_order` vertices.
AutomorphismGroup automorphism_group(const SimpleGraph& g, int max_order = kDeskScaleOrder);

OrbitSet vertex_orbits(const AutomorphismGroup& aut);
/// Ground set: edge ids of g.edges().
OrbitSet edge_orbits(const SimpleGraph& g, const AutomorphismGroup& aut);
/// Ground set: arcs, 2 * edge id for (a, b) with a < b and 2 * edge id + 1 reversed.
OrbitSet arc_orbits(const SimpleGraph& g, const AutomorphismGroup& aut);

bool is_vertex_transitive(const SimpleGraph& g);
bool is_vertex_transitive(const AutomorphismGroup& aut);
bool is_edge_transitive(const SimpleGraph& g, const AutomorphismGroup& aut);
bool is_arc_transitive(const SimpleGraph& g);
bool is_arc_transitive(const SimpleGraph& g, const AutomorphismGroup& aut);

/// graph6 string of the canonically relabeled graph.
std::string canonical_form(const SimpleGraph& g, int max_order = kDeskScaleOrder);
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);
/// Vertex map from a to b that carries edges to edges, if one exists.
std::optional<Permutation> isomorphism(const SimpleGraph& a, const SimpleGraph& b);

/// A semiregular automorphism of order |V|/m (exactly m orbits), found by
/// walking the group elements. Throws GuardExceeded if `cap` elements are
/// visited without deciding.
std::optional<Permutation> find_k_circulant(const SimpleGraph& g, int m,
                                            std::uint64_t cap = kDefaultElementCap);
std::optional<Permutation> find_k_circulant(const AutomorphismGroup& aut, int m,
                                            std::uint64_t cap = kDefaultElementCap);

/// Spanning subgraph on the edges whose tag is in `types`. Requires tags.
SimpleGraph edge_type_subgraph(const SimpleGraph& g, std::span<const EdgeTag> types);

}  // namespace tricirc
