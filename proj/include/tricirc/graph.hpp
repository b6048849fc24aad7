#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tricirc {

/// Edge classes of the tricirculant covers: semi-edge lifts (K), zero-voltage
/// links (0), and the r- and s-voltage edges (R, S).
enum class EdgeTag : std::uint8_t { None, K, Zero, R, S };

const char* to_string(EdgeTag tag);

/// Vertex of a cyclic cover: fibre over base vertex `base`, index in Z_n.
struct CoverVertex {
  int base = 0;
  int index = 0;
  bool operator==(const CoverVertex&) const = default;
};

/// Undirected simple graph with sorted adjacency lists. Optionally carries
/// edge tags and fibre labels when produced as a cyclic cover; cover vertex
/// (x, i) then has id x * fibre_size() + i.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int order);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return num_edges_; }

  /// Throws NonSimpleCover on loops and repeated edges.
  void add_edge(int a, int b, EdgeTag tag = EdgeTag::None);
  bool adjacent(int a, int b) const;
  std::span<const int> neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  /// Tag of an existing edge; std::out_of_range if absent.
  EdgeTag tag(int a, int b) const;
  bool has_tags() const { return tagged_; }

  /// Edge list with a < b, sorted; the position of an edge in this list is
  /// its edge id everywhere in the library.
  std::vector<std::pair<int, int>> edges() const;

  bool is_regular(int valence) const;
  bool is_connected() const;
  int num_components() const;

  void set_fibres(int fibre_size, std::vector<std::string> base_names);
  int fibre_size() const { return fibre_size_; }
  const std::vector<std::string>& base_names() const { return base_names_; }
  CoverVertex cover_vertex(int v) const;
  int vertex_id(int base, int index) const;
  /// "u3"-style name for cover graphs, the number otherwise.
  std::string vertex_label(int v) const;

  bool operator==(const SimpleGraph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<EdgeTag>> tags_;
  std::size_t num_edges_ = 0;
  bool tagged_ = false;
  int fibre_size_ = 0;
  std::vector<std::string> base_names_;
};

/// Compressed adjacency plus edge ids, for the hot loops.
struct EdgeIndex {
  explicit EdgeIndex(const SimpleGraph& g);

  int order = 0;
  std::vector<int> offsets;    // size order + 1
  std::vector<int> targets;    // neighbour of slot
  std::vector<int> slot_edge;  // edge id of slot
  std::vector<std::pair<int, int>> edges;

  std::span<const int> neighbors(int v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
  int edge_id(int a, int b) const;  // -1 if absent
};

/// Per-component sizes and whether every component is a cycle.
struct ComponentSummary {
  int count = 0;
  std::vector<int> sizes;  // ascending
  bool all_cycles = false;
};

ComponentSummary components(const SimpleGraph& g);

}  // namespace tricirc
