#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tricirc {

enum class EdgeKind { SemiEdge, Loop, Link };

const char* to_string(EdgeKind kind);

/// A pregraph (V, D; beg, inv): vertices and darts, where every dart has an
/// initial vertex and `inv` is an involution on darts. Loops, parallel links
/// and semi-edges (self-inverse darts) are all allowed.
///
/// Vertex and dart ids are dense integers. Names are an optional
/// documentation layer, e.g. "(uv)_0" for the dart from u to v carrying
/// voltage 0 in the tricirculant quotients.
class Pregraph {
 public:
  Pregraph() = default;

  /// Builds from raw arrays; throws std::invalid_argument if `inv` is not an
  /// involution or `beg` points outside [0, num_vertices).
  static Pregraph from_arrays(int num_vertices, std::vector<int> beg,
                              std::vector<int> inv);

  int add_vertex(std::string name = {});
  /// Adds a link (a != b) or a loop (a == b) as two mutually inverse darts.
  /// Returns the id of the dart starting at `a`; its inverse is id + 1.
  int add_edge(int a, int b, std::string forward_name = {},
               std::string backward_name = {});
  /// Adds a semi-edge at `a` (a single self-inverse dart).
  int add_semi_edge(int a, std::string name = {});

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_darts() const { return static_cast<int>(beg_.size()); }

  int beg(int dart) const { return beg_.at(check(dart)); }
  int inv(int dart) const { return inv_.at(check(dart)); }
  int end(int dart) const { return beg_[inv(dart)]; }
  int valence(int vertex) const;
  std::span<const int> darts_at(int vertex) const;

  EdgeKind edge_kind(int dart) const;

  const std::string& vertex_name(int vertex) const;
  const std::string& dart_name(int dart) const;
  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_dart(std::string_view name) const;
  /// Like find_dart but throws std::out_of_range for unknown names.
  int dart(std::string_view name) const;

  bool is_connected() const;

  /// Returns a copy with dart ids permuted: dart d becomes perm[d].
  Pregraph relabel_darts(std::span<const int> perm) const;

 private:
  int check(int dart) const;

  std::vector<std::string> vertex_names_;
  std::vector<int> beg_;
  std::vector<int> inv_;
  std::vector<std::string> dart_names_;
  std::vector<std::vector<int>> darts_at_;
};

/// Pregraph isomorphism by brute force over vertex bijections. Two pregraphs
/// are isomorphic iff some bijection preserves, for every vertex, its number
/// of semi-edges and loops, and for every vertex pair, the link multiplicity
/// (a matching of darts then exists). Throws std::invalid_argument for more
/// than 8 vertices.
bool pregraphs_isomorphic(const Pregraph& a, const Pregraph& b);

/// The four cubic pregraphs on vertices u, v, w with at most one semi-edge
/// per vertex. Index 1..4; throws std::out_of_range otherwise.
///   1: semi-edge at u; links u-v, u-w; two parallel links v-w (voltages r, s)
///   2: semi-edge at w; loop at v; link u-v; two parallel links u-w
///   3: semi-edge at each vertex; links u-v, u-w, v-w
///   4: semi-edge at u; links u-v, u-w; loops at v and w
const Pregraph& delta(int index);

/// Exhaustive generation of the connected cubic pregraphs on three vertices
/// with at most one semi-edge per vertex, deduplicated up to isomorphism.
std::vector<Pregraph> enumerate_cubic_pregraphs_3v();

/// A dart sequence. Validity against a pregraph is checked by the free
/// functions below.
struct Walk {
  std::vector<int> darts;

  int length() const { return static_cast<int>(darts.size()); }
  bool operator==(const Walk&) const = default;
  auto operator<=>(const Walk&) const = default;
};

bool is_walk(const Pregraph& p, const Walk& w);
bool is_closed(const Pregraph& p, const Walk& w);
/// No dart is followed by its inverse. For closed walks of length >= 2 the
/// last and first darts also count as consecutive.
bool is_reduced(const Pregraph& p, const Walk& w);
Walk inverse(const Pregraph& p, const Walk& w);
std::string to_string(const Pregraph& p, const Walk& w);

/// All rooted, directed, reduced closed walks of the given length starting
/// at `start`, in lexicographic order of dart ids.
std::vector<Walk> reduced_closed_walks(const Pregraph& p, int start, int length);

}  // namespace tricirc
