#include "tricirc/pregraph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace tricirc {

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::SemiEdge:
      return "semi-edge";
    case EdgeKind::Loop:
      return "loop";
    case EdgeKind::Link:
      return "link";
  }
  return "?";
}

Pregraph Pregraph::from_arrays(int num_vertices, std::vector<int> beg,
                               std::vector<int> inv) {
  if (num_vertices <= 0) throw std::invalid_argument("pregraph needs a vertex");
  if (beg.size() != inv.size())
    throw std::invalid_argument("beg and inv differ in length");
  const int nd = static_cast<int>(beg.size());
  Pregraph p;
  for (int v = 0; v < num_vertices; ++v) p.add_vertex();
  for (int d = 0; d < nd; ++d) {
    if (beg[d] < 0 || beg[d] >= num_vertices)
      throw std::invalid_argument("dart initial vertex out of range");
    if (inv[d] < 0 || inv[d] >= nd || inv[inv[d]] != d)
      throw std::invalid_argument("inv is not an involution");
  }
  p.beg_ = std::move(beg);
  p.inv_ = std::move(inv);
  p.dart_names_.assign(nd, {});
  for (int d = 0; d < nd; ++d) {
    p.dart_names_[d] = "d" + std::to_string(d);
    p.darts_at_[p.beg_[d]].push_back(d);
  }
  return p;
}

int Pregraph::add_vertex(std::string name) {
  const int id = num_vertices();
  if (name.empty()) name = "x" + std::to_string(id);
  vertex_names_.push_back(std::move(name));
  darts_at_.emplace_back();
  return id;
}

int Pregraph::add_edge(int a, int b, std::string forward_name,
                       std::string backward_name) {
  if (a < 0 || a >= num_vertices() || b < 0 || b >= num_vertices())
    throw std::out_of_range("add_edge: vertex out of range");
  const int d = num_darts();
  beg_.push_back(a);
  beg_.push_back(b);
  inv_.push_back(d + 1);
  inv_.push_back(d);
  dart_names_.push_back(forward_name.empty() ? "d" + std::to_string(d)
                                             : std::move(forward_name));
  dart_names_.push_back(backward_name.empty() ? "d" + std::to_string(d + 1)
                                              : std::move(backward_name));
  darts_at_[a].push_back(d);
  darts_at_[b].push_back(d + 1);
  return d;
}

int Pregraph::add_semi_edge(int a, std::string name) {
  if (a < 0 || a >= num_vertices())
    throw std::out_of_range("add_semi_edge: vertex out of range");
  const int d = num_darts();
  beg_.push_back(a);
  inv_.push_back(d);
  dart_names_.push_back(name.empty() ? "d" + std::to_string(d) : std::move(name));
  darts_at_[a].push_back(d);
  return d;
}

int Pregraph::check(int dart) const {
  if (dart < 0 || dart >= num_darts())
    throw std::out_of_range("unknown dart id " + std::to_string(dart));
  return dart;
}

int Pregraph::valence(int vertex) const {
  return static_cast<int>(darts_at(vertex).size());
}

std::span<const int> Pregraph::darts_at(int vertex) const {
  return darts_at_.at(vertex);
}

EdgeKind Pregraph::edge_kind(int dart) const {
  const int i = inv(dart);
  if (i == dart) return EdgeKind::SemiEdge;
  if (beg_[i] == beg_[dart]) return EdgeKind::Loop;
  return EdgeKind::Link;
}

const std::string& Pregraph::vertex_name(int vertex) const {
  return vertex_names_.at(vertex);
}

const std::string& Pregraph::dart_name(int dart) const {
  return dart_names_.at(check(dart));
}

std::optional<int> Pregraph::find_vertex(std::string_view name) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertex_names_[v] == name) return v;
  return std::nullopt;
}

std::optional<int> Pregraph::find_dart(std::string_view name) const {
  for (int d = 0; d < num_darts(); ++d)
    if (dart_names_[d] == name) return d;
  return std::nullopt;
}

int Pregraph::dart(std::string_view name) const {
  if (auto d = find_dart(name)) return *d;
  throw std::out_of_range("unknown dart name " + std::string(name));
}

bool Pregraph::is_connected() const {
  if (num_vertices() == 0) return true;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int d : darts_at_[v]) {
      const int x = end(d);
      if (!seen[x]) {
        seen[x] = 1;
        ++count;
        stack.push_back(x);
      }
    }
  }
  return count == num_vertices();
}

Pregraph Pregraph::relabel_darts(std::span<const int> perm) const {
  const int nd = num_darts();
  if (static_cast<int>(perm.size()) != nd)
    throw std::invalid_argument("relabel_darts: size mismatch");
  std::vector<int> beg(nd), inv(nd);
  std::vector<std::string> names(nd);
  for (int d = 0; d < nd; ++d) {
    beg[perm[d]] = beg_[d];
    inv[perm[d]] = perm[inv_[d]];
    names[perm[d]] = dart_names_[d];
  }
  Pregraph out = from_arrays(num_vertices(), std::move(beg), std::move(inv));
  out.vertex_names_ = vertex_names_;
  out.dart_names_ = std::move(names);
  return out;
}

namespace {

// semi-edge count, loop count per vertex and link multiplicities per pair.
struct EdgeCounts {
  std::vector<int> semi;
  std::vector<int> loops;
  std::vector<std::vector<int>> links;
};

EdgeCounts edge_counts(const Pregraph& p) {
  const int n = p.num_vertices();
  EdgeCounts c{std::vector<int>(n, 0), std::vector<int>(n, 0),
               std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (int d = 0; d < p.num_darts(); ++d) {
    switch (p.edge_kind(d)) {
      case EdgeKind::SemiEdge:
        ++c.semi[p.beg(d)];
        break;
      case EdgeKind::Loop:
        if (d < p.inv(d)) ++c.loops[p.beg(d)];
        break;
      case EdgeKind::Link:
        ++c.links[p.beg(d)][p.end(d)];
        break;
    }
  }
  return c;
}

}  // namespace

bool pregraphs_isomorphic(const Pregraph& a, const Pregraph& b) {
  const int n = a.num_vertices();
  if (n > 8) throw std::invalid_argument("pregraph isomorphism limited to 8 vertices");
  if (n != b.num_vertices() || a.num_darts() != b.num_darts()) return false;
  const EdgeCounts ca = edge_counts(a);
  const EdgeCounts cb = edge_counts(b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      const int y = perm[x];
      ok = ca.semi[x] == cb.semi[y] && ca.loops[x] == cb.loops[y];
      for (int x2 = 0; x2 < n && ok; ++x2)
        ok = ca.links[x][x2] == cb.links[y][perm[x2]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

Pregraph make_delta(int index) {
  Pregraph p;
  const int u = p.add_vertex("u");
  const int v = p.add_vertex("v");
  const int w = p.add_vertex("w");
  switch (index) {
    case 1:
      p.add_semi_edge(u, "(uu)_k");
      p.add_edge(u, v, "(uv)_0", "(vu)_0");
      p.add_edge(u, w, "(uw)_0", "(wu)_0");
      p.add_edge(v, w, "(vw)_r", "(wv)_-r");
      p.add_edge(v, w, "(vw)_s", "(wv)_-s");
      break;
    case 2:
      p.add_semi_edge(w, "(ww)_k");
      p.add_edge(u, v, "(uv)_0", "(vu)_0");
      p.add_edge(u, w, "(uw)_0", "(wu)_0");
      p.add_edge(u, w, "(uw)_r", "(wu)_-r");
      p.add_edge(v, v, "(vv)_s", "(vv)_-s");
      break;
    case 3:
      p.add_semi_edge(u, "(uu)_k");
      p.add_semi_edge(v, "(vv)_k");
      p.add_semi_edge(w, "(ww)_k");
      p.add_edge(u, v, "(uv)_0", "(vu)_0");
      p.add_edge(u, w, "(uw)_0", "(wu)_0");
      p.add_edge(v, w, "(vw)_r", "(wv)_-r");
      break;
    case 4:
      p.add_semi_edge(u, "(uu)_k");
      p.add_edge(u, v, "(uv)_0", "(vu)_0");
      p.add_edge(u, w, "(uw)_0", "(wu)_0");
      p.add_edge(w, w, "(ww)_r", "(ww)_-r");
      p.add_edge(v, v, "(vv)_s", "(vv)_-s");
      break;
    default:
      throw std::out_of_range("delta index must be 1..4");
  }
  return p;
}

}  // namespace

const Pregraph& delta(int index) {
  static const std::array<Pregraph, 4> catalogue{make_delta(1), make_delta(2),
                                                 make_delta(3), make_delta(4)};
  if (index < 1 || index > 4) throw std::out_of_range("delta index must be 1..4");
  return catalogue[index - 1];
}

std::vector<Pregraph> enumerate_cubic_pregraphs_3v() {
  // Unknowns: semi-edges s[x] in {0,1}, loops l[x], link multiplicities
  // m01, m02, m12, subject to s[x] + 2 l[x] + (links at x) = 3.
  std::vector<Pregraph> found;
  for (int m01 = 0; m01 <= 3; ++m01)
    for (int m02 = 0; m02 <= 3; ++m02)
      for (int m12 = 0; m12 <= 3; ++m12) {
        const std::array<int, 3> link_deg{m01 + m02, m01 + m12, m02 + m12};
        std::array<int, 3> semi{}, loops{};
        bool feasible = true;
        for (int x = 0; x < 3 && feasible; ++x) {
          const int rest = 3 - link_deg[x];
          if (rest < 0) {
            feasible = false;
            break;
          }
          // At most one semi-edge: parity of `rest` decides it.
          semi[x] = rest % 2;
          loops[x] = rest / 2;
        }
        if (!feasible) continue;
        Pregraph p;
        for (const char* name : {"u", "v", "w"}) p.add_vertex(name);
        for (int x = 0; x < 3; ++x) {
          if (semi[x]) p.add_semi_edge(x);
          for (int i = 0; i < loops[x]; ++i) p.add_edge(x, x);
        }
        for (int i = 0; i < m01; ++i) p.add_edge(0, 1);
        for (int i = 0; i < m02; ++i) p.add_edge(0, 2);
        for (int i = 0; i < m12; ++i) p.add_edge(1, 2);
        if (!p.is_connected()) continue;
        const bool seen = std::any_of(found.begin(), found.end(), [&](const Pregraph& q) {
          return pregraphs_isomorphic(p, q);
        });
        if (!seen) found.push_back(std::move(p));
      }
  return found;
}

bool is_walk(const Pregraph& p, const Walk& w) {
  for (int d : w.darts)
    if (d < 0 || d >= p.num_darts()) return false;
  for (std::size_t i = 0; i + 1 < w.darts.size(); ++i)
    if (p.beg(w.darts[i + 1]) != p.end(w.darts[i])) return false;
  return true;
}

bool is_closed(const Pregraph& p, const Walk& w) {
  if (w.darts.empty()) return false;
  return p.end(w.darts.back()) == p.beg(w.darts.front());
}

bool is_reduced(const Pregraph& p, const Walk& w) {
  const auto& d = w.darts;
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i + 1] == p.inv(d[i])) return false;
  if (d.size() >= 2 && is_closed(p, w) && d.front() == p.inv(d.back())) return false;
  return true;
}

Walk inverse(const Pregraph& p, const Walk& w) {
  Walk out;
  out.darts.reserve(w.darts.size());
  for (auto it = w.darts.rbegin(); it != w.darts.rend(); ++it)
    out.darts.push_back(p.inv(*it));
  return out;
}

std::string to_string(const Pregraph& p, const Walk& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.darts.size(); ++i) {
    if (i) out += ",";
    out += p.dart_name(w.darts[i]);
  }
  return out + ")";
}

namespace {

void extend_walks(const Pregraph& p, int start, int length, std::vector<int>& path,
                  std::vector<Walk>& out) {
  const int at = path.empty() ? start : p.end(path.back());
  if (static_cast<int>(path.size()) == length) {
    if (at != start) return;
    if (length >= 2 && path.front() == p.inv(path.back())) return;
    out.push_back(Walk{path});
    return;
  }
  for (int d : p.darts_at(at)) {
    if (!path.empty() && d == p.inv(path.back())) continue;
    path.push_back(d);
    extend_walks(p, start, length, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Walk> reduced_closed_walks(const Pregraph& p, int start, int length) {
  if (start < 0 || start >= p.num_vertices())
    throw std::out_of_range("reduced_closed_walks: start vertex out of range");
  if (length < 1) throw std::invalid_argument("reduced_closed_walks: length must be >= 1");
  std::vector<Walk> out;
  std::vector<int> path;
  path.reserve(length);
  extend_walks(p, start, length, path, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tricirc
