#include "tricirc/cycles.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <stdexcept>

#include <omp.h>

namespace tricirc {

namespace {

void require_length(int c) {
  if (c < 3) throw std::invalid_argument("cycle length must be at least 3");
}

struct Accumulator {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_edge;
  std::vector<std::uint64_t> per_vertex;

  Accumulator(int n, std::size_t m) : per_edge(m, 0), per_vertex(n, 0) {}

  void merge(const Accumulator& o) {
    total += o.total;
    for (std::size_t i = 0; i < per_edge.size(); ++i) per_edge[i] += o.per_edge[i];
    for (std::size_t i = 0; i < per_vertex.size(); ++i) per_vertex[i] += o.per_vertex[i];
  }
};

class AnchoredSearch {
 public:
  AnchoredSearch(const EdgeIndex& g, int c, Accumulator& acc)
      : g_(g), c_(c), acc_(acc), on_path_(g.order, 0), path_v_(c), path_e_(c) {}

  void run(int anchor) {
    anchor_ = anchor;
    path_v_[0] = anchor;
    on_path_[anchor] = 1;
    extend(0);
    on_path_[anchor] = 0;
  }

 private:
  void extend(int depth) {
    const int v = path_v_[depth];
    for (int slot = g_.offsets[v]; slot < g_.offsets[v + 1]; ++slot) {
      const int x = g_.targets[slot];
      if (x == anchor_) {
        if (depth == c_ - 1 && path_v_[1] < path_v_[c_ - 1]) {
          path_e_[depth] = g_.slot_edge[slot];
          record();
        }
        continue;
      }
      if (x < anchor_ || on_path_[x] || depth + 1 > c_ - 1) continue;
      path_e_[depth] = g_.slot_edge[slot];
      path_v_[depth + 1] = x;
      on_path_[x] = 1;
      extend(depth + 1);
      on_path_[x] = 0;
    }
  }

  void record() {
    ++acc_.total;
    for (int i = 0; i < c_; ++i) {
      ++acc_.per_edge[path_e_[i]];
      ++acc_.per_vertex[path_v_[i]];
    }
  }

  const EdgeIndex& g_;
  const int c_;
  Accumulator& acc_;
  int anchor_ = 0;
  std::vector<char> on_path_;
  std::vector<int> path_v_;
  std::vector<int> path_e_;
};

CycleCounts finish(int c, Accumulator&& acc) {
  CycleCounts out;
  out.length = c;
  out.total = acc.total;
  out.per_edge = std::move(acc.per_edge);
  out.per_vertex = std::move(acc.per_vertex);
  return out;
}

// Number of simple paths of exactly `remaining` more edges from v to target.
std::uint64_t paths_to(const SimpleGraph& g, int v, int target, int remaining,
                       std::vector<char>& on_path) {
  if (remaining == 1) return g.adjacent(v, target) ? 1 : 0;
  std::uint64_t n = 0;
  for (int x : g.neighbors(v)) {
    if (x == target || on_path[x]) continue;
    on_path[x] = 1;
    n += paths_to(g, x, target, remaining - 1, on_path);
    on_path[x] = 0;
  }
  return n;
}

int girth_from(const EdgeIndex& g, int root, int bound, std::vector<int>& dist,
               std::vector<int>& parent) {
  std::fill(dist.begin(), dist.end(), -1);
  std::queue<int> q;
  dist[root] = 0;
  parent[root] = -1;
  q.push(root);
  int best = bound;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (2 * dist[x] + 1 >= best) break;
    for (int y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        q.push(y);
      } else if (y != parent[x]) {
        best = std::min(best, dist[x] + dist[y] + 1);
      }
    }
  }
  return best;
}

}  // namespace

CycleCounts count_cycles(const SimpleGraph& g, int c) {
  require_length(c);
  const EdgeIndex idx(g);
  const int n = g.order();
  Accumulator total(n, idx.edges.size());
#pragma omp parallel
  {
    Accumulator local(n, idx.edges.size());
    AnchoredSearch search(idx, c, local);
#pragma omp for schedule(dynamic, 8) nowait
    for (int a = 0; a < n; ++a) search.run(a);
#pragma omp critical
    total.merge(local);
  }
  return finish(c, std::move(total));
}

CycleCounts count_cycles_serial(const SimpleGraph& g, int c) {
  require_length(c);
  const EdgeIndex idx(g);
  const int n = g.order();
  Accumulator raw(n, idx.edges.size());
  std::vector<char> on_path(n, 0);
  std::vector<int> verts(c), edges(c);
  // Plain recursion over closed trails; every cycle appears 2c times.
  auto dfs = [&](auto&& self, int depth) -> void {
    const int v = verts[depth];
    for (int slot = idx.offsets[v]; slot < idx.offsets[v + 1]; ++slot) {
      const int x = idx.targets[slot];
      if (depth == c - 1) {
        if (x == verts[0]) {
          edges[depth] = idx.slot_edge[slot];
          ++raw.total;
          for (int i = 0; i < c; ++i) {
            ++raw.per_edge[edges[i]];
            ++raw.per_vertex[verts[i]];
          }
        }
        continue;
      }
      if (on_path[x]) continue;
      edges[depth] = idx.slot_edge[slot];
      verts[depth + 1] = x;
      on_path[x] = 1;
      self(self, depth + 1);
      on_path[x] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    verts[0] = s;
    on_path[s] = 1;
    dfs(dfs, 0);
    on_path[s] = 0;
  }
  const std::uint64_t k = 2 * static_cast<std::uint64_t>(c);
  raw.total /= k;
  for (auto& x : raw.per_edge) x /= k;
  for (auto& x : raw.per_vertex) x /= k;
  return finish(c, std::move(raw));
}

int girth(const SimpleGraph& g) {
  const EdgeIndex idx(g);
  const int n = g.order();
  int best = INT_MAX;
#pragma omp parallel
  {
    std::vector<int> dist(n), parent(n);
#pragma omp for schedule(dynamic, 16) reduction(min : best)
    for (int r = 0; r < n; ++r) best = std::min(best, girth_from(idx, r, best, dist, parent));
  }
  return best == INT_MAX ? 0 : best;
}

int girth_serial(const SimpleGraph& g) {
  const EdgeIndex idx(g);
  const int n = g.order();
  std::vector<int> dist(n), parent(n);
  int best = INT_MAX;
  for (int r = 0; r < n; ++r) best = std::min(best, girth_from(idx, r, INT_MAX, dist, parent));
  return best == INT_MAX ? 0 : best;
}

int girth_at(const SimpleGraph& g, int v) {
  const int n = g.order();
  std::vector<int> dist(n, -1), branch(n, -1);
  std::queue<int> q;
  dist[v] = 0;
  for (int x : g.neighbors(v)) {
    dist[x] = 1;
    branch[x] = x;
    q.push(x);
  }
  int best = INT_MAX;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (2 * dist[x] + 1 >= best) break;
    for (int y : g.neighbors(x)) {
      if (y == v) continue;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        branch[y] = branch[x];
        q.push(y);
      } else if (branch[y] != branch[x]) {
        best = std::min(best, dist[x] + dist[y] + 1);
      }
    }
  }
  return best == INT_MAX ? 0 : best;
}

std::uint64_t cycles_through_edge(const SimpleGraph& g, int a, int b, int c) {
  require_length(c);
  if (!g.adjacent(a, b)) throw std::invalid_argument("not an edge");
  std::vector<char> on_path(g.order(), 0);
  on_path[a] = on_path[b] = 1;
  // paths b -> a of length c - 1 avoiding the edge itself (length >= 2)
  std::uint64_t n = 0;
  for (int x : g.neighbors(b)) {
    if (x == a) continue;
    on_path[x] = 1;
    n += paths_to(g, x, a, c - 2, on_path);
    on_path[x] = 0;
  }
  return n;
}

std::uint64_t cycles_through_vertex(const SimpleGraph& g, int v, int c) {
  require_length(c);
  std::vector<char> on_path(g.order(), 0);
  on_path[v] = 1;
  std::uint64_t n = 0;
  for (int x : g.neighbors(v)) {
    on_path[x] = 1;
    n += paths_to(g, x, v, c - 1, on_path);
    on_path[x] = 0;
  }
  return n / 2;
}

CycleSignature c_signature(const SimpleGraph& g, int v, int c) {
  if (g.degree(v) != 3) throw std::invalid_argument("signature needs a vertex of valence 3");
  CycleSignature sig{c, {}};
  int i = 0;
  for (int x : g.neighbors(v)) sig.triple[i++] = cycles_through_edge(g, v, x, c);
  std::sort(sig.triple.begin(), sig.triple.end());
  return sig;
}

std::vector<CycleSignature> c_signatures(const SimpleGraph& g, const CycleCounts& counts) {
  const EdgeIndex idx(g);
  std::vector<CycleSignature> out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) throw std::invalid_argument("signature needs a cubic graph");
    out[v].c = counts.length;
    for (int i = 0; i < 3; ++i)
      out[v].triple[i] = counts.per_edge[idx.slot_edge[idx.offsets[v] + i]];
    std::sort(out[v].triple.begin(), out[v].triple.end());
  }
  return out;
}

bool is_c_cycle_regular(const SimpleGraph& g, int c) {
  const auto sigs = c_signatures(g, count_cycles(g, c));
  return std::adjacent_find(sigs.begin(), sigs.end(), std::not_equal_to<>()) == sigs.end();
}

bool is_c_vertex_regular(const SimpleGraph& g, int c) {
  const auto counts = count_cycles(g, c);
  const auto& pv = counts.per_vertex;
  return std::adjacent_find(pv.begin(), pv.end(), std::not_equal_to<>()) == pv.end();
}

}  // namespace tricirc
