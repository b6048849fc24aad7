#include "tricirc/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "tricirc/error.hpp"

namespace tricirc {

const char* to_string(EdgeTag tag) {
  switch (tag) {
    case EdgeTag::None:
      return "-";
    case EdgeTag::K:
      return "K";
    case EdgeTag::Zero:
      return "0";
    case EdgeTag::R:
      return "R";
    case EdgeTag::S:
      return "S";
  }
  return "?";
}

SimpleGraph::SimpleGraph(int order) {
  if (order < 0) throw std::invalid_argument("negative graph order");
  adj_.resize(order);
  tags_.resize(order);
}

void SimpleGraph::add_edge(int a, int b, EdgeTag tag) {
  if (a < 0 || b < 0 || a >= order() || b >= order())
    throw std::out_of_range("add_edge: vertex out of range");
  if (a == b) throw NonSimpleCover("loop at vertex " + vertex_label(a));
  if (adjacent(a, b))
    throw NonSimpleCover("parallel edge " + vertex_label(a) + "-" + vertex_label(b));
  auto insert = [&](int x, int y) {
    auto it = std::lower_bound(adj_[x].begin(), adj_[x].end(), y);
    const auto pos = it - adj_[x].begin();
    adj_[x].insert(it, y);
    tags_[x].insert(tags_[x].begin() + pos, tag);
  };
  insert(a, b);
  insert(b, a);
  ++num_edges_;
  if (tag != EdgeTag::None) tagged_ = true;
}

bool SimpleGraph::adjacent(int a, int b) const {
  const auto& n = adj_.at(a);
  return std::binary_search(n.begin(), n.end(), b);
}

EdgeTag SimpleGraph::tag(int a, int b) const {
  const auto& n = adj_.at(a);
  auto it = std::lower_bound(n.begin(), n.end(), b);
  if (it == n.end() || *it != b) throw std::out_of_range("tag: no such edge");
  return tags_[a][it - n.begin()];
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges_);
  for (int a = 0; a < order(); ++a)
    for (int b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

bool SimpleGraph::is_regular(int valence) const {
  return std::all_of(adj_.begin(), adj_.end(),
                     [&](const auto& n) { return static_cast<int>(n.size()) == valence; });
}

int SimpleGraph::num_components() const {
  std::vector<char> seen(order(), 0);
  std::vector<int> stack;
  int comps = 0;
  for (int s = 0; s < order(); ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int x : adj_[v])
        if (!seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
    }
  }
  return comps;
}

bool SimpleGraph::is_connected() const { return order() == 0 || num_components() == 1; }

void SimpleGraph::set_fibres(int fibre_size, std::vector<std::string> base_names) {
  if (fibre_size <= 0 ||
      static_cast<long>(fibre_size) * static_cast<long>(base_names.size()) != order())
    throw std::invalid_argument("set_fibres: fibre layout does not match order");
  fibre_size_ = fibre_size;
  base_names_ = std::move(base_names);
}

CoverVertex SimpleGraph::cover_vertex(int v) const {
  if (fibre_size_ == 0) throw std::logic_error("graph has no fibre labels");
  if (v < 0 || v >= order()) throw std::out_of_range("cover_vertex: out of range");
  return {v / fibre_size_, v % fibre_size_};
}

int SimpleGraph::vertex_id(int base, int index) const {
  if (fibre_size_ == 0) throw std::logic_error("graph has no fibre labels");
  const int n = fibre_size_;
  index %= n;
  if (index < 0) index += n;
  if (base < 0 || base >= static_cast<int>(base_names_.size()))
    throw std::out_of_range("vertex_id: base vertex out of range");
  return base * n + index;
}

std::string SimpleGraph::vertex_label(int v) const {
  if (fibre_size_ == 0 || v < 0 || v >= order()) return std::to_string(v);
  const CoverVertex c = cover_vertex(v);
  return base_names_[c.base] + std::to_string(c.index);
}

EdgeIndex::EdgeIndex(const SimpleGraph& g) : order(g.order()), edges(g.edges()) {
  offsets.assign(order + 1, 0);
  for (int v = 0; v < order; ++v) offsets[v + 1] = offsets[v] + g.degree(v);
  targets.resize(offsets[order]);
  slot_edge.resize(offsets[order]);
  for (int v = 0; v < order; ++v) {
    auto n = g.neighbors(v);
    std::copy(n.begin(), n.end(), targets.begin() + offsets[v]);
  }
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [a, b] = edges[e];
    auto slot = [&](int x, int y) {
      auto first = targets.begin() + offsets[x];
      auto last = targets.begin() + offsets[x + 1];
      return static_cast<int>(std::lower_bound(first, last, y) - targets.begin());
    };
    slot_edge[slot(a, b)] = e;
    slot_edge[slot(b, a)] = e;
  }
}

int EdgeIndex::edge_id(int a, int b) const {
  if (a < 0 || a >= order) return -1;
  auto first = targets.begin() + offsets[a];
  auto last = targets.begin() + offsets[a + 1];
  auto it = std::lower_bound(first, last, b);
  if (it == last || *it != b) return -1;
  return slot_edge[it - targets.begin()];
}

ComponentSummary components(const SimpleGraph& g) {
  ComponentSummary out;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack;
  out.all_cycles = true;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    int size = 0;
    bool cycle = true;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++size;
      if (g.degree(v) != 2) cycle = false;
      for (int x : g.neighbors(v))
        if (!seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
    }
    ++out.count;
    out.sizes.push_back(size);
    out.all_cycles = out.all_cycles && cycle && size >= 3;
  }
  std::sort(out.sizes.begin(), out.sizes.end());
  if (out.count == 0) out.all_cycles = false;
  return out;
}

}  // namespace tricirc
