#include "tricirc/permutation.hpp"

#include <numeric>
#include <stdexcept>

#include "tricirc/graph.hpp"

namespace tricirc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size() || hit[x]) throw std::invalid_argument("not a permutation");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < size(); ++x) inv[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::pow(long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  Permutation result = identity(size());
  while (e) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = s; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool Permutation::is_semiregular() const {
  const auto cs = cycles();
  for (const auto& c : cs)
    if (c.size() != cs.front().size()) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(c[i]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(a.size());
  for (int x = 0; x < a.size(); ++x) out[x] = a(b(x));
  return Permutation(std::move(out));
}

bool is_automorphism(const SimpleGraph& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(p(v))) return false;
    for (int x : g.neighbors(v))
      if (!g.adjacent(p(v), p(x))) return false;
  }
  return true;
}

OrbitSet orbits(int n, std::span<const Permutation> generators) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("orbits: generator size mismatch");
    for (int x = 0; x < n; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitSet out;
  out.orbit_of.assign(n, -1);
  std::vector<int> root_index(n, -1);
  for (int x = 0; x < n; ++x) {
    const int r = find(x);
    if (root_index[r] < 0) {
      root_index[r] = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbit_of[x] = root_index[r];
    out.orbits[root_index[r]].push_back(x);
  }
  return out;
}

}  // namespace tricirc
