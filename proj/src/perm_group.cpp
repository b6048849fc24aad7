#include "tricirc/perm_group.hpp"

#include <stdexcept>

namespace tricirc {

namespace {

int first_moved(const Permutation& g) {
  for (int x = 0; x < g.size(); ++x)
    if (g(x) != x) return x;
  return -1;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.size() != degree_) throw std::invalid_argument("generator degree mismatch");
  build();
}

std::vector<const Permutation*> PermGroup::strong_at(std::size_t level) const {
  std::vector<const Permutation*> out;
  for (const auto& [l, g] : strong_)
    if (l >= level) out.push_back(&g);
  return out;
}

void PermGroup::rebuild_orbit(std::size_t level) {
  Level& L = levels_[level];
  L.orbit.assign(1, L.point);
  L.rep_of.assign(degree_, -1);
  L.reps.assign(1, Permutation::identity(degree_));
  L.rep_of[L.point] = 0;
  const auto gens = strong_at(level);
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    const int x = L.orbit[i];
    for (const Permutation* s : gens) {
      const int y = (*s)(x);
      if (L.rep_of[y] >= 0) continue;
      L.rep_of[y] = static_cast<int>(L.reps.size());
      L.reps.push_back(*s * L.reps[L.rep_of[x]]);
      L.orbit.push_back(y);
    }
  }
}

PermGroup::Sifted PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    const int b = g(L.point);
    if (L.rep_of[b] < 0) return {std::move(g), l};
    g = L.reps[L.rep_of[b]].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build() {
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    if (levels_.empty()) levels_.push_back(Level{first_moved(g), {}, {}, {}});
    strong_.emplace_back(0, g);
  }
  if (levels_.empty()) return;

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    rebuild_orbit(level);
    bool extended = false;
    const Level& L = levels_[level];
    const auto gens = strong_at(level);
    for (std::size_t oi = 0; oi < L.orbit.size() && !extended; ++oi) {
      const int x = L.orbit[oi];
      for (const Permutation* s : gens) {
        const int y = (*s)(x);
        Permutation h = L.reps[L.rep_of[y]].inverse() * (*s) * L.reps[L.rep_of[x]];
        Sifted r = sift(std::move(h), level + 1);
        if (r.residue.is_identity()) continue;
        if (r.level == levels_.size()) levels_.push_back(Level{first_moved(r.residue), {}, {}, {}});
        strong_.emplace_back(r.level, std::move(r.residue));
        i = static_cast<std::ptrdiff_t>(r.level);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const auto& L : levels_) out.push_back(L.point);
  return out;
}

boost::multiprecision::cpp_int PermGroup::order() const {
  boost::multiprecision::cpp_int n = 1;
  for (const auto& L : levels_) n *= static_cast<unsigned>(L.orbit.size());
  return n;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.size() != degree_) return false;
  return sift(g, 0).residue.is_identity();
}

OrbitSet PermGroup::orbits() const { return tricirc::orbits(degree_, generators_); }

std::uint64_t PermGroup::for_each_element(
    const std::function<bool(const Permutation&)>& visit) const {
  std::uint64_t visited = 0;
  bool stop = false;
  // element = reps_0 * reps_1 * ... * reps_{L-1}
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t l,
                                                                  const Permutation& prefix) {
    if (stop) return;
    if (l == levels_.size()) {
      ++visited;
      if (!visit(prefix)) stop = true;
      return;
    }
    for (const auto& rep : levels_[l].reps) {
      walk(l + 1, prefix * rep);
      if (stop) return;
    }
  };
  walk(0, Permutation::identity(degree_));
  return visited;
}

}  // namespace tricirc
