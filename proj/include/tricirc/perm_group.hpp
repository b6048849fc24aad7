#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tricirc/permutation.hpp"

namespace tricirc {

/// Permutation group given by generators, with a base and strong generating
/// set built by the Schreier-Sims algorithm.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::vector<int> base() const;
  boost::multiprecision::cpp_int order() const;
  bool contains(const Permutation& g) const;
  OrbitSet orbits() const;

  /// Visits elements until `visit` returns false; returns the number visited.
  std::uint64_t for_each_element(const std::function<bool(const Permutation&)>& visit) const;

 private:
  struct Level {
    int point = 0;
    std::vector<int> orbit;
    std::vector<int> rep_of;  // point -> index into reps, or -1
    std::vector<Permutation> reps;
  };
  struct Sifted {
    Permutation residue;
    std::size_t level;
  };

  void build();
  void rebuild_orbit(std::size_t level);
  Sifted sift(Permutation g, std::size_t from) const;
  std::vector<const Permutation*> strong_at(std::size_t level) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::vector<std::pair<std::size_t, Permutation>> strong_;
};

}  // namespace tricirc
