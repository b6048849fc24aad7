#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tricirc {

class SimpleGraph;

/// Permutation of {0, ..., n-1} stored as an image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Permutation pow(long exponent) const;
  bool is_identity() const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  /// All cycles including fixed points, each starting at its least element.
  std::vector<std::vector<int>> cycles() const;
  /// True iff every cycle has the same length (the generated cyclic group
  /// then acts semiregularly).
  bool is_semiregular() const;
  std::string to_cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Composition, applying `b` first: (a * b)(x) = a(b(x)).
Permutation operator*(const Permutation& a, const Permutation& b);

bool is_automorphism(const SimpleGraph& g, const Permutation& p);

/// Partition of a ground set {0..n-1} into orbits under a set of generators.
struct OrbitSet {
  std::vector<int> orbit_of;             // element -> orbit index
  std::vector<std::vector<int>> orbits;  // sorted; ordered by least element

  int count() const { return static_cast<int>(orbits.size()); }
};

OrbitSet orbits(int n, std::span<const Permutation> generators);

}  // namespace tricirc
