#pragma once

#include <string>

#include "tricirc/graph.hpp"
#include "tricirc/permutation.hpp"

namespace tricirc {

/// Parameters of a tricirculant cover T_type(k, r, s) on 6k vertices.
/// r and s live in Z_{2k}; s is ignored for type 3.
struct FamilyParams {
  int type = 1;
  int k = 1;
  int r = 0;
  int s = 0;

  /// r and s reduced into [0, 2k) (s forced to 0 for type 3).
  FamilyParams normalized() const;
  /// Connectivity of the cover (voltages generate Z_{2k}).
  bool connected() const;
  /// The classification theorems are stated for k >= 9 (order >= 54).
  bool within_theorem_range() const { return k >= 9; }
  std::string to_string() const;

  bool operator==(const FamilyParams&) const = default;
  auto operator<=>(const FamilyParams&) const = default;
};

/// Builds T_type(k, r, s). Fibres u, v, w with vertex id x * 2k + i; edges
/// carry K/0/R/S tags. Throws NonSimpleCover when the cover has a loop or a
/// parallel edge (e.g. type 1 with r = s). Disconnected covers are returned.
SimpleGraph build(const FamilyParams& params);

SimpleGraph t1(int k, int r, int s);
SimpleGraph t2(int k, int r, int s);
SimpleGraph t3(int k, int r);
SimpleGraph t4(int k, int r, int s);

/// (k + 3) / 2 when k = 1 (mod 4), (k + 3) / 2 + k when k = 3 (mod 4).
/// Throws std::invalid_argument for even k or k < 3.
int r_star(int k);

SimpleGraph x_graph(int k);  // T_1(k, r*, 1)
SimpleGraph y_graph(int k);  // T_2(k, 2, 1)

/// Generalized Petersen graph: outer cycle 0..n-1, spokes i -- n+i, inner
/// edges n+i -- n+(i+m). m is reduced mod n; requires n >= 3, m != 0 and
/// 2m != 0 (mod n).
SimpleGraph gp(int n, int m);
/// Two m-cycles joined by a perfect matching (2m vertices), m >= 3.
SimpleGraph prism(int m);
/// A 2m-cycle with its m long diagonals, m >= 3.
SimpleGraph moebius(int m);

enum class KnownAutomorphism {
  Rho,        // i -> i + 1 on every fibre
  PhiX,       // mixes the fibres of X(k)
  PhiT1Bic,   // bicirculant automorphism of X(k)
  PhiY,       // mixes the fibres of Y(k); bicirculant when 3 does not divide k
  Negation,   // i -> -i on every fibre
};

/// Explicit vertex maps on the 6k vertices of a tricirculant cover. Rho and
/// Negation apply to any type; PhiX and PhiT1Bic to X(k), PhiY to Y(k).
/// Throws std::invalid_argument when k is not valid for the target family.
Permutation known_automorphism(KnownAutomorphism which, int k);
KnownAutomorphism parse_known_automorphism(const std::string& name);

/// Bicirculant map of a type-1 cover with r even and k, s odd; on
/// T_1(k, r, s) it is an automorphism when 3s - 2r + k = 0 (mod 2k).
Permutation t1_bicirculant_map(int k, int r, int s);

/// Three vertex-disjoint 2k-cycles covering Y(k): even-index vertices of
/// U and W, odd-index vertices of U and W, and the fibre V.
struct TorusDecomposition {
  std::vector<int> c1, c2, c3;  // vertex sequences in cyclic order
};

/// Extracts and verifies the decomposition on y_graph(k): each C_i is a
/// cycle of G, they partition V(G), and along C_i the off-cycle neighbours
/// alternate between C_{i-1} and C_{i+1}. Throws Error if the structure is
/// not present.
TorusDecomposition torus_cycle_decomposition(const SimpleGraph& g, int k);

}  // namespace tricirc
