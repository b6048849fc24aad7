#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tricirc/graph.hpp"
#include "tricirc/permutation.hpp"
#include "tricirc/pregraph.hpp"

namespace tricirc {

/// Formal voltage eps*k + a*r + b*s over Z_{2k}, where r and s are
/// indeterminates. Since 2k = 0, the k coefficient lives in Z_2.
struct SymbolicVoltage {
  int eps = 0;
  int a = 0;
  int b = 0;

  SymbolicVoltage operator+(const SymbolicVoltage& o) const {
    return {(eps + o.eps) & 1, a + o.a, b + o.b};
  }
  SymbolicVoltage operator-() const { return {eps, -a, -b}; }
  SymbolicVoltage operator-(const SymbolicVoltage& o) const { return *this + (-o); }
  bool is_zero() const { return eps == 0 && a == 0 && b == 0; }
  /// Representative of {v, -v}: the one whose (a, b) is lexicographically
  /// greater or equal.
  SymbolicVoltage normalized() const;
  /// Value in Z_{2k}.
  int evaluate(int k, int r, int s) const;
  std::string to_string() const;

  bool operator==(const SymbolicVoltage&) const = default;
  auto operator<=>(const SymbolicVoltage& o) const {
    if (auto c = a <=> o.a; c != 0) return c;
    if (auto c = b <=> o.b; c != 0) return c;
    return eps <=> o.eps;
  }
};

/// Voltages of the tricirculant quotient delta(i), one per dart:
/// semi-edges carry k, the spanning-tree links 0, and the remaining
/// edges r or s (as named in the dart labels).
std::vector<SymbolicVoltage> symbolic_zeta(int delta_index);

/// Edge tags induced by the symbolic voltages (K, 0, R, S).
std::vector<EdgeTag> delta_tags(int delta_index);

/// Voltage assignment D -> Z_n on a pregraph.
struct VoltageAssignment {
  Pregraph base;
  int modulus = 1;
  std::vector<int> zeta;      // per dart, in [0, modulus)
  std::vector<EdgeTag> tags;  // optional, per dart

  /// Throws std::invalid_argument unless zeta(inv d) = -zeta(d) for every
  /// dart (which forces 2 zeta(d) = 0 on semi-edges).
  void validate() const;
};

/// zeta_i evaluated at (k, r, s) with modulus 2k, carrying edge tags.
VoltageAssignment tricirculant_voltages(int delta_index, int k, int r, int s);

/// Cov(base, zeta): vertices (x, a) with id x * n + a; dart (d, a) joins
/// (beg d, a) to (end d, a + zeta(d)). Throws NonSimpleCover if the result
/// has loops or parallel edges (which includes semi-edges of voltage 0).
SimpleGraph derived_cover(const VoltageAssignment& zeta);

/// Sum of voltages along a walk, mod n. Throws std::invalid_argument if the
/// dart sequence is not a walk of the base.
int net_voltage(const VoltageAssignment& zeta, const Walk& walk);

/// Formal net voltage of a walk in delta(i), normalized up to sign.
SymbolicVoltage symbolic_net_voltage(int delta_index, const Walk& walk);
/// Same, without the sign normalization.
SymbolicVoltage raw_symbolic_net_voltage(int delta_index, const Walk& walk);

/// Whether the derived cover is connected: normalises zeta along a BFS
/// spanning tree of the base and tests whether the resulting net voltages
/// generate Z_n (subgroup closure, not a gcd shortcut).
bool cover_connected(const VoltageAssignment& zeta);

/// gcd(k, r, s) == 1 shortcut for the type-1 cover.
bool t1_connected_by_gcd(int k, int r, int s);

/// Quotient of `g` by the cyclic group generated by `rho`: vertex orbits
/// become vertices, arc orbits become darts. Throws NotAutomorphism or
/// NotSemiregular.
Pregraph quotient(const SimpleGraph& g, const Permutation& rho);

/// The quotient together with the voltages that recover `g`:
/// derived_cover(quotient_voltages(g, rho)) is isomorphic to g. Vertex x of
/// the quotient has a representative; rho^j(rep) is identified with (x, j).
VoltageAssignment quotient_voltages(const SimpleGraph& g, const Permutation& rho);

}  // namespace tricirc
