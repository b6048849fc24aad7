#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tricirc/families.hpp"
#include "tricirc/voltage.hpp"

namespace tricirc {

/// Reduced closed walks of one length in delta(i) from one start vertex,
/// tallied by net voltage up to sign.
struct WalkTable {
  int delta = 1;
  int length = 0;
  int start = 0;
  std::map<SymbolicVoltage, std::uint64_t> counts;  // keys normalized
  std::uint64_t total = 0;

  std::uint64_t count(const SymbolicVoltage& v) const;
};

WalkTable walk_table(int delta_index, int length, int start);

/// The five congruences a vertex-transitive T_1 must satisfy one of, in
/// order: 3s-2r+k, 3r-2s+k, 3r-s, 3s-r, 4r-4s.
const std::array<SymbolicVoltage, 5>& t1_congruences();

/// 8-cycles through a lifted edge of each type, predicted from the
/// length-8 walks of delta(1) when exactly the voltage classes 0 and
/// +-equation vanish.
struct EdgeTypeCounts {
  std::uint64_t zero = 0, r = 0, s = 0, k = 0;
  std::array<std::uint64_t, 3> signature() const;  // sorted (0, R, S) at u-style vertices
  bool operator==(const EdgeTypeCounts&) const = default;
};

EdgeTypeCounts predicted_8cycle_counts(const SymbolicVoltage& equation);

struct T1Check {
  int k = 0, r = 0, s = 0;
  std::array<bool, 5> eq_holds{};
  // conditions as stated, then with r and s interchanged
  bool ks_odd_coprime = false, r_even_gcd_1_or_3 = false;
  bool kr_odd_coprime = false, s_even_gcd_1_or_3 = false;
  std::optional<int> unique_equation;  // index into t1_congruences()
  std::optional<EdgeTypeCounts> predicted;
};

T1Check check_t1_conditions(int k, int r, int s);

/// Orbit representatives of (r, s) under the isomorphisms of the type:
/// unit multipliers for all types, r <-> s for types 1 and 4, s -> -s for
/// type 2, and independent sign changes for type 4. Type 3 uses r only.
bool is_canonical_parameter(const FamilyParams& p);
std::vector<FamilyParams> reduced_parameters(int type, int k);

/// One vertex-transitive isomorphism class found by a sweep or census.
struct VtClass {
  std::string canonical;
  std::string family;  // "X(k)", "Y(k)", "prism(m)", "moebius(m)", a named graph, or ""
  std::vector<FamilyParams> members;
  std::set<int> types;
  int order = 0;
  int girth = 0;
  bool arc_transitive = false;
  std::string aut_order;
};

struct SweepReport {
  int k = 0;
  int order = 0;
  std::array<std::uint64_t, 4> grid{};       // reduced tuples per type
  std::array<std::uint64_t, 4> simple{};     // of which simple covers
  std::array<std::uint64_t, 4> connected{};  // simple and connected
  std::array<std::uint64_t, 4> vertex_transitive{};
  std::vector<VtClass> classes;  // sorted by canonical form
  std::vector<std::string> anomalies;
};

/// VT test with cheap necessary conditions first: per-fibre local girth,
/// then c-cycle counts through u0, v0, w0 for c in [girth, girth + 2], then
/// the automorphism group.
bool tricirculant_is_vertex_transitive(const SimpleGraph& g, int k);

/// All four types for each k in range. Parallel over parameter tuples.
std::vector<SweepReport> classification_sweep(int k_min, int k_max);
SweepReport sweep_order(int k);

struct CensusReport {
  int max_order = 0;
  std::vector<VtClass> classes;  // sorted by (order, canonical)
  std::map<int, int> per_order;  // order -> class count
};

CensusReport small_census(int max_order = 48);

struct SpotCheck {
  std::string lemma;
  std::string instance;
  bool passed = false;
  std::string detail;
};

std::vector<SpotCheck> lemma_spot_checks(const std::vector<int>& ks);

}  // namespace tricirc
