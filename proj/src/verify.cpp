#include "tricirc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tricirc/cycles.hpp"
#include "tricirc/error.hpp"
#include "tricirc/symmetry.hpp"

namespace tricirc {

std::uint64_t WalkTable::count(const SymbolicVoltage& v) const {
  const auto it = counts.find(v.normalized());
  return it == counts.end() ? 0 : it->second;
}

WalkTable walk_table(int delta_index, int length, int start) {
  WalkTable t;
  t.delta = delta_index;
  t.length = length;
  t.start = start;
  for (const Walk& w : reduced_closed_walks(delta(delta_index), start, length)) {
    ++t.counts[symbolic_net_voltage(delta_index, w)];
    ++t.total;
  }
  return t;
}

const std::array<SymbolicVoltage, 5>& t1_congruences() {
  static const std::array<SymbolicVoltage, 5> eqs{{
      {1, -2, 3},  // 3s - 2r + k
      {1, 3, -2},  // 3r - 2s + k
      {0, 3, -1},  // 3r - s
      {0, -1, 3},  // 3s - r
      {0, 4, -4},  // 4r - 4s
  }};
  return eqs;
}

std::array<std::uint64_t, 3> EdgeTypeCounts::signature() const {
  std::array<std::uint64_t, 3> t{zero, r, s};
  std::sort(t.begin(), t.end());
  return t;
}

EdgeTypeCounts predicted_8cycle_counts(const SymbolicVoltage& equation) {
  const Pregraph& base = delta(1);
  const auto tags = delta_tags(1);
  const SymbolicVoltage zero{};
  const SymbolicVoltage eq = equation.normalized();
  // occurrences of each base edge (keyed by its smaller dart) over all
  // vanishing walks from every start vertex
  std::vector<std::uint64_t> occ(base.num_darts(), 0);
  for (int x = 0; x < base.num_vertices(); ++x) {
    for (const Walk& w : reduced_closed_walks(base, x, 8)) {
      const SymbolicVoltage v = symbolic_net_voltage(1, w);
      if (v != zero && v != eq) continue;
      for (int d : w.darts) ++occ[std::min(d, base.inv(d))];
    }
  }
  // each cycle is seen as 16 rooted directed walks; links lift to 2k edges,
  // the semi-edge to k
  EdgeTypeCounts out;
  std::optional<std::uint64_t> zero_count;
  for (int d = 0; d < base.num_darts(); ++d) {
    if (base.inv(d) < d) continue;
    const bool semi = base.inv(d) == d;
    const std::uint64_t scaled = semi ? 2 * occ[d] : occ[d];
    if (scaled % 16 != 0) throw Error("non-integral 8-cycle prediction");
    const std::uint64_t c = scaled / 16;
    switch (tags[d]) {
      case EdgeTag::Zero:
        if (zero_count && *zero_count != c) throw Error("0-edges disagree in 8-cycle prediction");
        zero_count = c;
        out.zero = c;
        break;
      case EdgeTag::R: out.r = c; break;
      case EdgeTag::S: out.s = c; break;
      case EdgeTag::K: out.k = c; break;
      case EdgeTag::None: break;
    }
  }
  return out;
}

T1Check check_t1_conditions(int k, int r, int s) {
  T1Check c;
  const int n = 2 * k;
  c.k = k;
  c.r = ((r % n) + n) % n;
  c.s = ((s % n) + n) % n;
  int holding = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    c.eq_holds[i] = t1_congruences()[i].evaluate(k, c.r, c.s) == 0;
    if (c.eq_holds[i]) {
      ++holding;
      c.unique_equation = static_cast<int>(i);
    }
  }
  if (holding != 1) c.unique_equation.reset();
  const auto odd_coprime = [&](int x) { return k % 2 == 1 && x % 2 == 1 && std::gcd(k, x) == 1; };
  const auto even_small_gcd = [&](int x) {
    const int g = std::gcd(k, x);
    return x % 2 == 0 && (g == 1 || g == 3);
  };
  c.ks_odd_coprime = odd_coprime(c.s);
  c.r_even_gcd_1_or_3 = even_small_gcd(c.r);
  c.kr_odd_coprime = odd_coprime(c.r);
  c.s_even_gcd_1_or_3 = even_small_gcd(c.s);
  if (c.unique_equation) c.predicted = predicted_8cycle_counts(t1_congruences()[*c.unique_equation]);
  return c;
}

namespace {

std::vector<int> units(int n) {
  std::vector<int> out;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  if (n == 1 || n == 2) out = {1};
  return out;
}

int mod(long x, int n) { return static_cast<int>(((x % n) + n) % n); }

}  // namespace

bool is_canonical_parameter(const FamilyParams& params) {
  const FamilyParams p = params.normalized();
  const int n = 2 * p.k;
  std::vector<std::pair<int, int>> moves{{p.r, p.s}};
  switch (p.type) {
    case 1:
      moves.emplace_back(p.s, p.r);
      break;
    case 2:
      moves.emplace_back(p.r, mod(-p.s, n));
      break;
    case 4:
      for (int sr : {1, -1})
        for (int ss : {1, -1}) {
          moves.emplace_back(mod(sr * p.r, n), mod(ss * p.s, n));
          moves.emplace_back(mod(ss * p.s, n), mod(sr * p.r, n));
        }
      break;
    default:
      break;
  }
  for (int a : units(n))
    for (auto [r, s] : moves)
      if (std::pair(mod(static_cast<long>(a) * r, n), mod(static_cast<long>(a) * s, n)) <
          std::pair(p.r, p.s))
        return false;
  return true;
}

std::vector<FamilyParams> reduced_parameters(int type, int k) {
  const int n = 2 * k;
  std::vector<FamilyParams> out;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < (type == 3 ? 1 : n); ++s) {
      FamilyParams p{type, k, r, s};
      if (is_canonical_parameter(p)) out.push_back(p);
    }
  return out;
}

namespace {

std::optional<AutomorphismGroup> vt_group(const SimpleGraph& g, int k) {
  const int n = 2 * k;
  const std::array<int, 3> roots{0, n, 2 * n};
  const int g0 = girth_at(g, roots[0]);
  for (int v : roots)
    if (girth_at(g, v) != g0) return std::nullopt;
  if (g0 > 0) {
    for (int c = g0; c <= g0 + 2; ++c) {
      const auto c0 = cycles_through_vertex(g, roots[0], c);
      for (int v : roots)
        if (cycles_through_vertex(g, v, c) != c0) return std::nullopt;
    }
  }
  AutomorphismGroup aut = automorphism_group(g);
  if (!is_vertex_transitive(aut)) return std::nullopt;
  return aut;
}

struct TupleResult {
  FamilyParams params;
  bool simple = false;
  bool connected = false;
  bool connectivity_mismatch = false;
  bool vt = false;
  std::string canonical;
  int girth = 0;
  bool arc_transitive = false;
  std::string aut_order;
};

TupleResult examine(const FamilyParams& p) {
  TupleResult t;
  t.params = p;
  SimpleGraph g;
  try {
    g = build(p);
  } catch (const NonSimpleCover&) {
    return t;
  }
  t.simple = true;
  t.connected = g.is_connected();
  t.connectivity_mismatch = t.connected != p.connected();
  if (!t.connected) return t;
  const auto aut = vt_group(g, p.k);
  if (!aut) return t;
  t.vt = true;
  t.canonical = canonical_form(g);
  t.girth = girth(g);
  t.arc_transitive = is_arc_transitive(g, *aut);
  t.aut_order = aut->order.str();
  return t;
}

std::vector<TupleResult> examine_all(const std::vector<FamilyParams>& tuples) {
  std::vector<TupleResult> results(tuples.size());
  const auto count = static_cast<std::ptrdiff_t>(tuples.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) results[i] = examine(tuples[i]);
  return results;
}

std::optional<std::string> try_canonical(SimpleGraph (*make)(int), int arg) {
  try {
    return canonical_form(make(arg));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

struct Reference {
  std::string name;
  std::string canonical;
};

std::vector<Reference> references(int k) {
  std::vector<Reference> out;
  const auto add = [&](const std::string& name, std::optional<std::string> canon) {
    if (canon) out.push_back({name, std::move(*canon)});
  };
  const std::string ks = std::to_string(k), ms = std::to_string(3 * k);
  add("X(" + ks + ")", try_canonical(x_graph, k));
  add("Y(" + ks + ")", try_canonical(y_graph, k));
  add("prism(" + ms + ")", try_canonical(prism, 3 * k));
  add("moebius(" + ms + ")", try_canonical(moebius, 3 * k));
  return out;
}

std::string named_graph(int order, bool arc_transitive, int g) {
  if (!arc_transitive) return {};
  if (order == 6 && g == 4) return "K_{3,3}";
  if (order == 18 && g == 6) return "Pappus";
  if (order == 30 && g == 8) return "Tutte 8-cage";
  if (order == 54 && g == 6) return "F054A";
  return {};
}

std::string identify(const VtClass& c, const std::vector<Reference>& refs) {
  std::vector<std::string> names;
  if (auto named = named_graph(c.order, c.arc_transitive, c.girth); !named.empty())
    names.push_back(named);
  for (const auto& ref : refs)
    if (ref.canonical == c.canonical) names.push_back(ref.name);
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " = ") + n;
  return out;
}

// Groups VT tuple results into classes keyed by canonical form.
std::vector<VtClass> classes_of(const std::vector<TupleResult>& results) {
  std::map<std::string, VtClass> by_canon;
  for (const auto& t : results) {
    if (!t.vt) continue;
    VtClass& c = by_canon[t.canonical];
    c.canonical = t.canonical;
    c.members.push_back(t.params);
    c.types.insert(t.params.type);
    c.order = 6 * t.params.k;
    c.girth = t.girth;
    c.arc_transitive = t.arc_transitive;
    c.aut_order = t.aut_order;
  }
  std::vector<VtClass> out;
  for (auto& [canon, c] : by_canon) {
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

bool tricirculant_is_vertex_transitive(const SimpleGraph& g, int k) {
  return vt_group(g, k).has_value();
}

SweepReport sweep_order(int k) {
  SweepReport rep;
  rep.k = k;
  rep.order = 6 * k;
  std::vector<FamilyParams> tuples;
  for (int type = 1; type <= 4; ++type) {
    auto reps = reduced_parameters(type, k);
    rep.grid[type - 1] = reps.size();
    tuples.insert(tuples.end(), reps.begin(), reps.end());
  }
  const auto results = examine_all(tuples);
  for (const auto& t : results) {
    const int i = t.params.type - 1;
    rep.simple[i] += t.simple;
    rep.connected[i] += t.connected;
    rep.vertex_transitive[i] += t.vt;
    if (t.connectivity_mismatch)
      rep.anomalies.push_back("connectivity test disagrees on " + t.params.to_string());
  }
  const auto refs = references(k);
  rep.classes = classes_of(results);
  for (auto& c : rep.classes) c.family = identify(c, refs);

  if (!(k >= 9)) return rep;
  // expectations for order >= 54
  std::vector<std::string> expected;
  const std::string ks = std::to_string(k), ms = std::to_string(3 * k);
  if (k % 2 == 1) {
    expected = {"X(" + ks + ")", "Y(" + ks + ")", "prism(" + ms + ")", "moebius(" + ms + ")"};
  } else {
    expected = {"moebius(" + ms + ")"};
  }
  const auto has_name = [](const VtClass& c, const std::string& name) {
    std::istringstream in(c.family);
    std::string part, token;
    while (in >> token) {
      if (token == "=") continue;
      if (token == name) return true;
    }
    return false;
  };
  for (const auto& c : rep.classes) {
    const bool known = std::any_of(expected.begin(), expected.end(),
                                   [&](const std::string& e) { return has_name(c, e); });
    if (!known)
      rep.anomalies.push_back("unexpected vertex-transitive class from " +
                              c.members.front().to_string());
    const bool ladder = has_name(c, "prism(" + ms + ")") || has_name(c, "moebius(" + ms + ")");
    if (ladder && !c.types.count(3))
      rep.anomalies.push_back("ladder class without a type 3 member at k=" + ks);
  }
  for (const auto& e : expected) {
    const bool found = std::any_of(rep.classes.begin(), rep.classes.end(),
                                   [&](const VtClass& c) { return has_name(c, e); });
    if (!found) rep.anomalies.push_back("expected class " + e + " not found");
  }
  if (rep.vertex_transitive[3] != 0)
    rep.anomalies.push_back("vertex-transitive type 4 graph at k=" + ks);
  return rep;
}

std::vector<SweepReport> classification_sweep(int k_min, int k_max) {
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("bad k range");
  if (6 * k_max > 300) throw GuardExceeded("sweep order exceeds 300");
  std::vector<SweepReport> out;
  for (int k = k_min; k <= k_max; ++k) out.push_back(sweep_order(k));
  return out;
}

CensusReport small_census(int max_order) {
  if (max_order < 6 || max_order % 6 != 0)
    throw std::invalid_argument("max_order must be a positive multiple of 6");
  CensusReport rep;
  rep.max_order = max_order;
  for (int k = 1; 6 * k <= max_order; ++k) {
    std::vector<FamilyParams> tuples;
    for (int type = 1; type <= 4; ++type) {
      auto reps = reduced_parameters(type, k);
      tuples.insert(tuples.end(), reps.begin(), reps.end());
    }
    const auto refs = references(k);
    auto classes = classes_of(examine_all(tuples));
    rep.per_order[6 * k] = static_cast<int>(classes.size());
    for (auto& c : classes) {
      c.family = identify(c, refs);
      rep.classes.push_back(std::move(c));
    }
  }
  return rep;
}

namespace {

SpotCheck spot(std::string lemma, const FamilyParams& p, bool passed, std::string detail) {
  return {std::move(lemma), p.to_string(), passed, std::move(detail)};
}

std::optional<SimpleGraph> connected_instance(const FamilyParams& p) {
  try {
    SimpleGraph g = build(p);
    if (!g.is_connected()) return std::nullopt;
    return g;
  } catch (const NonSimpleCover&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<SpotCheck> lemma_spot_checks(const std::vector<int>& ks) {
  std::vector<SpotCheck> out;
  for (int k : ks) {
    const int n = 2 * k;
    const int u0 = 0, v0 = n;
    for (int s = 0; s < n; ++s) {
      const FamilyParams p{1, k, k, s};
      if (auto g = connected_instance(p)) {
        const auto cu = cycles_through_vertex(*g, u0, 4), cv = cycles_through_vertex(*g, v0, 4);
        out.push_back(spot("r = k", p, cu != cv,
                           "4-cycles at u0: " + std::to_string(cu) + ", at v0: " + std::to_string(cv)));
      }
    }
    for (int s = 0; s < n; ++s) {
      const FamilyParams p{1, k, 0, s};
      if (auto g = connected_instance(p))
        out.push_back(spot("r = 0", p, !is_c_cycle_regular(*g, 8), "8-cycle-regular expected false"));
    }
    for (const auto& p : reduced_parameters(2, k)) {
      auto g = connected_instance(p);
      if (!g || !tricirculant_is_vertex_transitive(*g, k)) continue;
      const auto triangles = count_cycles(*g, 3).total;
      out.push_back(spot("no triangles", p, triangles == 0, std::to_string(triangles) + " triangles"));
    }
    const Permutation neg = known_automorphism(KnownAutomorphism::Negation, k);
    for (const auto& p : reduced_parameters(4, k)) {
      try {
        const SimpleGraph g = build(p);
        out.push_back(spot("negation", p, is_automorphism(g, neg), "x_i -> x_-i"));
      } catch (const NonSimpleCover&) {
      }
    }
    // 2r - 2s + k = 0: the walk (uv)_0 (vw)_r (wv)_-s (vw)_r (wv)_-s (vu)_0 (uu)_k lifts to a 7-cycle
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        if (mod(2L * r - 2L * s + k, n) != 0) continue;
        const FamilyParams p{1, k, r, s};
        auto g = connected_instance(p);
        if (!g) continue;
        const auto U = [&](int i) { return mod(i, n); };
        const auto V = [&](int i) { return n + mod(i, n); };
        const auto W = [&](int i) { return 2 * n + mod(i, n); };
        const std::vector<int> cyc{U(0), V(0), W(r), V(r - s), W(2 * r - s), V(2 * r - 2 * s),
                                   U(2 * r - 2 * s)};
        bool is_cycle = std::set<int>(cyc.begin(), cyc.end()).size() == cyc.size();
        for (std::size_t i = 0; i < cyc.size() && is_cycle; ++i)
          is_cycle = g->adjacent(cyc[i], cyc[(i + 1) % cyc.size()]);
        const bool regular = is_c_vertex_regular(*g, 7);
        out.push_back(spot("7-cycle", p, is_cycle && !regular,
                           std::string(is_cycle ? "lifted walk is a 7-cycle" : "lift is not a 7-cycle") +
                               (regular ? "; 7-vertex-regular" : "; not 7-vertex-regular")));
      }
  }
  return out;
}

}  // namespace tricirc
