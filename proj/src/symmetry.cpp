#include "tricirc/symmetry.hpp"

#include <algorithm>
#include <string>

#include "tricirc/error.hpp"
#include "tricirc/graph_io.hpp"
#include "tricirc/perm_group.hpp"

namespace tricirc {

namespace {

void guard(const SimpleGraph& g, int max_order) {
  if (g.order() > max_order)
    throw GuardExceeded("graph order " + std::to_string(g.order()) + " exceeds guard " +
                        std::to_string(max_order));
}

// Orbits on a derived ground set, given the induced action of each generator.
template <typename Action>
OrbitSet induced_orbits(std::size_t ground, const AutomorphismGroup& aut, Action act) {
  std::vector<Permutation> induced;
  induced.reserve(aut.generators.size());
  for (const auto& gamma : aut.generators) {
    std::vector<int> images(ground);
    for (std::size_t x = 0; x < ground; ++x) images[x] = act(gamma, static_cast<int>(x));
    induced.emplace_back(std::move(images));
  }
  return orbits(static_cast<int>(ground), induced);
}

}  // namespace

AutomorphismGroup automorphism_group(const SimpleGraph& g, int max_order) {
  guard(g, max_order);
  SearchOptions opt;
  opt.canonical = false;
  SearchResult r = search_automorphisms(g, opt);
  AutomorphismGroup aut;
  aut.degree = g.order();
  aut.generators = std::move(r.generators);
  aut.base = std::move(r.base);
  aut.order = r.group_order;
  return aut;
}

OrbitSet vertex_orbits(const AutomorphismGroup& aut) { return orbits(aut.degree, aut.generators); }

OrbitSet edge_orbits(const SimpleGraph& g, const AutomorphismGroup& aut) {
  const EdgeIndex idx(g);
  return induced_orbits(idx.edges.size(), aut, [&](const Permutation& p, int e) {
    auto [a, b] = idx.edges[e];
    return idx.edge_id(p(a), p(b));
  });
}

OrbitSet arc_orbits(const SimpleGraph& g, const AutomorphismGroup& aut) {
  const EdgeIndex idx(g);
  return induced_orbits(2 * idx.edges.size(), aut, [&](const Permutation& p, int arc) {
    auto [a, b] = idx.edges[arc / 2];
    if (arc % 2) std::swap(a, b);
    const int x = p(a), y = p(b);
    return 2 * idx.edge_id(x, y) + (x < y ? 0 : 1);
  });
}

bool is_vertex_transitive(const SimpleGraph& g) {
  return g.order() <= 1 || is_vertex_transitive(automorphism_group(g));
}

bool is_vertex_transitive(const AutomorphismGroup& aut) {
  return aut.degree <= 1 || vertex_orbits(aut).count() == 1;
}

bool is_edge_transitive(const SimpleGraph& g, const AutomorphismGroup& aut) {
  return g.size() <= 1 || edge_orbits(g, aut).count() == 1;
}

bool is_arc_transitive(const SimpleGraph& g) { return is_arc_transitive(g, automorphism_group(g)); }

bool is_arc_transitive(const SimpleGraph& g, const AutomorphismGroup& aut) {
  return g.size() == 0 || arc_orbits(g, aut).count() == 1;
}

std::string canonical_form(const SimpleGraph& g, int max_order) {
  guard(g, max_order);
  const SearchResult r = search_automorphisms(g);
  return encode_graph6(relabel(g, r.canonical_labeling));
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<Permutation> isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  guard(a, kDeskScaleOrder);
  const auto la = search_automorphisms(a).canonical_labeling;
  const auto lb = search_automorphisms(b).canonical_labeling;
  if (!(relabel(a, la) == relabel(b, lb))) return std::nullopt;
  std::vector<int> lb_inv(lb.size());
  for (std::size_t v = 0; v < lb.size(); ++v) lb_inv[lb[v]] = static_cast<int>(v);
  std::vector<int> images(la.size());
  for (std::size_t v = 0; v < la.size(); ++v) images[v] = lb_inv[la[v]];
  return Permutation(std::move(images));
}

std::optional<Permutation> find_k_circulant(const SimpleGraph& g, int m, std::uint64_t cap) {
  return find_k_circulant(automorphism_group(g), m, cap);
}

std::optional<Permutation> find_k_circulant(const AutomorphismGroup& aut, int m,
                                            std::uint64_t cap) {
  const int n = aut.degree;
  if (m <= 0 || n % m != 0) throw std::invalid_argument("orbit count must divide the order");
  const int period = n / m;
  // Aut(G) has an element of order `period` only if `period` divides |Aut(G)|.
  if (aut.order % period != 0) return std::nullopt;
  const PermGroup group(n, aut.generators);
  std::optional<Permutation> found;
  bool capped = false;
  std::uint64_t seen = 0;
  group.for_each_element([&](const Permutation& p) {
    if (++seen > cap) {
      capped = true;
      return false;
    }
    // cheap reject: the orbit of 0 must already have the right length
    int len = 1;
    for (int x = p(0); x != 0 && len <= period; x = p(x)) ++len;
    if (len != period) return true;
    if (p.is_semiregular() && static_cast<int>(p.order()) == period) {
      found = p;
      return false;
    }
    return true;
  });
  if (found) return found;
  if (capped) throw GuardExceeded("group element enumeration exceeded cap");
  return std::nullopt;
}

SimpleGraph edge_type_subgraph(const SimpleGraph& g, std::span<const EdgeTag> types) {
  if (!g.has_tags()) throw Error("edge_type_subgraph needs a tagged family graph");
  SimpleGraph out(g.order());
  if (g.fibre_size() > 0) out.set_fibres(g.fibre_size(), g.base_names());
  for (auto [a, b] : g.edges()) {
    const EdgeTag t = g.tag(a, b);
    if (std::find(types.begin(), types.end(), t) != types.end()) out.add_edge(a, b, t);
  }
  return out;
}

}  // namespace tricirc
