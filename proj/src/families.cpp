#include "tricirc/families.hpp"

#include <array>
#include <stdexcept>

#include "tricirc/error.hpp"
#include "tricirc/voltage.hpp"

namespace tricirc {

namespace {

int mod(long x, long n) {
  long m = x % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

void require_odd_k(int k, const char* what) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument(std::string(what) + " requires an odd k >= 3");
}

// Vertex maps of the form x_i -> target(x, parity(i)) with index i + offset.
struct FibreRule {
  int target;  // 0 = u, 1 = v, 2 = w
  long offset;
};

Permutation parity_map(int k, const std::array<std::array<FibreRule, 3>, 2>& rules) {
  const int n = 2 * k;
  std::vector<int> images(3 * n);
  for (int x = 0; x < 3; ++x)
    for (int i = 0; i < n; ++i) {
      const FibreRule& rule = rules[i % 2][x];
      images[x * n + i] = rule.target * n + mod(i + rule.offset, n);
    }
  return Permutation(std::move(images));
}

}  // namespace

FamilyParams FamilyParams::normalized() const {
  FamilyParams p = *this;
  const int n = 2 * k;
  p.r = mod(r, n);
  p.s = type == 3 ? 0 : mod(s, n);
  return p;
}

bool FamilyParams::connected() const {
  return cover_connected(tricirculant_voltages(type, k, r, s));
}

std::string FamilyParams::to_string() const {
  std::string out = "T" + std::to_string(type) + "(" + std::to_string(k) + "," + std::to_string(r);
  if (type != 3) out += "," + std::to_string(s);
  return out + ")";
}

SimpleGraph build(const FamilyParams& params) {
  if (params.type < 1 || params.type > 4) throw std::invalid_argument("type must be 1..4");
  if (params.k < 1) throw std::invalid_argument("k must be positive");
  const FamilyParams p = params.normalized();
  return derived_cover(tricirculant_voltages(p.type, p.k, p.r, p.s));
}

SimpleGraph t1(int k, int r, int s) { return build({1, k, r, s}); }
SimpleGraph t2(int k, int r, int s) { return build({2, k, r, s}); }
SimpleGraph t3(int k, int r) { return build({3, k, r, 0}); }
SimpleGraph t4(int k, int r, int s) { return build({4, k, r, s}); }

int r_star(int k) {
  require_odd_k(k, "r*");
  return k % 4 == 1 ? (k + 3) / 2 : (k + 3) / 2 + k;
}

SimpleGraph x_graph(int k) { return t1(k, r_star(k), 1); }

SimpleGraph y_graph(int k) {
  require_odd_k(k, "Y(k)");
  return t2(k, 2, 1);
}

SimpleGraph gp(int n, int m) {
  if (n < 3) throw std::invalid_argument("gp: n must be >= 3");
  m = mod(m, n);
  if (m == 0 || (2 * m) % n == 0) throw std::invalid_argument("gp: need m != 0 and 2m != 0 mod n");
  SimpleGraph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + m) % n);
  }
  return g;
}

SimpleGraph prism(int m) {
  if (m < 3) throw std::invalid_argument("prism: m must be >= 3");
  SimpleGraph g(2 * m);
  for (int i = 0; i < m; ++i) {
    g.add_edge(i, (i + 1) % m);
    g.add_edge(m + i, m + (i + 1) % m);
    g.add_edge(i, m + i);
  }
  return g;
}

SimpleGraph moebius(int m) {
  if (m < 3) throw std::invalid_argument("moebius: m must be >= 3");
  SimpleGraph g(2 * m);
  for (int i = 0; i < 2 * m; ++i) g.add_edge(i, (i + 1) % (2 * m));
  for (int i = 0; i < m; ++i) g.add_edge(i, i + m);
  return g;
}

Permutation t1_bicirculant_map(int k, int r, int s) {
  constexpr int u = 0, v = 1, w = 2;
  const long ks = k + s;
  return parity_map(k, {{
                           {{{v, 0}, {w, r}, {u, 0}}},               // even i
                           {{{w, ks}, {u, ks}, {v, ks - r}}},         // odd i
                       }});
}

Permutation known_automorphism(KnownAutomorphism which, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  constexpr int u = 0, v = 1, w = 2;
  const int n = 2 * k;
  switch (which) {
    case KnownAutomorphism::Rho:
    case KnownAutomorphism::Negation: {
      std::vector<int> images(3 * n);
      for (int x = 0; x < 3; ++x)
        for (int i = 0; i < n; ++i)
          images[x * n + i] =
              x * n + (which == KnownAutomorphism::Rho ? (i + 1) % n : mod(-i, n));
      return Permutation(std::move(images));
    }
    case KnownAutomorphism::PhiX: {
      const long rs = r_star(k);
      return parity_map(k, {{
                               {{{w, 2 - rs}, {u, 2 - rs}, {v, 2 - 2 * rs}}},  // even i
                               {{{v, rs - 2}, {w, 2 * rs - 2}, {u, rs - 2}}},  // odd i
                           }});
    }
    case KnownAutomorphism::PhiT1Bic:
      return t1_bicirculant_map(k, r_star(k), 1);
    case KnownAutomorphism::PhiY:
      require_odd_k(k, "phi_y");
      return parity_map(k, {{
                               {{{v, 1}, {u, 1}, {v, 0}}},          // even i
                               {{{w, 2 + k}, {w, 2}, {u, k}}},      // odd i
                           }});
  }
  throw std::invalid_argument("unknown automorphism");
}

KnownAutomorphism parse_known_automorphism(const std::string& name) {
  if (name == "rho") return KnownAutomorphism::Rho;
  if (name == "phi_x") return KnownAutomorphism::PhiX;
  if (name == "phi_t1_bic") return KnownAutomorphism::PhiT1Bic;
  if (name == "phi_y") return KnownAutomorphism::PhiY;
  if (name == "negation") return KnownAutomorphism::Negation;
  throw std::invalid_argument("unknown automorphism identifier '" + name + "'");
}

TorusDecomposition torus_cycle_decomposition(const SimpleGraph& g, int k) {
  require_odd_k(k, "torus decomposition");
  const int n = 2 * k;
  if (g.order() != 3 * n || g.fibre_size() != n)
    throw Error("torus decomposition: graph is not a fibred cover with 2k = " + std::to_string(n));
  constexpr int u = 0, v = 1, w = 2;
  TorusDecomposition d;
  for (int i = 0; i < n; i += 2) {
    d.c1.push_back(g.vertex_id(w, i));
    d.c1.push_back(g.vertex_id(u, i));
    d.c2.push_back(g.vertex_id(w, i + 1));
    d.c2.push_back(g.vertex_id(u, i + 1));
  }
  for (int i = 0; i < n; ++i) d.c3.push_back(g.vertex_id(v, i));

  const std::array<const std::vector<int>*, 3> cycles{&d.c1, &d.c2, &d.c3};
  std::vector<int> cycle_of(g.order(), -1);
  for (int c = 0; c < 3; ++c)
    for (int x : *cycles[c]) {
      if (cycle_of[x] >= 0) throw Error("torus decomposition: cycles overlap");
      cycle_of[x] = c;
    }
  for (int c = 0; c < 3; ++c) {
    const auto& cyc = *cycles[c];
    const int len = static_cast<int>(cyc.size());
    int first_side = -1;
    for (int p = 0; p < len; ++p) {
      const int prev = cyc[(p + len - 1) % len];
      const int next = cyc[(p + 1) % len];
      const int x = cyc[p];
      if (!g.adjacent(x, next))
        throw Error("torus decomposition: " + g.vertex_label(x) + " and " + g.vertex_label(next) +
                    " are not adjacent");
      if (g.degree(x) != 3) throw Error("torus decomposition: graph is not cubic");
      int third = -1;
      for (int y : g.neighbors(x))
        if (y != prev && y != next) third = y;
      const int side = cycle_of[third];
      // Off-cycle neighbours alternate between the two other cycles.
      const int expected = p % 2 == 0 ? first_side : 3 - c - first_side;
      if (side == c) throw Error("torus decomposition: chord inside a cycle");
      if (p == 0)
        first_side = side;
      else if (side != expected)
        throw Error("torus decomposition: off-cycle neighbours do not alternate");
    }
  }
  return d;
}

}  // namespace tricirc
