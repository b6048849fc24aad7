#include "tricirc/voltage.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "tricirc/error.hpp"

namespace tricirc {

namespace {

int mod(long x, int n) {
  long m = x % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

// The voltage symbol is the dart-name suffix after '_': "k", "0", "r", "-r"...
SymbolicVoltage parse_symbol(const std::string& dart_name) {
  const auto pos = dart_name.find('_');
  if (pos == std::string::npos) throw std::logic_error("unlabelled catalogue dart");
  std::string sym = dart_name.substr(pos + 1);
  int sign = 1;
  if (!sym.empty() && sym.front() == '-') {
    sign = -1;
    sym.erase(0, 1);
  }
  if (sym == "k") return {1, 0, 0};
  if (sym == "0") return {};
  if (sym == "r") return {0, sign, 0};
  if (sym == "s") return {0, 0, sign};
  throw std::logic_error("unknown voltage symbol " + sym);
}

}  // namespace

SymbolicVoltage SymbolicVoltage::normalized() const {
  const SymbolicVoltage neg = -*this;
  return std::pair(a, b) >= std::pair(neg.a, neg.b) ? *this : neg;
}

int SymbolicVoltage::evaluate(int k, int r, int s) const {
  const int n = 2 * k;
  return mod(static_cast<long>(eps) * k + static_cast<long>(a) * r + static_cast<long>(b) * s, n);
}

std::string SymbolicVoltage::to_string() const {
  std::string out;
  auto term = [&](int coeff, const char* sym) {
    if (coeff == 0) return;
    if (coeff < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (std::abs(coeff) != 1) out += std::to_string(std::abs(coeff));
    out += sym;
  };
  term(eps, "k");
  term(a, "r");
  term(b, "s");
  return out.empty() ? "0" : out;
}

std::vector<SymbolicVoltage> symbolic_zeta(int delta_index) {
  const Pregraph& p = delta(delta_index);
  std::vector<SymbolicVoltage> out;
  out.reserve(p.num_darts());
  for (int d = 0; d < p.num_darts(); ++d) out.push_back(parse_symbol(p.dart_name(d)));
  return out;
}

std::vector<EdgeTag> delta_tags(int delta_index) {
  std::vector<EdgeTag> out;
  for (const auto& v : symbolic_zeta(delta_index)) {
    if (v.eps)
      out.push_back(EdgeTag::K);
    else if (v.a)
      out.push_back(EdgeTag::R);
    else if (v.b)
      out.push_back(EdgeTag::S);
    else
      out.push_back(EdgeTag::Zero);
  }
  return out;
}

void VoltageAssignment::validate() const {
  if (modulus < 1) throw std::invalid_argument("voltage modulus must be positive");
  if (static_cast<int>(zeta.size()) != base.num_darts())
    throw std::invalid_argument("one voltage per dart required");
  if (!tags.empty() && static_cast<int>(tags.size()) != base.num_darts())
    throw std::invalid_argument("one tag per dart required");
  for (int d = 0; d < base.num_darts(); ++d) {
    if (zeta[d] < 0 || zeta[d] >= modulus)
      throw std::invalid_argument("voltage outside [0, n)");
    if (mod(zeta[d] + zeta[base.inv(d)], modulus) != 0)
      throw std::invalid_argument("voltage of inverse dart is not the negative");
  }
}

VoltageAssignment tricirculant_voltages(int delta_index, int k, int r, int s) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  VoltageAssignment va;
  va.base = delta(delta_index);
  va.modulus = 2 * k;
  for (const auto& v : symbolic_zeta(delta_index)) va.zeta.push_back(v.evaluate(k, r, s));
  va.tags = delta_tags(delta_index);
  return va;
}

SimpleGraph derived_cover(const VoltageAssignment& zeta) {
  zeta.validate();
  const Pregraph& p = zeta.base;
  const int n = zeta.modulus;
  SimpleGraph g(p.num_vertices() * n);
  std::vector<std::string> names;
  for (int x = 0; x < p.num_vertices(); ++x) names.push_back(p.vertex_name(x));
  g.set_fibres(n, names);
  for (int d = 0; d < p.num_darts(); ++d) {
    const int i = p.inv(d);
    // Each edge {(d, a), (inv d, a + zeta d)} is added once from its smaller
    // dart; a semi-edge dart is its own inverse, so only half its lifts are new.
    if (i < d) continue;
    const EdgeTag tag = zeta.tags.empty() ? EdgeTag::None : zeta.tags[d];
    for (int a = 0; a < n; ++a) {
      const int b = mod(a + zeta.zeta[d], n);
      if (i == d && b < a) continue;
      const int from = p.beg(d) * n + a;
      const int to = p.end(d) * n + b;
      try {
        g.add_edge(from, to, tag);
      } catch (const NonSimpleCover&) {
        throw NonSimpleCover("cover is not simple: base dart " + p.dart_name(d) +
                             " with voltage " + std::to_string(zeta.zeta[d]) +
                             " lifts to a loop or a repeated edge at " + g.vertex_label(from));
      }
    }
  }
  return g;
}

int net_voltage(const VoltageAssignment& zeta, const Walk& walk) {
  if (!is_walk(zeta.base, walk)) throw std::invalid_argument("not a walk of the voltage base");
  long sum = 0;
  for (int d : walk.darts) sum += zeta.zeta[d];
  return mod(sum, zeta.modulus);
}

SymbolicVoltage raw_symbolic_net_voltage(int delta_index, const Walk& walk) {
  const Pregraph& p = delta(delta_index);
  if (!is_walk(p, walk)) throw std::invalid_argument("not a walk of the catalogue pregraph");
  static const std::vector<SymbolicVoltage> zetas[4] = {symbolic_zeta(1), symbolic_zeta(2),
                                                        symbolic_zeta(3), symbolic_zeta(4)};
  const auto& z = zetas[delta_index - 1];
  SymbolicVoltage sum;
  for (int d : walk.darts) sum = sum + z[d];
  return sum;
}

SymbolicVoltage symbolic_net_voltage(int delta_index, const Walk& walk) {
  return raw_symbolic_net_voltage(delta_index, walk).normalized();
}

bool cover_connected(const VoltageAssignment& zeta) {
  zeta.validate();
  const Pregraph& p = zeta.base;
  const int n = zeta.modulus;
  if (!p.is_connected()) return false;
  // Potentials along a BFS tree; net voltages of non-tree darts w.r.t. the
  // tree generate the fibre-stabiliser subgroup.
  std::vector<int> pot(p.num_vertices(), -1);
  std::queue<int> q;
  pot[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int d : p.darts_at(x)) {
      const int y = p.end(d);
      if (pot[y] < 0) {
        pot[y] = mod(pot[x] + zeta.zeta[d], n);
        q.push(y);
      }
    }
  }
  std::vector<int> gens;
  for (int d = 0; d < p.num_darts(); ++d) {
    const int g = mod(pot[p.beg(d)] + zeta.zeta[d] - pot[p.end(d)], n);
    if (g) gens.push_back(g);
  }
  std::vector<char> in(n, 0);
  std::vector<int> stack{0};
  in[0] = 1;
  int size = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int g : gens) {
      const int y = (x + g) % n;
      if (!in[y]) {
        in[y] = 1;
        ++size;
        stack.push_back(y);
      }
    }
  }
  return size == n;
}

bool t1_connected_by_gcd(int k, int r, int s) {
  return std::gcd(std::gcd(k, mod(r, 2 * k)), mod(s, 2 * k)) == 1;
}

namespace {

struct OrbitLayout {
  int length = 0;
  std::vector<int> orbit_of;  // vertex -> quotient vertex
  std::vector<int> index_of;  // vertex -> j with rho^j(rep) = vertex
  std::vector<int> reps;
};

OrbitLayout layout(const SimpleGraph& g, const Permutation& rho) {
  if (rho.size() != g.order() || !is_automorphism(g, rho))
    throw NotAutomorphism("quotient: permutation is not an automorphism of the graph");
  if (!rho.is_semiregular()) throw NotSemiregular("quotient: permutation is not semiregular");
  OrbitLayout out;
  out.orbit_of.assign(g.order(), -1);
  out.index_of.assign(g.order(), -1);
  for (const auto& c : rho.cycles()) {
    out.length = static_cast<int>(c.size());
    const int id = static_cast<int>(out.reps.size());
    out.reps.push_back(c.front());
    int x = c.front();
    for (int j = 0; j < out.length; ++j, x = rho(x)) {
      out.orbit_of[x] = id;
      out.index_of[x] = j;
    }
  }
  return out;
}

}  // namespace

VoltageAssignment quotient_voltages(const SimpleGraph& g, const Permutation& rho) {
  const OrbitLayout lay = layout(g, rho);
  const int n = lay.length;
  const int nq = static_cast<int>(lay.reps.size());
  // Dart (rep_X -> y) for every quotient vertex X and neighbour y of rep_X.
  std::vector<int> beg, target;
  std::map<std::pair<int, int>, int> dart_of;
  for (int x = 0; x < nq; ++x)
    for (int y : g.neighbors(lay.reps[x])) {
      dart_of[{lay.reps[x], y}] = static_cast<int>(beg.size());
      beg.push_back(x);
      target.push_back(y);
    }
  const int nd = static_cast<int>(beg.size());
  std::vector<int> inv(nd), zeta(nd);
  for (int d = 0; d < nd; ++d) {
    const int y = target[d];
    zeta[d] = lay.index_of[y];
    // Reverse arc (y, rep_X), shifted back so that it starts at rep_Y.
    const Permutation shift = rho.pow(-static_cast<long>(lay.index_of[y]));
    const int from = shift(y);
    const int to = shift(lay.reps[beg[d]]);
    inv[d] = dart_of.at({from, to});
  }
  VoltageAssignment va;
  va.base = Pregraph::from_arrays(nq, beg, inv);
  va.modulus = n;
  va.zeta = std::move(zeta);
  va.validate();
  return va;
}

Pregraph quotient(const SimpleGraph& g, const Permutation& rho) {
  return quotient_voltages(g, rho).base;
}

}  // namespace tricirc
