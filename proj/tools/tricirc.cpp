// Command-line driver: gen, analyze, walks, verify, iso, quotient.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tricirc/cycles.hpp"
#include "tricirc/error.hpp"
#include "tricirc/families.hpp"
#include "tricirc/graph_io.hpp"
#include "tricirc/parallel.hpp"
#include "tricirc/report.hpp"
#include "tricirc/symmetry.hpp"
#include "tricirc/verify.hpp"

using namespace tricirc;

namespace {

constexpr int kExitAnomaly = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SimpleGraph load_graph(const std::string& path) {
  const std::string text = read_source(path);
  try {
    return parse_graph(text);
  } catch (const Graph6Error& e) {
    throw IoError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(path + ": " + e.what());
  }
}

SimpleGraph generate(const std::string& type, int k, int r, int s) {
  if (k < 1) throw UsageError("--k must be positive");
  if (type == "1" || type == "2" || type == "3" || type == "4")
    return build({std::stoi(type), k, r, s});
  if (type == "x") return x_graph(k);
  if (type == "y") return y_graph(k);
  if (type == "prism") return prism(3 * k);
  if (type == "moebius") return moebius(3 * k);
  if (type == "gp") return gp(3 * k, r);
  throw UsageError("unknown --type " + type);
}

std::string render(const SimpleGraph& g, const std::string& format) {
  if (format == "graph6") return encode_graph6(g) + "\n";
  if (format == "dot") return to_dot(g);
  return to_edge_list(g);
}

Json analyze(const SimpleGraph& g, int cmax) {
  Json j;
  j["order"] = g.order();
  j["size"] = g.size();
  j["cubic"] = g.is_regular(3);
  j["connected"] = g.is_connected();
  const int gi = girth(g);
  j["girth"] = gi;

  const AutomorphismGroup aut = automorphism_group(g);
  const bool vt = is_vertex_transitive(aut);
  j["aut_order"] = aut.order.str();
  j["vertex_orbits"] = vertex_orbits(aut).count();
  j["edge_orbits"] = edge_orbits(g, aut).count();
  j["arc_orbits"] = arc_orbits(g, aut).count();
  j["vertex_transitive"] = vt;
  j["edge_transitive"] = is_edge_transitive(g, aut);
  j["arc_transitive"] = is_arc_transitive(g, aut);

  Json cycles = Json::array();
  if (gi > 0) {
    const int top = cmax > 0 ? cmax : gi + 4;
    for (int c = gi; c <= top; ++c) {
      const CycleCounts counts = count_cycles(g, c);
      Json row;
      row["c"] = c;
      row["cycles"] = counts.total;
      const auto& pv = counts.per_vertex;
      row["vertex_regular"] = std::adjacent_find(pv.begin(), pv.end(), std::not_equal_to<>()) == pv.end();
      if (g.is_regular(3)) {
        std::set<std::array<std::uint64_t, 3>> distinct;
        for (const auto& sig : c_signatures(g, counts)) distinct.insert(sig.triple);
        row["cycle_regular"] = distinct.size() == 1;
        Json sigs = Json::array();
        for (const auto& t : distinct) sigs.push_back(Json(std::vector<std::uint64_t>(t.begin(), t.end())));
        row["signatures"] = std::move(sigs);
      }
      cycles.push_back(std::move(row));
    }
  }
  j["cycles"] = std::move(cycles);

  Json circ = Json::array();
  for (int m : {1, 2, 3}) {
    if (g.order() % m != 0) continue;
    Json row;
    row["orbits"] = m;
    try {
      const auto p = find_k_circulant(aut, m);
      row["found"] = p.has_value();
      if (p) row["automorphism"] = p->to_cycle_string();
    } catch (const GuardExceeded& e) {
      row["found"] = nullptr;
      row["error"] = e.what();
    }
    circ.push_back(std::move(row));
  }
  j["k_circulant"] = std::move(circ);
  return j;
}

void print_walks(int d, int length, bool json) {
  const Pregraph& base = delta(d);
  std::vector<WalkTable> tables;
  for (int x = 0; x < base.num_vertices(); ++x) tables.push_back(walk_table(d, length, x));
  if (json) {
    Json doc;
    doc["schema"] = kReportSchema;
    doc["tables"] = Json::array();
    for (const auto& t : tables) doc["tables"].push_back(to_json(t));
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::set<SymbolicVoltage> keys;
  for (const auto& t : tables)
    for (const auto& [v, n] : t.counts) keys.insert(v);
  std::cout << "net voltage";
  for (int x = 0; x < base.num_vertices(); ++x) std::cout << '\t' << base.vertex_name(x);
  std::cout << '\n';
  for (const auto& v : keys) {
    std::cout << (v.is_zero() ? std::string("0") : "+-(" + v.to_string() + ")");
    for (const auto& t : tables) std::cout << '\t' << t.count(v);
    std::cout << '\n';
  }
  std::cout << "total";
  for (const auto& t : tables) std::cout << '\t' << t.total;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads();
  CLI::App app{"Cubic tricirculant graphs: construction, symmetry and classification checks"};
  app.require_subcommand(1);

  std::string type = "1", format = "graph6";
  int k = 9, r = 0, s = 0;
  auto* gen = app.add_subcommand("gen", "Print a family graph");
  gen->add_option("--type", type, "1..4, x, y, prism, moebius or gp")->required();
  gen->add_option("--k", k, "Fibre half-size (order 6k)")->required();
  gen->add_option("--r", r, "Voltage r (gp: step)");
  gen->add_option("--s", s, "Voltage s");
  gen->add_option("--format", format)->check(CLI::IsMember({"graph6", "dot", "edges"}));

  std::string input;
  int cmax = 0;
  auto* an = app.add_subcommand("analyze", "Symmetry and cycle report as JSON");
  an->add_option("input", input, "graph6 or edge-list file, - for stdin")->required();
  an->add_option("--cycles", cmax, "Largest cycle length (default girth + 4)");

  int wd = 1, wl = 8;
  bool wjson = false;
  auto* walks = app.add_subcommand("walks", "Net voltages of reduced closed walks in a quotient");
  walks->add_option("--delta", wd)->check(CLI::Range(1, 4))->required();
  walks->add_option("--length", wl)->check(CLI::Range(1, 16))->required();
  walks->add_flag("--json", wjson);

  int kmin = 9, kmax = 15;
  bool census = false, spot = false;
  auto* ver = app.add_subcommand("verify", "Classification sweep; exit 1 on anomalies");
  ver->add_option("--kmin", kmin)->check(CLI::PositiveNumber);
  ver->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
  ver->add_flag("--census", census, "Also run the census of orders up to 48");
  ver->add_flag("--spot", spot, "Also run the lemma spot checks");

  std::string a_path, b_path;
  bool witness = false;
  auto* iso = app.add_subcommand("iso", "Exit 0 iff the two graphs are isomorphic");
  iso->add_option("a", a_path)->required();
  iso->add_option("b", b_path)->required();
  iso->add_flag("--witness", witness, "Print a vertex map");

  std::string q_path;
  int q_order = 0;
  auto* quo = app.add_subcommand("quotient", "Quotient by a semiregular automorphism");
  quo->add_option("input", q_path)->required();
  quo->add_option("--order", q_order, "Order of the automorphism")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      std::cout << render(generate(type, k, r, s), format);
      return 0;
    }
    if (*an) {
      std::cout << analyze(load_graph(input), cmax).dump(2) << "\n";
      return 0;
    }
    if (*walks) {
      print_walks(wd, wl, wjson);
      return 0;
    }
    if (*ver) {
      if (kmax < kmin) throw UsageError("--kmax must be at least --kmin");
      const auto reports = classification_sweep(kmin, kmax);
      Json doc = sweep_document(reports);
      bool anomalies = false;
      for (const auto& rep : reports) anomalies |= !rep.anomalies.empty();
      if (census) doc["census"] = to_json(small_census(48));
      if (spot) {
        std::vector<int> ks;
        for (int x = kmin; x <= kmax; ++x) ks.push_back(x);
        Json checks = Json::array();
        for (const auto& c : lemma_spot_checks(ks)) {
          anomalies |= !c.passed;
          checks.push_back(to_json(c));
        }
        doc["spot_checks"] = std::move(checks);
      }
      std::cout << doc.dump(2) << "\n";
      return anomalies ? kExitAnomaly : 0;
    }
    if (*iso) {
      const SimpleGraph a = load_graph(a_path), b = load_graph(b_path);
      if (witness) {
        const auto map = isomorphism(a, b);
        std::cout << (map ? "isomorphic" : "not isomorphic") << "\n";
        if (map)
          for (int v = 0; v < a.order(); ++v) std::cout << v << ' ' << (*map)(v) << '\n';
        return map ? 0 : 1;
      }
      const bool same = are_isomorphic(a, b);
      std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? 0 : 1;
    }
    if (*quo) {
      const SimpleGraph g = load_graph(q_path);
      if (g.order() % q_order != 0) throw UsageError("--order must divide the graph order");
      const auto rho = find_k_circulant(g, g.order() / q_order);
      if (!rho) {
        std::cerr << "no semiregular automorphism of order " << q_order << "\n";
        return kExitAnomaly;
      }
      std::cout << to_pregraph_text(quotient_voltages(g, *rho));
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NonSimpleCover& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnomaly;
  }
  return kExitUsage;
}
