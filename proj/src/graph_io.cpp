#include "tricirc/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "tricirc/error.hpp"

namespace tricirc {

namespace {


void append_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string encode_graph6(const SimpleGraph& g) {
  const long n = g.order();
  std::string out;
  append_size(out, n);
  const long bits = n * (n - 1) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) packed[bit / 6] |= static_cast<unsigned char>(1 << (5 - bit % 6));
  for (unsigned char c : packed) out.push_back(static_cast<char>(c + 63));
  return out;
}

SimpleGraph decode_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw Graph6Error("graph6: character outside 63..126");
  long n = 0;
  std::size_t pos = 0;
  auto take = [&](int count) {
    if (pos + count > text.size()) throw Graph6Error("graph6: truncated size header");
    long v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | (text[pos++] - 63);
    return v;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take(6);
    if (n <= 258047) throw Graph6Error("graph6: non-canonical size header");
  } else {
    pos = 1;
    n = take(3);
    if (n <= 62) throw Graph6Error("graph6: non-canonical size header");
  }
  if (n > 1'000'000) throw Graph6Error("graph6: order too large");
  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != bytes)
    throw Graph6Error("graph6: body length " + std::to_string(text.size() - pos) +
                      " does not match order " + std::to_string(n));
  SimpleGraph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if (byte & (1 << (5 - bit % 6))) g.add_edge(i, j);
    }
  if (bytes > 0) {
    const int last = text.back() - 63;
    const int pad = static_cast<int>(bytes * 6 - bits);
    if (last & ((1 << pad) - 1)) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << " [label=\"" << g.vertex_label(v) << "\"];\n";
  for (auto [a, b] : g.edges()) {
    os << "  " << a << " -- " << b;
    if (g.has_tags()) os << " [label=\"" << to_string(g.tag(a, b)) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [a, b] : g.edges()) os << a << ' ' << b << '\n';
  return os.str();
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  long n = 0, m = 0;
  if (!(is >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header");
  SimpleGraph g(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    int a = 0, b = 0;
    if (!(is >> a >> b)) throw std::invalid_argument("edge list: truncated");
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("edge list: vertex out of range");
    if (a == b || g.adjacent(a, b)) throw std::invalid_argument("edge list: loop or repeated edge");
    g.add_edge(a, b);
  }
  return g;
}

SimpleGraph parse_graph(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && std::isdigit(static_cast<unsigned char>(t.front()))) {
    // graph6 never starts with a digit: every byte is >= 63.
    return parse_edge_list(t);
  }
  const auto eol = t.find('\n');
  return decode_graph6(eol == std::string_view::npos ? t : t.substr(0, eol));
}

std::string to_pregraph_text(const VoltageAssignment& va) {
  std::ostringstream os;
  const Pregraph& p = va.base;
  os << "pregraph " << p.num_vertices() << ' ' << p.num_darts() << ' ' << va.modulus << '\n';
  for (int d = 0; d < p.num_darts(); ++d)
    os << "dart " << d << ' ' << p.beg(d) << ' ' << p.inv(d) << ' ' << va.zeta[d] << '\n';
  return os.str();
}

VoltageAssignment parse_pregraph_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string word;
  int nv = 0, nd = 0, n = 0;
  if (!(is >> word >> nv >> nd >> n) || word != "pregraph")
    throw std::invalid_argument("pregraph text: bad header");
  std::vector<int> beg(nd), inv(nd), zeta(nd);
  for (int i = 0; i < nd; ++i) {
    int id = 0;
    if (!(is >> word >> id) || word != "dart" || id != i)
      throw std::invalid_argument("pregraph text: expected dart " + std::to_string(i));
    if (!(is >> beg[i] >> inv[i] >> zeta[i])) throw std::invalid_argument("pregraph text: truncated");
  }
  VoltageAssignment va;
  va.base = Pregraph::from_arrays(nv, beg, inv);
  va.modulus = n;
  va.zeta = std::move(zeta);
  va.validate();
  return va;
}

}  // namespace tricirc
