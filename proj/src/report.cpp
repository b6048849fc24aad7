#include "tricirc/report.hpp"

#include <algorithm>

namespace tricirc {

namespace {

template <typename T, std::size_t N>
Json array_of(const std::array<T, N>& a) {
  Json out = Json::array();
  for (const auto& x : a) out.push_back(x);
  return out;
}

}  // namespace

Json to_json(const FamilyParams& p) {
  Json j;
  j["type"] = p.type;
  j["k"] = p.k;
  j["r"] = p.r;
  if (p.type != 3) j["s"] = p.s;
  return j;
}

Json to_json(const VtClass& c) {
  Json j;
  j["order"] = c.order;
  j["family"] = c.family;
  j["canonical_graph6"] = c.canonical;
  j["types"] = Json(std::vector<int>(c.types.begin(), c.types.end()));
  j["girth"] = c.girth;
  j["arc_transitive"] = c.arc_transitive;
  j["aut_order"] = c.aut_order;
  Json members = Json::array();
  for (const auto& p : c.members) members.push_back(p.to_string());
  j["members"] = std::move(members);
  return j;
}

Json to_json(const SweepReport& r) {
  Json j;
  j["order"] = r.order;
  j["k"] = r.k;
  j["grid"] = array_of(r.grid);
  j["simple"] = array_of(r.simple);
  j["connected"] = array_of(r.connected);
  j["vertex_transitive"] = array_of(r.vertex_transitive);
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(to_json(c));
  j["classes"] = std::move(classes);
  j["anomalies"] = Json(r.anomalies);
  return j;
}

Json to_json(const CensusReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["max_order"] = r.max_order;
  Json counts = Json::array();
  std::size_t total = 0;
  for (const auto& [order, n] : r.per_order) {
    counts.push_back({{"order", order}, {"count", n}});
    total += static_cast<std::size_t>(n);
  }
  j["per_order"] = std::move(counts);
  j["total"] = total;
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(to_json(c));
  j["classes"] = std::move(classes);
  return j;
}

Json to_json(const WalkTable& t) {
  Json j;
  j["delta"] = t.delta;
  j["length"] = t.length;
  j["start"] = delta(t.delta).vertex_name(t.start);
  j["total"] = t.total;
  Json rows = Json::array();
  for (const auto& [v, n] : t.counts)
    rows.push_back({{"voltage", v.is_zero() ? "0" : "+-(" + v.to_string() + ")"}, {"count", n}});
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const SpotCheck& c) {
  return {{"lemma", c.lemma}, {"instance", c.instance}, {"passed", c.passed}, {"detail", c.detail}};
}

Json sweep_document(std::vector<SweepReport> reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const SweepReport& a, const SweepReport& b) {
    return std::pair(a.order, a.k) < std::pair(b.order, b.k);
  });
  Json doc;
  doc["schema"] = kReportSchema;
  doc["reports"] = Json::array();
  for (const auto& r : reports) doc["reports"].push_back(to_json(r));
  return doc;
}

std::string report_emit(const std::vector<SweepReport>& reports) {
  return sweep_document(reports).dump();
}

}  // namespace tricirc
