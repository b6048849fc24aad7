#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tricirc/verify.hpp"

namespace tricirc {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json to_json(const FamilyParams& p);
Json to_json(const VtClass& c);
Json to_json(const SweepReport& r);
Json to_json(const CensusReport& r);
Json to_json(const WalkTable& t);
Json to_json(const SpotCheck& c);

/// {"schema":1,"reports":[...]} with reports ordered by (order, k).
Json sweep_document(std::vector<SweepReport> reports);
std::string report_emit(const std::vector<SweepReport>& reports);

}  // namespace tricirc
