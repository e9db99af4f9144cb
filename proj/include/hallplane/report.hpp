#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hallplane/axioms.hpp"
#include "hallplane/collineation.hpp"
#include "hallplane/construction.hpp"
#include "hallplane/pappus.hpp"

namespace hallplane {

inline constexpr const char* kToolName = "hallplane";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json point_json(const PlaneTables& pt, PointId p);
nlohmann::json line_json(const PlaneTables& pt, LineId l);
nlohmann::json sextuple_json(const PlaneTables& pt, const Sextuple& s);
nlohmann::json verdict_json(const PlaneTables& pt, const QuestionVerdict& v);
nlohmann::json sweep_json(const SweepSummary& s);
nlohmann::json group_report_json(const GroupPropositionsReport& r);
nlohmann::json field_axioms_json(const FieldAxiomsReport& r);
nlohmann::json quasifield_json(const HallSystem& H, const QuasifieldReport& r);
nlohmann::json desargues_json(const PlaneTables& pt, const DesarguesWitness& w);
nlohmann::json plane_json(const PlaneTables& pt, int p, int k);

/// Renders a report as plain text, one "key: value" line per leaf, arrays
/// indexed. The JSON document stays the canonical form.
std::string render_text(const nlohmann::json& j, int indent = 0);

/// Expected verdicts for the bundled plane families. A run whose aggregate
/// verdict contradicts the expectation exits with status 1.
std::optional<bool> expected_affirmed(QuestionKind kind, int plane_order, bool oracle);

} // namespace hallplane
