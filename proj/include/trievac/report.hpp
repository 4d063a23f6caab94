#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trievac/audit.hpp"
#include "trievac/bounds.hpp"
#include "trievac/geometry.hpp"
#include "trievac/nlp_verify.hpp"
#include "trievac/search_sim.hpp"

namespace trievac {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(const std::string& name);  // "json" | "csv" | "text"

/// 17 significant digits, '.' decimal separator; round-trips a double exactly.
std::string format_double(double v);

std::string edge_name(Edge e);
Edge parse_edge(const std::string& name);

nlohmann::json bounds_json(const Triangle& t, const BoundsReport& r);
nlohmann::json oracle_json(const Triangle& t, const StartSpec& s,
                           const EvacOutcome& oc, double closed_form);
nlohmann::json verify_json(const std::vector<ClaimCertificate>& certs,
                           int resolution);
nlohmann::json audit_json(const AuditSummary& sum);

/// CSV with a stable "quantity,value" header, one row per scalar, LF endings.
std::string scalar_csv(const std::vector<std::pair<std::string, double>>& rows);

std::string bounds_report(const Triangle& t, const BoundsReport& r,
                          ReportFormat fmt);
std::string oracle_report(const Triangle& t, const StartSpec& s,
                          const EvacOutcome& oc, double closed_form,
                          ReportFormat fmt);
std::string verify_report(const std::vector<ClaimCertificate>& certs,
                          int resolution, ReportFormat fmt);
std::string audit_report(const AuditSummary& sum, ReportFormat fmt);

/// Curve CSV: header t,h,argmin_a,argmin_b,argmin_c then one row per point.
std::string curve_csv(const std::vector<RatioCurvePoint>& pts);

}  // namespace trievac
