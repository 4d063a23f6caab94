#include "trievac/report.hpp"

#include <cstdio>
#include <sstream>

namespace trievac {

using nlohmann::json;

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown format: " + name);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string edge_name(Edge e) {
  switch (e) {
    case Edge::a: return "a";
    case Edge::b: return "b";
    case Edge::c: return "c";
  }
  return "?";
}

Edge parse_edge(const std::string& name) {
  if (name == "a") return Edge::a;
  if (name == "b") return Edge::b;
  if (name == "c") return Edge::c;
  throw std::invalid_argument("edge must be one of a, b, c");
}

json bounds_json(const Triangle& t, const BoundsReport& r) {
  return json{
      {"triangle", {{"a", t.a()}, {"b", t.b()}, {"c", t.c()}}},
      {"games",
       {{"L_under", {{"value", r.L_under}}},
        {"L_over", {{"lb", r.L_over.lb}, {"ub", r.L_over.ub}}},
        {"U_under", {{"lb", r.U_under.lb}, {"ub", r.U_under.ub}}},
        {"U_over", {{"lb", r.U_over.lb}, {"ub", r.U_over.ub}}}}},
      {"per_edge",
       {{"a", {{"l", r.l[0]}, {"u", r.u[0]}}},
        {"b", {{"l", r.l[1]}, {"u", r.u[1]}}},
        {"c", {{"l", r.l[2]}, {"u", r.u[2]}}}}},
  };
}

json oracle_json(const Triangle& t, const StartSpec& s, const EvacOutcome& oc,
                 double closed_form) {
  return json{
      {"triangle", {{"a", t.a()}, {"b", t.b()}, {"c", t.c()}}},
      {"start", {{"edge", edge_name(s.edge)}, {"x", s.x}}},
      {"oracle",
       {{"cost", oc.cost},
        {"worst_exit",
         {{"arc", oc.worst_exit.s},
          {"x", oc.worst_exit.point.x},
          {"y", oc.worst_exit.point.y}}},
        {"resolution", oc.resolution}}},
      {"closed_form", closed_form},
      {"gap", std::abs(closed_form - oc.cost)},
  };
}

json verify_json(const std::vector<ClaimCertificate>& certs, int resolution) {
  json arr = json::array();
  bool all_hold = true;
  for (const ClaimCertificate& c : certs) {
    all_hold = all_hold && c.verdict == Verdict::Holds;
    json j{
        {"claim", c.claim_id},
        {"group", c.group},
        {"verdict", c.verdict == Verdict::Holds ? "Holds" : "Violated"},
        {"extremum", c.extremum},
        {"arg", c.arg},
        {"grid_feasible", c.grid_feasible},
        {"grid_per_axis", c.grid_per_axis},
    };
    j["stated_value"] = c.stated_value ? json(*c.stated_value) : json();
    j["witness"] = c.witness ? json(*c.witness) : json();
    arr.push_back(std::move(j));
  }
  return json{{"resolution", resolution},
              {"all_hold", all_hold},
              {"certificates", std::move(arr)}};
}

json audit_json(const AuditSummary& s) {
  return json{
      {"seed", s.seed},
      {"triangles", s.triangles},
      {"starts_per_triangle", s.starts_per_triangle},
      {"grid_n", s.grid_n},
      {"max_gap", s.max_gap},
      {"max_gap_over_tol", s.max_gap_over_tol},
      {"all_within_tol", s.all_within_tol},
      {"worst",
       {{"triangle", s.worst.edges},
        {"edge", edge_name(s.worst.edge)},
        {"x", s.worst.x},
        {"oracle_cost", s.worst.oracle_cost},
        {"closed_cost", s.worst.closed_cost},
        {"gap", s.worst.gap},
        {"tol", s.worst.tol}}},
  };
}

std::string scalar_csv(const std::vector<std::pair<std::string, double>>& rows) {
  std::string out = "quantity,value\n";
  for (const auto& [k, v] : rows) {
    out += k;
    out += ',';
    out += format_double(v);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::pair<std::string, double>> bounds_rows(const Triangle& t,
                                                        const BoundsReport& r) {
  return {
      {"a", t.a()},
      {"b", t.b()},
      {"c", t.c()},
      {"L_under", r.L_under},
      {"L_over.lb", r.L_over.lb},
      {"L_over.ub", r.L_over.ub},
      {"U_under.lb", r.U_under.lb},
      {"U_under.ub", r.U_under.ub},
      {"U_over.lb", r.U_over.lb},
      {"U_over.ub", r.U_over.ub},
      {"l_a", r.l[0]},
      {"u_a", r.u[0]},
      {"l_b", r.l[1]},
      {"u_b", r.u[1]},
      {"l_c", r.l[2]},
      {"u_c", r.u[2]},
  };
}

}  // namespace

std::string bounds_report(const Triangle& t, const BoundsReport& r,
                          ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::Json: return bounds_json(t, r).dump(2) + "\n";
    case ReportFormat::Csv: return scalar_csv(bounds_rows(t, r));
    case ReportFormat::Text: break;
  }
  std::ostringstream os;
  os << "triangle a=" << format_double(t.a()) << " b=" << format_double(t.b())
     << " c=" << format_double(t.c()) << "\n"
     << "L_under  = " << format_double(r.L_under) << "\n"
     << "L_over   in [" << format_double(r.L_over.lb) << ", "
     << format_double(r.L_over.ub) << "]\n"
     << "U_under  in [" << format_double(r.U_under.lb) << ", "
     << format_double(r.U_under.ub) << "]\n"
     << "U_over   in [" << format_double(r.U_over.lb) << ", "
     << format_double(r.U_over.ub) << "]\n";
  for (int i = 0; i < 3; ++i) {
    const auto e = static_cast<size_t>(i);
    os << "edge " << edge_name(static_cast<Edge>(i))
       << ": l = " << format_double(r.l[e]) << ", u = " << format_double(r.u[e])
       << "\n";
  }
  return os.str();
}

std::string oracle_report(const Triangle& t, const StartSpec& s,
                          const EvacOutcome& oc, double closed_form,
                          ReportFormat fmt) {
  const double gap = std::abs(closed_form - oc.cost);
  switch (fmt) {
    case ReportFormat::Json:
      return oracle_json(t, s, oc, closed_form).dump(2) + "\n";
    case ReportFormat::Csv:
      return scalar_csv({{"oracle.cost", oc.cost},
                         {"oracle.worst_exit.arc", oc.worst_exit.s},
                         {"oracle.resolution", oc.resolution},
                         {"closed_form", closed_form},
                         {"gap", gap}});
    case ReportFormat::Text: break;
  }
  std::ostringstream os;
  os << "start edge " << edge_name(s.edge) << " x=" << format_double(s.x)
     << "\n"
     << "oracle cost      = " << format_double(oc.cost) << " (worst exit arc "
     << format_double(oc.worst_exit.s) << ", grid spacing "
     << format_double(oc.resolution) << ")\n"
     << "closed-form cost = " << format_double(closed_form) << "\n"
     << "gap              = " << format_double(gap) << "\n";
  return os.str();
}

std::string verify_report(const std::vector<ClaimCertificate>& certs,
                          int resolution, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::Json: return verify_json(certs, resolution).dump(2) + "\n";
    case ReportFormat::Csv: {
      std::string out =
          "claim,verdict,extremum,arg_alpha,arg_beta,arg_gamma\n";
      for (const ClaimCertificate& c : certs) {
        out += c.claim_id;
        out += c.verdict == Verdict::Holds ? ",Holds," : ",Violated,";
        out += format_double(c.extremum) + ',' + format_double(c.arg[0]) +
               ',' + format_double(c.arg[1]) + ',' + format_double(c.arg[2]) +
               '\n';
      }
      return out;
    }
    case ReportFormat::Text: break;
  }
  std::ostringstream os;
  for (const ClaimCertificate& c : certs) {
    os << c.claim_id << ": "
       << (c.verdict == Verdict::Holds ? "Holds" : "VIOLATED")
       << " (extremum " << format_double(c.extremum) << " at alpha="
       << format_double(c.arg[0]) << " beta=" << format_double(c.arg[1])
       << " gamma=" << format_double(c.arg[2]) << ")";
    if (c.witness) {
      os << " witness=(" << format_double((*c.witness)[0]) << ", "
         << format_double((*c.witness)[1]) << ", "
         << format_double((*c.witness)[2]) << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string audit_report(const AuditSummary& s, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::Json: return audit_json(s).dump(2) + "\n";
    case ReportFormat::Csv:
      return scalar_csv({{"seed", static_cast<double>(s.seed)},
                         {"triangles", static_cast<double>(s.triangles)},
                         {"starts_per_triangle",
                          static_cast<double>(s.starts_per_triangle)},
                         {"grid_n", static_cast<double>(s.grid_n)},
                         {"max_gap", s.max_gap},
                         {"max_gap_over_tol", s.max_gap_over_tol},
                         {"all_within_tol", s.all_within_tol ? 1.0 : 0.0}});
    case ReportFormat::Text: break;
  }
  std::ostringstream os;
  os << s.triangles << " triangles x " << s.starts_per_triangle
     << " starts, oracle grid n=" << s.grid_n << "\n"
     << "max gap " << format_double(s.max_gap) << " ("
     << format_double(s.max_gap_over_tol) << " of tolerance), "
     << (s.all_within_tol ? "all within tolerance" : "TOLERANCE EXCEEDED")
     << "\n"
     << "worst: triangle (" << format_double(s.worst.edges[0]) << ", "
     << format_double(s.worst.edges[1]) << ", "
     << format_double(s.worst.edges[2]) << ") edge "
     << edge_name(s.worst.edge) << " x=" << format_double(s.worst.x) << "\n";
  return os.str();
}

std::string curve_csv(const std::vector<RatioCurvePoint>& pts) {
  std::string out = "t,h,argmin_a,argmin_b,argmin_c\n";
  for (const RatioCurvePoint& p : pts) {
    out += format_double(p.t) + ',' + format_double(p.h) + ',' +
           format_double(p.arg_a) + ',' + format_double(p.arg_b) + ',' +
           format_double(p.arg_c) + '\n';
  }
  return out;
}

}  // namespace trievac
