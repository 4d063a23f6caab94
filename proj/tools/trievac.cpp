#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trievac/audit.hpp"
#include "trievac/bounds.hpp"
#include "trievac/closed_form.hpp"
#include "trievac/nlp_verify.hpp"
#include "trievac/parallel.hpp"
#include "trievac/report.hpp"

namespace {

using namespace trievac;

constexpr int kExitDomainError = 2;
constexpr int kExitIoError = 3;

struct Common {
  std::string format = "json";
  int jobs = 0;  // 0 = TRIEVAC_JOBS env or hardware concurrency
  int resolved_jobs() const { return jobs >= 1 ? jobs : default_jobs(); }
};

Edge resolve_edge(const Triangle& t, const std::string& name, bool raw_labels) {
  const Edge e = parse_edge(name);
  if (!raw_labels) return e;
  return t.canonical_of_input(static_cast<int>(e));
}

int run(int argc, char** argv) {
  CLI::App app{"Worst-case evacuation costs for two wireless unit-speed "
               "agents searching the perimeter of a non-obtuse triangle"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--jobs may follow the subcommand

  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--jobs", common.jobs,
                 "Worker threads (default: TRIEVAC_JOBS or hardware)");

  // bounds
  double ba = 0, bb = 0, bc = 0;
  auto* cmd_bounds = app.add_subcommand(
      "bounds", "Lower/upper bounds for the four starting-point games");
  cmd_bounds->add_option("a", ba, "first edge")->required();
  cmd_bounds->add_option("b", bb, "second edge")->required();
  cmd_bounds->add_option("c", bc, "third edge")->required();

  // oracle
  double oa = 0, ob = 0, oc = 0, ox = 0;
  std::string oedge;
  int on = 20000;
  bool raw_labels = false;
  auto* cmd_oracle = app.add_subcommand(
      "oracle", "Brute-force worst case vs the closed form for one start");
  cmd_oracle->add_option("a", oa)->required();
  cmd_oracle->add_option("b", ob)->required();
  cmd_oracle->add_option("c", oc)->required();
  cmd_oracle->add_option("edge", oedge, "start edge (a|b|c, canonical)")
      ->required();
  cmd_oracle->add_option("x", ox, "signed offset from the edge midpoint")
      ->required();
  cmd_oracle->add_option("n", on, "exit grid count")->capture_default_str();
  cmd_oracle->add_flag("--raw-labels", raw_labels,
                       "edge letter refers to input order, not sorted order");

  // curve
  std::string cgame, cout_path;
  double tmin = 0, tmax = 0;
  int csteps = 0;
  auto* cmd_curve = app.add_subcommand(
      "curve", "Lower/upper bound ratio curve h(t) as CSV plot data");
  cmd_curve->add_option("game", cgame)->check(CLI::IsMember({"u-under", "u-over"}))
      ->required();
  cmd_curve->add_option("t_min", tmin)->required();
  cmd_curve->add_option("t_max", tmax)->required();
  cmd_curve->add_option("steps", csteps)->required();
  cmd_curve->add_option("out_path", cout_path)->required();

  // verify
  std::string claim = "all";
  int resolution = 60;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Certify the registered inequality claims numerically");
  cmd_verify->add_option("claim", claim, "claim id or 'all'")
      ->capture_default_str();
  cmd_verify->add_option("resolution", resolution, "grid resolution")
      ->capture_default_str();

  // sweep-random
  std::uint64_t seed = 1;
  int count = 100, starts = 5, sweep_n = 20000;
  auto* cmd_sweep = app.add_subcommand(
      "sweep-random", "Seeded random-triangle oracle-vs-formula audit");
  cmd_sweep->add_option("--seed", seed)->capture_default_str();
  cmd_sweep->add_option("--count", count, "number of triangles")
      ->capture_default_str();
  cmd_sweep->add_option("--starts", starts, "starts per triangle")
      ->capture_default_str();
  cmd_sweep->add_option("--n", sweep_n, "oracle grid count")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  const ReportFormat fmt = parse_format(common.format);
  const int jobs = common.resolved_jobs();

  if (cmd_bounds->parsed()) {
    const Triangle t(ba, bb, bc);
    std::cout << bounds_report(t, theorem_bounds(t), fmt);
    return 0;
  }

  if (cmd_oracle->parsed()) {
    if (on < 100) throw std::invalid_argument("oracle grid n must be >= 100");
    const Triangle t(oa, ob, oc);
    const StartSpec s = make_start(t, resolve_edge(t, oedge, raw_labels), ox);
    const EvacOutcome outcome = worst_case_oracle(t, s, on, jobs);
    std::cout << oracle_report(t, s, outcome, t_for_start(t, s), fmt);
    return 0;
  }

  if (cmd_curve->parsed()) {
    if (!(tmin > 0.0) || tmin > tmax || tmax > 1.0)
      throw std::invalid_argument("need 0 < t_min <= t_max <= 1");
    if (csteps < 1) throw std::invalid_argument("steps must be >= 1");
    std::vector<double> ts(static_cast<size_t>(csteps));
    for (int i = 0; i < csteps; ++i)
      ts[static_cast<size_t>(i)] =
          csteps == 1 ? tmin : tmin + (tmax - tmin) * i / (csteps - 1);
    const Game game = cgame == "u-under" ? Game::U_under : Game::U_over;
    const auto pts = ratio_curve(game, ts, jobs);
    std::ofstream out(cout_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << cout_path << " for writing\n";
      return kExitIoError;
    }
    out << curve_csv(pts);
    out.flush();
    if (!out) {
      std::cerr << "write failed: " << cout_path << "\n";
      return kExitIoError;
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    const auto certs = claim == "all" ? verify_all(resolution, jobs)
                                      : verify_claim(claim, resolution, jobs);
    std::cout << verify_report(certs, resolution, fmt);
    for (const ClaimCertificate& c : certs)
      if (c.verdict != Verdict::Holds) return 1;
    return 0;
  }

  if (cmd_sweep->parsed()) {
    if (sweep_n < 100) throw std::invalid_argument("oracle grid n must be >= 100");
    std::cout << audit_report(random_audit(seed, count, starts, sweep_n, jobs),
                              fmt);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const DegenerateTriangle& e) {
    std::cerr << "degenerate triangle: " << e.what() << "\n";
  } catch (const ObtuseTriangle& e) {
    std::cerr << "obtuse triangle: " << e.what() << "\n";
  } catch (const UnknownClaim& e) {
    std::cerr << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
  }
  return kExitDomainError;
}
