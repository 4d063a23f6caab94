// Acceptance suite: one line per criterion, exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "trievac/audit.hpp"
#include "trievac/bounds.hpp"
#include "trievac/closed_form.hpp"
#include "trievac/nlp_verify.hpp"
#include "trievac/parallel.hpp"
#include "trievac/search_sim.hpp"

using namespace trievac;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Check {
  Outcome out;
  void require(bool cond, const std::string& msg) {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = msg;
    }
  }
  void note(const std::string& msg) {
    if (out.ok) out.detail = msg;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// 1. Equilateral closed form and oracle agreement on 21 offsets.
Outcome criterion_equilateral() {
  Check ck;
  const Triangle eq = make_triangle(1, 1, 1);
  const double tol = 3.0 * 3.0 / 20000.0;
  double worst_formula = 0.0, worst_oracle = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double x = 0.025 * i;
    const double formula = t_of_x(1, 1, 1, x);
    worst_formula = std::max(worst_formula, std::abs(formula - (1.5 + x)));
    const EvacOutcome o =
        worst_case_oracle(eq, make_start(eq, Edge::a, x), 20000, default_jobs());
    worst_oracle = std::max(worst_oracle, std::abs(o.cost - (1.5 + x)));
  }
  ck.require(worst_formula <= 1e-12,
             "closed form off 3/2+x by " + fmt(worst_formula));
  ck.require(worst_oracle <= tol, "oracle gap " + fmt(worst_oracle));
  ck.note("max formula err " + fmt(worst_formula) + ", max oracle gap " +
          fmt(worst_oracle));
  return ck.out;
}

// 2. Theorem bounds on the equilateral triangle.
Outcome criterion_equilateral_bounds() {
  Check ck;
  const BoundsReport r = theorem_bounds(make_triangle(1, 1, 1));
  const double errs[] = {
      std::abs(r.L_under - 1.5),   std::abs(r.L_over.lb - 1.5),
      std::abs(r.L_over.ub - 1.5), std::abs(r.U_under.lb - 2.0),
      std::abs(r.U_under.ub - 2.0), std::abs(r.U_over.lb - 2.0),
      std::abs(r.U_over.ub - 2.0)};
  double worst = 0.0;
  for (const double e : errs) worst = std::max(worst, e);
  ck.require(worst <= 1e-10, "bound error " + fmt(worst));
  ck.note("max error " + fmt(worst));
  return ck.out;
}

// 3. Explicit l_a values.
Outcome criterion_la_values() {
  Check ck;
  const double v1 = l_edge(make_triangle(std::sqrt(2.0), 1, 1), Edge::a);
  const double v2 = l_edge(make_triangle(1, 1, 1), Edge::a);
  ck.require(std::abs(v1 - 2.0) <= 1e-10, "l_a(sqrt2,1,1) = " + fmt(v1));
  ck.require(std::abs(v2 - 1.5) <= 1e-10, "l_a(1,1,1) = " + fmt(v2));
  ck.note("l_a(sqrt2,1,1) err " + fmt(std::abs(v1 - 2.0)) + ", l_a(1,1,1) err " +
          fmt(std::abs(v2 - 1.5)));
  return ck.out;
}

// 4. Oracle equivalence audit: 1000 triangles x 5 starts at n = 20000.
Outcome criterion_oracle_audit() {
  Check ck;
  struct Sample {
    Triangle t;
    StartSpec s;
  };
  Rng rng(20250809);
  std::vector<Sample> samples;
  samples.reserve(5000);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = random_nonobtuse_triangle(rng);
    for (int k = 0; k < 5; ++k) samples.push_back({t, random_start(rng, t)});
  }
  const int jobs = default_jobs();
  std::vector<double> ratio(samples.size(), 0.0);
  parallel_chunks(static_cast<long>(samples.size()), jobs,
                  [&](int, long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      const Sample& smp = samples[static_cast<size_t>(i)];
      const EvacOutcome o = worst_case_oracle(smp.t, smp.s, 20000, 1);
      const double gap = std::abs(o.cost - t_for_start(smp.t, smp.s));
      ratio[static_cast<size_t>(i)] = gap / (3.0 * smp.t.perimeter() / 20000.0);
    }
  });
  double worst = 0.0;
  for (const double r : ratio) worst = std::max(worst, r);
  ck.require(worst <= 1.0, "gap reaches " + fmt(worst) + "x tolerance");
  ck.note("5000 samples, worst gap " + fmt(worst) + "x tolerance");
  return ck.out;
}

// 5. Two-segment lemma against a dedicated sweep.
Outcome criterion_two_segment() {
  Check ck;
  Rng rng(424242);
  const int n = 2500;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double ab = rng.uniform(0.3, 1.5);
    const double ac = rng.uniform(ab, 1.6);
    const double apex = rng.uniform(0.1, kPi / 2.0);
    const double bc =
        std::sqrt(ab * ab + ac * ac - 2.0 * ab * ac * std::cos(apex));
    const auto sweep = testsupport::two_segment_sweep(ab, ac, bc, n);
    const double expect = two_segment_worst(ab, ac, bc);
    const double err = std::abs(sweep.cost - expect);
    worst = std::max(worst, err / (3.0 * sweep.step));
    ck.require(err <= 3.0 * sweep.step,
               "sweep off closed form by " + fmt(err));
    if (apex < kPi / 3.0 - 1e-9)
      ck.require(sweep.exit_to_apex <= sweep.step + 1e-12,
                 "apex < pi/3 but worst exit " + fmt(sweep.exit_to_apex) +
                     " from the apex");
  }
  ck.note("500 configs, worst err " + fmt(worst) + "x tolerance");
  return ck.out;
}

// 6. Midpoint convexity per configuration.
Outcome criterion_convexity() {
  Check ck;
  Rng rng(606060);
  double worst_slack = 0.0;
  for (const Config cfg : {Config::One, Config::Two}) {
    for (int i = 0; i < 500; ++i) {
      const Triangle t = random_nonobtuse_triangle(rng);
      double edges[3] = {t.a(), t.b(), t.c()};
      // random labeling
      const int p = static_cast<int>(rng.bits() % 6);
      const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      const double al = edges[perm[p][0]], be = edges[perm[p][1]],
                   ga = edges[perm[p][2]];
      double lo = 0.0, hi = std::min(al, ga) / 2.0;
      if (cfg == Config::One) {
        if (ga >= al) continue;
        lo = ga / 2.0;
        hi = al / 2.0;
      }
      for (int k = 0; k + 2 <= 200; k += 2) {
        const double x1 = lo + (hi - lo) * k / 200;
        const double x2 = lo + (hi - lo) * (k + 2) / 200;
        const double slack =
            t_of_x(al, be, ga, (x1 + x2) / 2.0) -
            (t_of_x(al, be, ga, x1) + t_of_x(al, be, ga, x2)) / 2.0;
        worst_slack = std::max(worst_slack, slack);
        ck.require(slack <= 1e-10, "convexity slack " + fmt(slack));
      }
    }
  }
  ck.note("worst midpoint slack " + fmt(worst_slack));
  return ck.out;
}

// 7. The registered claim catalogue at resolution 60.
Outcome criterion_claims() {
  Check ck;
  const auto certs = verify_all(60, default_jobs());
  double worst_stated = 0.0;
  for (const ClaimCertificate& c : certs) {
    ck.require(c.verdict == Verdict::Holds, c.claim_id + " violated");
    if (c.stated_value) {
      const double err = std::abs(c.extremum - *c.stated_value);
      worst_stated = std::max(worst_stated, err);
      ck.require(err <= 1e-4, c.claim_id + " extremum off stated value by " +
                                  fmt(err));
    }
  }
  ck.note(std::to_string(certs.size()) +
          " certificates hold, max stated-value err " + fmt(worst_stated));
  return ck.out;
}

// 8. Ratio-curve floors and qualitative trend.
Outcome criterion_ratio_floors() {
  Check ck;
  std::vector<double> ts;
  for (int i = 1; i <= 20; ++i) ts.push_back(0.05 * i);
  const auto over = ratio_curve(Game::U_over, ts, default_jobs());
  const auto under = ratio_curve(Game::U_under, ts, default_jobs());
  double min_over = 1e300, min_under = 1e300;
  for (const auto& p : over) min_over = std::min(min_over, p.h);
  for (const auto& p : under) min_under = std::min(min_under, p.h);
  ck.require(min_over >= 0.852 - 0.005, "U_over floor " + fmt(min_over));
  ck.require(min_under >= (std::sqrt(10.0) + 5.0) / 10.0 - 0.005,
             "U_under floor " + fmt(min_under));
  ck.require(over.back().h > over.front().h,
             "U_over curve fails to rise toward t = 1");
  ck.note("min h: U_over " + fmt(min_over) + ", U_under " + fmt(min_under));
  return ck.out;
}

// 9. Sandwich: lb <= ub and oracle above the adversary lower bounds.
Outcome criterion_sandwich() {
  Check ck;
  Rng rng(909090);
  std::vector<Triangle> triangles;
  triangles.reserve(500);
  std::vector<double> slack(500, 0.0);
  for (int i = 0; i < 500; ++i)
    triangles.push_back(random_nonobtuse_triangle(rng));
  parallel_chunks(500, default_jobs(), [&](int, long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      const Triangle& t = triangles[static_cast<size_t>(i)];
      const BoundsReport r = theorem_bounds(t);
      double bad = std::max({r.L_over.lb - r.L_over.ub,
                             r.U_under.lb - r.U_under.ub,
                             r.U_over.lb - r.U_over.ub});
      const double tol = 3.0 * t.perimeter() / 4000.0;
      const AdversaryStart uu = adversary_U_under(t);
      bad = std::max(bad,
                     uu.lb - worst_case_oracle(t, uu.start, 4000, 1).cost - tol);
      const AdversaryStart uo = adversary_U_over(t);
      bad = std::max(bad,
                     uo.lb - worst_case_oracle(t, uo.start, 4000, 1).cost - tol);
      slack[static_cast<size_t>(i)] = bad;
    }
  });
  double worst = -1e300;
  for (const double s : slack) worst = std::max(worst, s);
  ck.require(worst <= 1e-10, "sandwich violated by " + fmt(worst));
  ck.note("500 triangles, worst violation " + fmt(worst));
  return ck.out;
}

// 10. Homogeneity of every reported cost.
Outcome criterion_homogeneity() {
  Check ck;
  Rng rng(101010);
  double worst = 0.0;
  const auto rel = [&](double scaled, double lam, double base) {
    const double err = std::abs(scaled - lam * base) /
                       std::max(1e-300, std::abs(lam * base));
    worst = std::max(worst, err);
    return err;
  };
  for (int i = 0; i < 60; ++i) {
    const Triangle t = random_nonobtuse_triangle(rng, 1.0, 1.0);
    const BoundsReport r = theorem_bounds(t);
    const StartSpec s = random_start(rng, t);
    const EvacOutcome o = worst_case_oracle(t, s, 2000, 1);
    for (const double lam : {0.5, 3.7}) {
      const Triangle ts = make_triangle(lam * t.a(), lam * t.b(), lam * t.c());
      const BoundsReport rs = theorem_bounds(ts);
      ck.require(rel(rs.L_under, lam, r.L_under) <= 1e-10, "L_under scaling");
      ck.require(rel(rs.L_over.ub, lam, r.L_over.ub) <= 1e-10, "L_over scaling");
      ck.require(rel(rs.U_under.lb, lam, r.U_under.lb) <= 1e-10,
                 "U_under lb scaling");
      ck.require(rel(rs.U_under.ub, lam, r.U_under.ub) <= 1e-10,
                 "U_under ub scaling");
      ck.require(rel(rs.U_over.lb, lam, r.U_over.lb) <= 1e-10,
                 "U_over lb scaling");
      ck.require(rel(rs.U_over.ub, lam, r.U_over.ub) <= 1e-10,
                 "U_over ub scaling");
      for (int e = 0; e < 3; ++e) {
        ck.require(rel(rs.l[e], lam, r.l[e]) <= 1e-10, "l_i scaling");
        ck.require(rel(rs.u[e], lam, r.u[e]) <= 1e-10, "u_i scaling");
      }
      const StartSpec ss{s.edge, lam * s.x};
      ck.require(rel(t_for_start(ts, ss), lam, t_for_start(t, s)) <= 1e-10,
                 "closed-form scaling");
      const EvacOutcome os = worst_case_oracle(ts, ss, 2000, 1);
      ck.require(rel(os.cost, lam, o.cost) <= 1e-10, "oracle scaling");
    }
  }
  ck.note("worst relative error " + fmt(worst));
  return ck.out;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 = no runtime requirement
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "equilateral closed form 3/2 + x", 10.0, criterion_equilateral},
      {2, "equilateral bounds (3a/2, 3a/2, 2a, 2a)", 0.0,
       criterion_equilateral_bounds},
      {3, "explicit l_a values", 0.0, criterion_la_values},
      {4, "oracle equivalence audit (1000 x 5)", 300.0, criterion_oracle_audit},
      {5, "two-segment worst-case lemma (500 configs)", 0.0,
       criterion_two_segment},
      {6, "midpoint convexity per configuration", 0.0, criterion_convexity},
      {7, "claim catalogue at resolution 60", 120.0, criterion_claims},
      {8, "ratio-curve floors and trend", 0.0, criterion_ratio_floors},
      {9, "sandwich: lb <= oracle-backed <= ub", 0.0, criterion_sandwich},
      {10, "homogeneity under edge scaling", 0.0, criterion_homogeneity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.budget_s > 0.0 && secs > c.budget_s) {
      out.ok = false;
      out.detail += " [over runtime budget]";
    }
    std::printf("[criterion %2d] %-45s %s (%s; %.1f s)\n", c.id, c.name,
                out.ok ? "PASS" : "FAIL", out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria pass\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
