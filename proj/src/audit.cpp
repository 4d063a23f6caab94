#include "trievac/audit.hpp"

#include <algorithm>
#include <cmath>

namespace trievac {

Triangle random_nonobtuse_triangle(Rng& rng, double scale_lo, double scale_hi) {
  const double b = rng.uniform(1.0 / std::sqrt(2.0), 1.0);
  const double clo = std::sqrt(std::max(0.0, 1.0 - b * b));
  double c = rng.uniform(std::max(clo, 1e-3), b);
  c = std::min(std::max(c, clo + 1e-12), b);
  const double s = rng.uniform(scale_lo, scale_hi);
  return Triangle(s, s * b, s * c);
}

StartSpec random_start(Rng& rng, const Triangle& t) {
  const Edge e = static_cast<Edge>(rng.bits() % 3);
  const double half = t.edge(e) / 2.0;
  return make_start(t, e, rng.uniform(-half, half));
}

AuditSummary random_audit(std::uint64_t seed, int triangles, int starts,
                          int grid_n, int jobs) {
  if (triangles < 1 || starts < 1)
    throw std::invalid_argument("audit requires at least one sample");
  Rng rng(seed);
  AuditSummary sum;
  sum.seed = seed;
  sum.triangles = triangles;
  sum.starts_per_triangle = starts;
  sum.grid_n = grid_n;
  for (int i = 0; i < triangles; ++i) {
    const Triangle t = random_nonobtuse_triangle(rng);
    for (int k = 0; k < starts; ++k) {
      const StartSpec s = random_start(rng, t);
      const EvacOutcome oc = worst_case_oracle(t, s, grid_n, jobs);
      const double closed = t_for_start(t, s);
      AuditRow row;
      row.edges = {t.a(), t.b(), t.c()};
      row.edge = s.edge;
      row.x = s.x;
      row.oracle_cost = oc.cost;
      row.closed_cost = closed;
      row.gap = std::abs(closed - oc.cost);
      row.tol = 3.0 * t.perimeter() / grid_n;
      if (row.gap > sum.max_gap) {
        sum.max_gap = row.gap;
        sum.worst = row;
      }
      sum.max_gap_over_tol = std::max(sum.max_gap_over_tol, row.gap / row.tol);
      if (row.gap > row.tol) sum.all_within_tol = false;
    }
  }
  return sum;
}

}  // namespace trievac
