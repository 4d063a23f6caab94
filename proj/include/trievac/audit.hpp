#pragma once

#include <cstdint>
#include <random>

#include "trievac/closed_form.hpp"
#include "trievac/geometry.hpp"
#include "trievac/search_sim.hpp"

namespace trievac {

/// Seeded generator with a platform-independent uniform double mapping.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double next01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }
  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

/// Uniform-ish non-obtuse triangle: a = 1 scaled by U(scale_lo, scale_hi),
/// b in [1/sqrt(2), 1], c in [sqrt(1 - b^2), b]. The angle bound makes the
/// triangle inequality automatic.
Triangle random_nonobtuse_triangle(Rng& rng, double scale_lo = 0.5,
                                   double scale_hi = 2.0);

StartSpec random_start(Rng& rng, const Triangle& t);

struct AuditRow {
  std::array<double, 3> edges{};
  Edge edge = Edge::a;
  double x = 0.0;
  double oracle_cost = 0.0;
  double closed_cost = 0.0;
  double gap = 0.0;  // |closed - oracle|
  double tol = 0.0;  // 3 * perimeter / n
};

struct AuditSummary {
  std::uint64_t seed = 0;
  int triangles = 0;
  int starts_per_triangle = 0;
  int grid_n = 0;
  double max_gap = 0.0;
  double max_gap_over_tol = 0.0;
  AuditRow worst;
  bool all_within_tol = true;
};

/// Seeded oracle-vs-closed-form agreement audit over random triangles and
/// random signed starts.
AuditSummary random_audit(std::uint64_t seed, int triangles, int starts,
                          int grid_n, int jobs = 1);

}  // namespace trievac
