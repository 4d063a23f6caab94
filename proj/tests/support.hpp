#pragma once

#include <algorithm>
#include <cmath>

#include "trievac/audit.hpp"
#include "trievac/geometry.hpp"

// Test-only oracles, kept independent of the library's closed-form paths.
namespace trievac::testsupport {

template <class F>
double golden_refine(const F& f, double lo, double hi, double tol = 1e-12) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  if (hi - lo <= tol) return f((lo + hi) / 2.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - g * (hi - lo); f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + g * (hi - lo); f2 = f(x2);
    }
  }
  return f((lo + hi) / 2.0);
}

struct ScanExtrema {
  double min = 0.0, argmin = 0.0;
  double max = 0.0, argmax = 0.0;
};

// Uniform scan; for the minimum, golden-section refinement inside the
// bracketing cell (the scanned costs are convex per configuration).
template <class F>
ScanExtrema scan_extrema(const F& f, double lo, double hi, int n) {
  ScanExtrema r;
  r.min = 1e300;
  r.max = -1e300;
  for (int i = 0; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double v = f(x);
    if (v < r.min) { r.min = v; r.argmin = x; }
    if (v > r.max) { r.max = v; r.argmax = x; }
  }
  const double cell = (hi - lo) / n;
  const double refined_min =
      golden_refine(f, std::max(lo, r.argmin - cell), std::min(hi, r.argmin + cell));
  if (refined_min < r.min) r.min = refined_min;
  const auto neg = [&](double x) { return -f(x); };
  const double refined_max = -golden_refine(
      neg, std::max(lo, r.argmax - cell), std::min(hi, r.argmax + cell));
  if (refined_max > r.max) r.max = refined_max;
  return r;
}

struct TwoSegSweep {
  double cost = 0.0;
  double t_star = 0.0;         // discovery time of the worst exit
  double exit_to_apex = 0.0;   // distance of the worst exit from the apex
  double step = 0.0;
};

// Trajectory simulation for two agents starting at B and C, both walking
// toward the apex A and continuing onto the other segment; exits swept over
// AB and AC.
inline TwoSegSweep two_segment_sweep(double ab, double ac, double bc, int n) {
  const double ca = (ab * ab + ac * ac - bc * bc) / (2.0 * ab * ac);
  const Vec2 apex{0.0, 0.0};
  const Vec2 vb{ab, 0.0};
  const Vec2 vc{ac * ca, ac * std::sqrt(std::max(0.0, 1.0 - ca * ca))};

  const auto lerp = [](const Vec2& p, const Vec2& q, double u) {
    return Vec2{p.x + u * (q.x - p.x), p.y + u * (q.y - p.y)};
  };
  const auto agent1 = [&](double t) {  // B -> A -> C
    return t <= ab ? lerp(vb, apex, t / ab) : lerp(apex, vc, (t - ab) / ac);
  };
  const auto agent2 = [&](double t) {  // C -> A -> B
    return t <= ac ? lerp(vc, apex, t / ac) : lerp(apex, vb, (t - ac) / ab);
  };

  TwoSegSweep best;
  best.cost = -1.0;
  best.step = std::max(ab, ac) / n;
  for (int i = 0; i <= n; ++i) {
    {  // exit on AB, d away from B
      const double d = ab * i / n;
      const double t = std::min(d, ac + ab - d);
      const Vec2 exit = lerp(vb, apex, d / ab);
      const Vec2 other = t == d ? agent2(t) : agent1(t);
      const double cost = t + dist(other, exit);
      if (cost > best.cost) {
        best.cost = cost;
        best.t_star = t;
        best.exit_to_apex = dist(exit, apex);
      }
    }
    {  // exit on AC, e away from C
      const double e = ac * i / n;
      const double t = std::min(e, ab + ac - e);
      const Vec2 exit = lerp(vc, apex, e / ac);
      const Vec2 other = t == e ? agent1(t) : agent2(t);
      const double cost = t + dist(other, exit);
      if (cost > best.cost) {
        best.cost = cost;
        best.t_star = t;
        best.exit_to_apex = dist(exit, apex);
      }
    }
  }
  return best;
}

inline double shoelace_area(const Embedding& emb) {
  const Vec2 u{emb.vc.x - emb.vb.x, emb.vc.y - emb.vb.y};
  const Vec2 v{emb.va.x - emb.vb.x, emb.va.y - emb.vb.y};
  return std::abs(u.x * v.y - u.y * v.x) / 2.0;
}

}  // namespace trievac::testsupport
