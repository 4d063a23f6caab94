#include "trievac/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "trievac/parallel.hpp"

namespace trievac {

namespace {

double guarded_sqrt(double radicand, double scale2) {
  if (radicand < -1e-9 * scale2)
    throw std::logic_error("negative radicand: input outside the feasible set");
  return std::sqrt(std::max(0.0, radicand));
}

double tau_form(double a, double b, double c, double tau) {
  return ((a + b) * (a + b) - c * c + 4.0 * std::sqrt(3.0) * tau) / (4.0 * b);
}

struct GoldenResult {
  double x = 0.0;
  double f = 0.0;
};

template <class F>
GoldenResult golden_min(const F& f, double lo, double hi, double tol) {
  if (hi - lo <= tol) {
    const double x = (lo + hi) / 2.0;
    return {x, f(x)};
  }
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    }
  }
  const double x = (lo + hi) / 2.0;
  return {x, f(x)};
}

// Multi-start over bracket segments, then golden-section descent in each.
template <class F>
GoldenResult multistart_min(const F& f, double lo, double hi, int segments) {
  GoldenResult best{lo, f(lo)};
  const GoldenResult at_hi{hi, f(hi)};
  if (at_hi.f < best.f) best = at_hi;
  if (hi - lo <= 1e-14) return best;
  for (int i = 0; i < segments; ++i) {
    const double s0 = lo + (hi - lo) * i / segments;
    const double s1 = lo + (hi - lo) * (i + 1) / segments;
    const GoldenResult r = golden_min(f, s0, s1, 1e-12 * std::max(1.0, hi));
    if (r.f < best.f) best = r;
  }
  return best;
}

}  // namespace

double dist_DA_on_a(double a, double b, double c) {
  const double p = a + b + c;
  const double rad = (2.0 * b * b * (a - c) - (a - 2.0 * c) * (a + c) * (a + c)) / a;
  return 0.5 * guarded_sqrt(rad, p * p);
}

double dist_DB_on_b(double a, double b, double c) {
  const double p = a + b + c;
  const double rad = (2.0 * a * a * (b - c) - (b - 2.0 * c) * (b + c) * (b + c)) / b;
  return 0.5 * guarded_sqrt(rad, p * p);
}

BoundsReport theorem_bounds(const Triangle& t) {
  const double a = t.a(), b = t.b(), c = t.c();
  const double tau = area(t);
  const double half_p = t.perimeter() / 2.0;

  BoundsReport r;
  r.L_under = half_p;
  r.L_over = {half_p, std::min(b + c, tau_form(a, b, c, tau))};
  r.U_under = {std::min(dist_DA_on_a(a, b, c) + b, a + c),
               std::min(a / 2.0 + b + c / 2.0, a + c)};
  r.U_over = {a + dist_DB_on_b(a, b, c), a + (b + c) / 2.0};
  for (int i = 0; i < 3; ++i) {
    r.l[static_cast<size_t>(i)] = l_edge(t, static_cast<Edge>(i));
    r.u[static_cast<size_t>(i)] = u_edge(t, static_cast<Edge>(i));
  }
  return r;
}

AdversaryStart adversary_U_under(const Triangle& t) {
  const double a = t.a(), b = t.b(), c = t.c();
  // D on edge a with BD = (a-c)/2, i.e. offset c/2 toward B.
  const StartSpec d = make_start(t, Edge::a, c / 2.0);
  return {d, std::min(a + c, dist_DA_on_a(a, b, c) + b)};
}

AdversaryStart adversary_U_over(const Triangle& t) {
  const double a = t.a(), b = t.b(), c = t.c();
  // D on edge b with AD = (b-c)/2: c/2 away from the midpoint on the A side.
  const StartSpec d = make_start(t, Edge::b, -c / 2.0);
  return {d, a + dist_DB_on_b(a, b, c)};
}

std::vector<RatioCurvePoint> ratio_curve(Game game, std::span<const double> ts,
                                         int jobs) {
  for (const double t : ts)
    if (!(t > 0.0) || t > 1.0)
      throw EmptyFeasible("ratio constraint admits no triangle: t outside (0, 1]");

  std::vector<RatioCurvePoint> out(ts.size());
  parallel_chunks(static_cast<long>(ts.size()), std::max(1, jobs),
                  [&](int, long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      const double t = ts[static_cast<size_t>(i)];
      RatioCurvePoint pt;
      pt.t = t;
      if (game == Game::U_under) {
        // a = 1, c = t; feasibility needs b >= c, b+c >= 1 and b^2+c^2 >= 1.
        const double c = t;
        const double blo =
            std::min(1.0, std::max({t, 1.0 - t, std::sqrt(std::max(0.0, 1.0 - t * t))}));
        const auto ratio = [&](double b) {
          const double lb = std::min(dist_DA_on_a(1.0, b, c) + b, 1.0 + c);
          const double ub = std::min(0.5 + b + c / 2.0, 1.0 + c);
          return lb / ub;
        };
        const GoldenResult r = multistart_min(ratio, blo, 1.0, 64);
        pt.h = r.f;
        pt.arg_a = 1.0;
        pt.arg_b = r.x;
        pt.arg_c = c;
      } else {
        // a = 1, c = t*b; feasibility needs b+c >= 1, i.e. b >= 1/(1+t).
        const auto ratio = [&](double b) {
          const double c = t * b;
          return (1.0 + dist_DB_on_b(1.0, b, c)) / (1.0 + (b + c) / 2.0);
        };
        const GoldenResult r = multistart_min(ratio, 1.0 / (1.0 + t), 1.0, 64);
        pt.h = r.f;
        pt.arg_a = 1.0;
        pt.arg_b = r.x;
        pt.arg_c = t * r.x;
      }
      out[static_cast<size_t>(i)] = pt;
    }
  });
  return out;
}

}  // namespace trievac
