#include "trievac/closed_form.hpp"

#include <algorithm>

namespace trievac {

namespace {

double cos_at_A(double alpha, double beta, double gamma) {
  return (beta * beta + gamma * gamma - alpha * alpha) / (2.0 * beta * gamma);
}

double cos_at_C(double alpha, double beta, double gamma) {
  return (alpha * alpha + beta * beta - gamma * gamma) / (2.0 * alpha * beta);
}

double sin_at_A(double alpha, double beta, double gamma) {
  const double ca = cos_at_A(alpha, beta, gamma);
  return std::sqrt(std::max(0.0, 1.0 - ca * ca));
}

double max3(double u, double v, double w) { return std::max(u, std::max(v, w)); }

bool consistent(CaseOrder order, double al, double be, double ga, double tol) {
  switch (order) {
    case CaseOrder::AlphaBetaGamma: return al >= be - tol && be >= ga - tol;
    case CaseOrder::AlphaGammaBeta: return al >= ga - tol && ga >= be - tol;
    case CaseOrder::BetaAlphaGamma: return be >= al - tol && al >= ga - tol;
    case CaseOrder::BetaGammaAlpha: return be >= ga - tol && ga >= al - tol;
    case CaseOrder::GammaAlphaBeta: return ga >= al - tol && al >= be - tol;
    case CaseOrder::GammaBetaAlpha: return ga >= be - tol && be >= al - tol;
  }
  return false;
}

}  // namespace

CaseLabel case_of(double alpha, double beta, double gamma) {
  if (alpha >= beta && beta >= gamma) return {CaseOrder::AlphaBetaGamma};
  if (alpha >= gamma && gamma >= beta) return {CaseOrder::AlphaGammaBeta};
  if (beta >= alpha && alpha >= gamma) return {CaseOrder::BetaAlphaGamma};
  if (beta >= gamma && gamma >= alpha) return {CaseOrder::BetaGammaAlpha};
  if (gamma >= alpha && alpha >= beta) return {CaseOrder::GammaAlphaBeta};
  return {CaseOrder::GammaBetaAlpha};
}

Config configuration_of(double alpha, double beta, double gamma, double x) {
  (void)alpha;
  (void)beta;
  return x <= gamma / 2.0 ? Config::Two : Config::One;
}

double r1r2_distance(double alpha, double beta, double gamma, double x,
                     Config cfg) {
  if (cfg == Config::One) {
    // Cosine Law in triangle A R2 C with R2C = 2x - gamma.
    const double d = 2.0 * x - gamma;
    const double cc = cos_at_C(alpha, beta, gamma);
    return std::sqrt(
        std::max(0.0, beta * beta + d * d - 2.0 * beta * d * cc));
  }
  // Cosine Law in triangle A R1 C with R1A = gamma - 2x.
  const double d = gamma - 2.0 * x;
  const double ca = cos_at_A(alpha, beta, gamma);
  return std::sqrt(std::max(0.0, beta * beta + d * d - 2.0 * beta * d * ca));
}

double t_of_x(double alpha, double beta, double gamma, double x) {
  const Config cfg = configuration_of(alpha, beta, gamma, x);
  const double rr = r1r2_distance(alpha, beta, gamma, x, cfg);
  if (cfg == Config::One)
    return alpha / 2.0 + gamma - x + max3(rr, beta, 2.0 * x - gamma);
  return alpha / 2.0 + x + max3(rr, beta, gamma - 2.0 * x);
}

CaseExtrema case_extrema(CaseLabel label, Config cfg, double alpha, double beta,
                         double gamma) {
  const double scale = alpha + beta + gamma;
  if (!consistent(label.ordering, alpha, beta, gamma, 1e-12 * scale))
    throw std::invalid_argument("case label inconsistent with edge lengths");

  const auto T = [&](double x) { return t_of_x(alpha, beta, gamma, x); };

  if (cfg == Config::One) {
    if (gamma >= alpha)
      throw EmptyDomain("Config 1 is empty (or a point covered by Config 2)");
    // T is linear here: alpha/2 + beta + gamma - x.
    CaseExtrema e;
    e.max = {T(gamma / 2.0), gamma / 2.0, Extremum::Kind::Max};
    e.min = {T(alpha / 2.0), alpha / 2.0, Extremum::Kind::Min};
    return e;
  }

  const double hi = std::min(alpha, gamma) / 2.0;
  const double t0 = T(0.0);
  const double thi = T(hi);

  CaseExtrema e;
  // T is convex, so the maximum sits at an endpoint.
  e.max = t0 >= thi ? Extremum{t0, 0.0, Extremum::Kind::Max}
                    : Extremum{thi, hi, Extremum::Kind::Max};

  double argmin = 0.0;
  switch (label.ordering) {
    case CaseOrder::BetaAlphaGamma:
    case CaseOrder::BetaGammaAlpha:
      // CR1 <= beta throughout, so T = alpha/2 + x + beta is increasing.
      argmin = 0.0;
      break;
    case CaseOrder::GammaAlphaBeta:
    case CaseOrder::GammaBetaAlpha: {
      const double ca = cos_at_A(alpha, beta, gamma);
      if (ca >= 0.5) {
        argmin = (gamma - beta) / 2.0;  // kink where beta = gamma - 2x
      } else {
        const double sa = sin_at_A(alpha, beta, gamma);
        const double y1 =
            gamma / 2.0 - (beta / 2.0) * (ca + sa / std::sqrt(3.0));
        argmin = std::clamp(y1, 0.0, hi);
      }
      break;
    }
    case CaseOrder::AlphaBetaGamma:
    case CaseOrder::AlphaGammaBeta: {
      const double ca = cos_at_A(alpha, beta, gamma);
      const double sa = sin_at_A(alpha, beta, gamma);
      // Kink where CR1 crosses beta; nonnegative for alpha >= beta and at
      // most gamma/2 for non-obtuse inputs.
      double x0 = gamma / 2.0 - beta * ca;
      if (x0 < -1e-10 * scale || x0 > gamma / 2.0 + 1e-10 * scale)
        throw std::logic_error("isosceles kink left its admissible interval");
      x0 = std::clamp(x0, 0.0, gamma / 2.0);
      // Stationary point of alpha/2 + x + CR1(x); <= x0 since A >= pi/3.
      const double y1 =
          gamma / 2.0 - (beta / 2.0) * (ca + sa / std::sqrt(3.0));
      argmin = std::clamp(y1, 0.0, x0);
      break;
    }
  }
  e.min = {T(argmin), argmin, Extremum::Kind::Min};
  return e;
}

HalfLabeling start_labeling(const Triangle& t, const StartSpec& s) {
  const double a = t.a(), b = t.b(), c = t.c();
  const bool pos = s.x >= 0.0;
  HalfLabeling lab;
  lab.x = std::abs(s.x);
  switch (s.edge) {
    // Positive offsets point at the edge's ccw source vertex; the incident
    // edge there plays gamma.
    case Edge::a: lab = {a, pos ? b : c, pos ? c : b, lab.x}; break;
    case Edge::b: lab = {b, pos ? c : a, pos ? a : c, lab.x}; break;
    case Edge::c: lab = {c, pos ? a : b, pos ? b : a, lab.x}; break;
  }
  return lab;
}

double t_for_start(const Triangle& t, const StartSpec& s) {
  const HalfLabeling lab = start_labeling(t, s);
  return t_of_x(lab.alpha, lab.beta, lab.gamma, lab.x);
}

namespace {

struct EdgeExtremes {
  double lo;
  double hi;
};

EdgeExtremes half_extremes(double alpha, double beta, double gamma) {
  const CaseLabel label = case_of(alpha, beta, gamma);
  const CaseExtrema two = case_extrema(label, Config::Two, alpha, beta, gamma);
  double lo = two.min.value;
  double hi = two.max.value;
  if (gamma < alpha) {
    const CaseExtrema one =
        case_extrema(label, Config::One, alpha, beta, gamma);
    lo = std::min(lo, one.min.value);
    hi = std::max(hi, one.max.value);
  }
  return {lo, hi};
}

EdgeExtremes edge_extremes(const Triangle& t, Edge e) {
  // One labeling per half edge: gamma is the incident edge at the endpoint
  // the half points toward.
  const double a = t.a(), b = t.b(), c = t.c();
  double al = 0, b1 = 0, g1 = 0, b2 = 0, g2 = 0;
  switch (e) {
    case Edge::a: al = a; b1 = b; g1 = c; b2 = c; g2 = b; break;
    case Edge::b: al = b; b1 = c; g1 = a; b2 = a; g2 = c; break;
    case Edge::c: al = c; b1 = a; g1 = b; b2 = b; g2 = a; break;
  }
  const EdgeExtremes h1 = half_extremes(al, b1, g1);
  const EdgeExtremes h2 = half_extremes(al, b2, g2);
  return {std::min(h1.lo, h2.lo), std::max(h1.hi, h2.hi)};
}

}  // namespace

double l_edge(const Triangle& t, Edge e) { return edge_extremes(t, e).lo; }

double u_edge(const Triangle& t, Edge e) { return edge_extremes(t, e).hi; }

}  // namespace trievac
