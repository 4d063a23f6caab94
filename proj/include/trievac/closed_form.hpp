#pragma once

#include "trievac/geometry.hpp"
#include "trievac/search_sim.hpp"

namespace trievac {

struct EmptyDomain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Trajectory phase for a start on edge alpha at offset x toward the
/// gamma-incident endpoint: Config 1 once the clockwise agent reaches the far
/// vertex A first (x >= gamma/2), Config 2 otherwise. Ties go to Config 2;
/// both branch formulas agree at x = gamma/2.
enum class Config { One, Two };

/// Relative order of the start edge alpha, the far edge beta and the incident
/// edge gamma.
enum class CaseOrder {
  AlphaBetaGamma,  // alpha >= beta >= gamma
  AlphaGammaBeta,  // alpha >= gamma >= beta
  BetaAlphaGamma,  // beta >= alpha >= gamma
  BetaGammaAlpha,  // beta >= gamma >= alpha
  GammaAlphaBeta,  // gamma >= alpha >= beta
  GammaBetaAlpha,  // gamma >= beta >= alpha
};

struct CaseLabel {
  CaseOrder ordering;
};

CaseLabel case_of(double alpha, double beta, double gamma);

Config configuration_of(double alpha, double beta, double gamma, double x);

/// Distance between the two agents once the first of {A, C} is reached:
/// AR2(x) in Config 1, CR1(x) in Config 2, via the Cosine Law.
double r1r2_distance(double alpha, double beta, double gamma, double x,
                     Config cfg);

/// Worst-case evacuation cost T(x) for a start on edge alpha, x away from the
/// midpoint toward the gamma-incident endpoint, 0 <= x <= alpha/2.
double t_of_x(double alpha, double beta, double gamma, double x);

struct Extremum {
  enum class Kind { Min, Max };
  double value = 0.0;
  double x = 0.0;
  Kind kind = Kind::Min;
};

struct CaseExtrema {
  Extremum min;
  Extremum max;
};

/// Closed-form extrema of T(x) over one configuration's domain.
/// Config 1 lives on [gamma/2, alpha/2] and is empty when gamma >= alpha
/// (EmptyDomain; Config 2 covers the tie). Config 2 lives on
/// [0, min(alpha, gamma)/2]. The label must be consistent with the lengths.
CaseExtrema case_extrema(CaseLabel label, Config cfg, double alpha, double beta,
                         double gamma);

/// (alpha, beta, gamma) labeling plus nonnegative offset for a signed start:
/// alpha is the start edge, gamma the edge incident to the endpoint the
/// offset points toward.
struct HalfLabeling {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double x = 0.0;
};

HalfLabeling start_labeling(const Triangle& t, const StartSpec& s);

/// T(x) evaluated under the labeling that matches a signed start.
double t_for_start(const Triangle& t, const StartSpec& s);

/// Best possible worst-case cost over all starts on edge e.
double l_edge(const Triangle& t, Edge e);

/// Worst possible worst-case cost over all starts on edge e.
double u_edge(const Triangle& t, Edge e);

}  // namespace trievac
