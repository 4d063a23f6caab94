#pragma once

#include <array>
#include <span>
#include <vector>

#include "trievac/closed_form.hpp"
#include "trievac/geometry.hpp"
#include "trievac/search_sim.hpp"

namespace trievac {

struct EmptyFeasible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GameBound {
  double lb = 0.0;
  double ub = 0.0;
};

/// The four starting-point games: each of edge and offset chosen by the
/// algorithm (L) or the adversary (U), lower/upper bounds per game, plus the
/// per-edge best/worst starting-point costs that assemble the upper bounds.
struct BoundsReport {
  double L_under = 0.0;          // exact: half the perimeter
  GameBound L_over;
  GameBound U_under;
  GameBound U_over;
  std::array<double, 3> l{};     // l_a, l_b, l_c
  std::array<double, 3> u{};     // u_a, u_b, u_c
};

BoundsReport theorem_bounds(const Triangle& t);

/// Distance from the adversarial start D on edge a (with BD = (a-c)/2) to
/// vertex A, and from D on edge b (with AD = (b-c)/2) to vertex B.
double dist_DA_on_a(double a, double b, double c);
double dist_DB_on_b(double a, double b, double c);

struct AdversaryStart {
  StartSpec start;
  double lb = 0.0;
};

/// Adversarial starting points realizing the lower bounds of the two
/// adversary-offset games; lb never exceeds the oracle cost at that start.
AdversaryStart adversary_U_under(const Triangle& t);
AdversaryStart adversary_U_over(const Triangle& t);

enum class Game { U_under, U_over };

struct RatioCurvePoint {
  double t = 0.0;  // c/a for U_under, c/b for U_over
  double h = 0.0;  // minimized lb/ub ratio
  double arg_a = 0.0, arg_b = 0.0, arg_c = 0.0;  // argmin, normalized a = 1
};

/// h(t) = min over feasible triangles (a=1, a>=b>=c, the game's ratio
/// constraint, non-obtuse for U_under) of lower bound / upper bound.
std::vector<RatioCurvePoint> ratio_curve(Game game, std::span<const double> ts,
                                         int jobs = 1);

}  // namespace trievac
