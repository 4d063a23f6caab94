#pragma once

#include "trievac/geometry.hpp"

namespace trievac {

struct ObtuseApex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Agents' common starting point: an edge plus a signed offset x from the
/// edge midpoint, |x| <= edge/2. Positive x points toward the edge's ccw
/// source vertex (B for edge a, C for edge b, A for edge c), matching the
/// half-edge the closed-form analysis is stated for.
struct StartSpec {
  Edge edge = Edge::a;
  double x = 0.0;
};

/// Validates |x| <= edge/2.
StartSpec make_start(const Triangle& t, Edge edge, double x);

/// CCW arc length of the start point from vertex B.
double start_arc(const Triangle& t, const StartSpec& s);

/// Agent positions after searching for `time`: R1 walks clockwise, R2
/// counterclockwise, both at unit speed. Requires 0 <= time <= perimeter/2
/// (the search is over once the two sweeps meet).
struct SearcherState {
  double time = 0.0;
  PerimeterPos pos_cw;
  PerimeterPos pos_ccw;
};

SearcherState searcher_state(const Triangle& t, const StartSpec& s, double time);

/// Evacuation time if the exit sits at `e`: discovery time along the shorter
/// arc plus the straight-line travel of the other agent. A simultaneous
/// discovery (both arcs equal) costs exactly the discovery time.
double evac_time_for_exit(const Triangle& t, const StartSpec& s,
                          const PerimeterPos& e);

struct EvacOutcome {
  double cost = 0.0;
  PerimeterPos worst_exit;
  double resolution = 0.0;  // exit grid spacing = perimeter / n
};

/// Brute-force worst case over a grid of n exits that always contains the
/// three vertices and the start point exactly. The cost is 3-Lipschitz in the
/// exit arc, so the grid max is within 3 * resolution of the true supremum.
EvacOutcome worst_case_oracle(const Triangle& t, const StartSpec& s,
                              int n = 20000, int jobs = 1);

enum class Rate { Increasing, Decreasing, Constant };

/// Sign of the evacuation-cost rate for exits at the agents' current
/// positions, from the critical angles phi, theta between each velocity and
/// the joining segment: increasing iff cos(phi) + cos(theta) < 1.
Rate monotonicity_rate(double phi, double theta);

/// Worst-case evacuation time for two agents starting at B and C and moving
/// toward the apex A, exit anywhere on AB or AC: max{AB, AC, BC}.
/// Throws ObtuseApex if the apex angle exceeds pi/2.
double two_segment_worst(double ab, double ac, double bc);

}  // namespace trievac
