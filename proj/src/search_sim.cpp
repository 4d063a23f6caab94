#include "trievac/search_sim.hpp"

#include <algorithm>
#include <vector>

#include "trievac/parallel.hpp"

namespace trievac {

namespace {

double edge_base(const Triangle& t, Edge e) {
  switch (e) {
    case Edge::a: return 0.0;
    case Edge::b: return t.a();
    case Edge::c: return t.a() + t.b();
  }
  return 0.0;
}

double evac_cost(const Embedding& emb, double s0, double exit_s,
                 const Vec2& exit_pt) {
  const double p = emb.perimeter();
  const double d_ccw = wrap_arc(exit_s - s0, p);
  const double d_cw = d_ccw == 0.0 ? 0.0 : p - d_ccw;
  const double tf = std::min(d_ccw, d_cw);
  const double other_s = d_ccw <= d_cw ? s0 - tf : s0 + tf;
  return tf + dist(emb.point_at(other_s), exit_pt);
}

}  // namespace

StartSpec make_start(const Triangle& t, Edge edge, double x) {
  if (std::abs(x) > t.edge(edge) / 2.0)
    throw std::invalid_argument("start offset exceeds half the edge length");
  return {edge, x};
}

double start_arc(const Triangle& t, const StartSpec& s) {
  // Positive x walks from the midpoint toward the edge's ccw source vertex,
  // i.e. against the ccw parameterization.
  const double base = edge_base(t, s.edge);
  return wrap_arc(base + t.edge(s.edge) / 2.0 - s.x, t.perimeter());
}

SearcherState searcher_state(const Triangle& t, const StartSpec& s, double time) {
  const double p = t.perimeter();
  if (time < 0.0 || time > p / 2.0)
    throw std::invalid_argument("time must lie in [0, perimeter/2]");
  const Embedding emb(t);
  const double s0 = start_arc(t, s);
  SearcherState st;
  st.time = time;
  st.pos_cw = perimeter_point(emb, wrap_arc(s0 - time, p));
  st.pos_ccw = perimeter_point(emb, wrap_arc(s0 + time, p));
  return st;
}

double evac_time_for_exit(const Triangle& t, const StartSpec& s,
                          const PerimeterPos& e) {
  const Embedding emb(t);
  return evac_cost(emb, start_arc(t, s), e.s, e.point);
}

EvacOutcome worst_case_oracle(const Triangle& t, const StartSpec& s, int n,
                              int jobs) {
  if (n < 15) throw std::invalid_argument("exit grid too coarse (n < 15)");
  const Embedding emb(t);
  const double p = emb.perimeter();
  const double s0 = start_arc(t, s);
  const double extras[4] = {0.0, t.a(), t.a() + t.b(), s0};
  const long total = static_cast<long>(n) + 4;

  struct Best {
    double cost = -1.0;
    double s = 0.0;
  };
  const auto arc_of = [&](long i) {
    return i < n ? static_cast<double>(i) * p / n : extras[i - n];
  };

  jobs = std::max(1, jobs);
  std::vector<Best> per_chunk(static_cast<size_t>(jobs));
  parallel_chunks(total, jobs, [&](int chunk, long lo, long hi) {
    Best best;
    for (long i = lo; i < hi; ++i) {
      const double e_s = wrap_arc(arc_of(i), p);
      const double cost = evac_cost(emb, s0, e_s, emb.point_at(e_s));
      if (cost > best.cost || (cost == best.cost && e_s < best.s)) {
        best = {cost, e_s};
      }
    }
    per_chunk[static_cast<size_t>(chunk)] = best;
  });

  Best best;
  for (const Best& b : per_chunk) {
    if (b.cost > best.cost || (b.cost == best.cost && b.s < best.s)) best = b;
  }
  return {best.cost, {best.s, emb.point_at(best.s)}, p / n};
}

Rate monotonicity_rate(double phi, double theta) {
  const double r = std::cos(phi) + std::cos(theta);
  if (std::abs(r - 1.0) <= 1e-12) return Rate::Constant;
  return r < 1.0 ? Rate::Increasing : Rate::Decreasing;
}

double two_segment_worst(double ab, double ac, double bc) {
  if (!(ab > 0.0) || !(ac > 0.0) || !(bc > 0.0))
    throw std::invalid_argument("segment lengths must be positive");
  const double scale = ab + ac + bc;
  if (bc > ab + ac + 1e-12 * scale || bc < std::abs(ab - ac) - 1e-12 * scale)
    throw std::invalid_argument("segments do not close into a triangle");
  const double cos_apex = (ab * ab + ac * ac - bc * bc) / (2.0 * ab * ac);
  if (cos_apex < -1e-12) throw ObtuseApex("apex angle exceeds pi/2");
  return std::max({ab, ac, bc});
}

}  // namespace trievac
