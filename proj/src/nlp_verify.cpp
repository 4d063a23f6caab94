#include "trievac/nlp_verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "trievac/bounds.hpp"
#include "trievac/parallel.hpp"

namespace trievac {

bool TriangleSpace::feasible(double al, double be, double ga,
                             double slack) const {
  if (al < -slack || be < -slack || ga < -slack) return false;
  if (al + be < ga - slack || al + ga < be - slack || be + ga < al - slack)
    return false;
  switch (ordering) {
    case Ordering::AlphaGammaBeta:
      if (al < ga - slack || ga < be - slack) return false;
      break;
    case Ordering::GammaDominant:
      if (ga < al - slack || ga < be - slack) return false;
      break;
    case Ordering::GammaAlphaBeta:
      if (ga < al - slack || al < be - slack) return false;
      break;
    case Ordering::SortedDesc:
      if (al < be - slack || be < ga - slack) return false;
      break;
  }
  switch (angle) {
    case Angle::None:
      break;
    case Angle::NonObtuse:
      if (be * be + ga * ga - al * al < -slack) return false;
      break;
    case Angle::CosAGeHalf:
      if (be * be + ga * ga - al * al < be * ga - slack) return false;
      break;
    case Angle::CosALeHalf:
      if (be * be + ga * ga - al * al > be * ga + slack) return false;
      break;
  }
  return true;
}

namespace {

using Expr = double (*)(double, double, double);
using Guard = bool (*)(double, double, double);

enum class Sense { MaxAtMostZero, MinAtLeastZero, MinAtLeastFloor };

struct Claim {
  const char* group;
  const char* label;
  Sense sense;
  Expr expr;
  TriangleSpace space;
  Guard guard;          // extra domain requirements (nullable)
  double floor;         // used by MinAtLeastFloor
  std::optional<double> stated_value;
  std::optional<std::array<double, 3>> stated_arg;
};

double heron_area(double al, double be, double ga) {
  const double p = (al + be + ga) / 2.0;
  return std::sqrt(std::max(0.0, p * (p - al) * (p - be) * (p - ga)));
}

double cosA(double al, double be, double ga) {
  return (be * be + ga * ga - al * al) / (2.0 * be * ga);
}

double cr1_at_alpha_half(double al, double be, double ga) {
  return std::sqrt(std::max(0.0, al * (be + ga - al) * (al + be - ga) / ga));
}

// --- claim expressions -----------------------------------------------------

double expr_f0(double al, double be, double ga) {
  return (-al * al + al * ga + be * be - ga * ga) / (al * ga);
}

double expr_fx0(double al, double be, double ga) {
  return (al * al - be * be + be * ga - ga * ga) / (be * ga);
}

double expr_cosA_gamma(double al, double be, double ga) {
  return cosA(al, be, ga) * ga - be / 2.0;
}

double expr_x0_margin(double al, double be, double ga) {
  // gamma/2 + cos(C) beta - alpha/2, composed through the Cosine Law.
  return (ga * (al - ga) + be * be) / (2.0 * al);
}

double expr_cr1_minus_beta(double al, double be, double ga) {
  return cr1_at_alpha_half(al, be, ga) - be;
}

double expr_t1_mid_margin(double al, double be, double ga) {
  const double x = (ga - be) / 2.0;
  const double d = ga - 2.0 * x;  // = beta
  const double cr1 = std::sqrt(
      std::max(0.0, be * be + d * d - 2.0 * be * d * cosA(al, be, ga)));
  return (al / 2.0 + x + cr1) - (al / 2.0 + be / 2.0 + ga / 2.0);
}

double expr_x1_minus_mid(double al, double be, double ga) {
  const double den = be * be + ga * ga - al * al;
  const double x1 = (ga * ga - al * al) * ga / (2.0 * den);
  return x1 - (ga / 2.0 - be / 2.0);
}

double expr_mid_minus_x2(double al, double be, double ga) {
  const double x2 = (al + be) * (al - be) / (2.0 * ga);
  return (ga / 2.0 - be / 2.0) - x2;
}

double expr_a_minus_b_halfc(double a, double b, double c) {
  return a - b - c / 2.0;
}

double expr_lbar_chain(double a, double b, double c) {
  const double tau = heron_area(a, b, c);
  return ((a + b) * (a + b) - c * c + 4.0 * std::sqrt(3.0) * tau) / (4.0 * b) -
         (a + b + c) / 2.0;
}

double expr_lb_chain(double a, double b, double c) {
  const double tau = heron_area(a, b, c);
  return (b + c) -
         ((a + b) * (a + b) - c * c + 4.0 * std::sqrt(3.0) * tau) / (4.0 * a);
}

double expr_la_quadratic(double a, double b, double c) {
  return -a * a + b * b - b * c + c * c;
}

double expr_la_quartic(double a, double b, double c) {
  return b * b * b * b - 2.0 * b * b * b * c + b * c * c * c + c * c * c * c -
         a * a * (b * b - b * c + c * c);
}

double expr_ratio_u_under(double a, double b, double c) {
  const double lb = std::min(dist_DA_on_a(a, b, c) + b, a + c);
  const double ub = std::min(a / 2.0 + b + c / 2.0, a + c);
  return lb / ub;
}

double expr_ratio_u_over(double a, double b, double c) {
  return (a + dist_DB_on_b(a, b, c)) / (a + (b + c) / 2.0);
}

// --- extra domain guards ---------------------------------------------------

constexpr double kEps = 1e-6;

bool guard_ag(double al, double, double ga) { return al > kEps && ga > kEps; }
bool guard_bg(double, double be, double ga) { return be > kEps && ga > kEps; }
bool guard_a(double al, double, double) { return al > kEps; }
bool guard_g(double, double, double ga) { return ga > kEps; }
bool guard_b(double, double be, double) { return be > kEps; }
bool guard_x1_den(double al, double be, double ga) {
  return ga > kEps && be * be + ga * ga - al * al > kEps;
}
bool guard_ratio(double al, double be, double) { return al > kEps && be > kEps; }

const std::array<double, 3> kX1Arg = {1.0, (69.0 - std::sqrt(2101.0)) / 128.0,
                                      69.0 / 64.0};
const std::array<double, 3> kX2Arg = {1.0, 0.5, (1.0 + std::sqrt(13.0)) / 4.0};

const Claim kClaims[] = {
    {"f0_nonpositive", "f0_nonpositive", Sense::MaxAtMostZero, expr_f0,
     {TriangleSpace::Ordering::AlphaGammaBeta, TriangleSpace::Angle::None},
     guard_ag, 0.0, 0.0, std::array<double, 3>{1.0, 1.0, 1.0}},
    {"fx0_nonnegative", "fx0_nonnegative", Sense::MinAtLeastZero, expr_fx0,
     {TriangleSpace::Ordering::AlphaGammaBeta, TriangleSpace::Angle::None},
     guard_bg, 0.0, 0.0, std::array<double, 3>{1.0, 1.0, 1.0}},
    {"cosA_gamma_le_half_beta", "cosA_gamma_le_half_beta",
     Sense::MaxAtMostZero, expr_cosA_gamma,
     {TriangleSpace::Ordering::AlphaGammaBeta, TriangleSpace::Angle::None},
     guard_bg, 0.0, 0.0, std::nullopt},
    {"x0_ge_alpha_half", "x0_ge_alpha_half", Sense::MinAtLeastZero,
     expr_x0_margin,
     {TriangleSpace::Ordering::AlphaGammaBeta, TriangleSpace::Angle::None},
     guard_a, 0.0, 0.0, std::nullopt},
    {"T1_le_T2_at_alpha_half", "T1_le_T2_at_alpha_half", Sense::MaxAtMostZero,
     expr_cr1_minus_beta,
     {TriangleSpace::Ordering::GammaDominant, TriangleSpace::Angle::None},
     guard_g, 0.0, 0.0, std::array<double, 3>{1.0, 5.0 / 16.0, 1.0}},
    {"T1_mid_le_half_sum", "T1_mid_le_half_sum", Sense::MaxAtMostZero,
     expr_t1_mid_margin,
     {TriangleSpace::Ordering::GammaDominant,
      TriangleSpace::Angle::CosAGeHalf},
     guard_bg, 0.0, 0.0, kX2Arg},
    {"CR1_half_leq_beta", "CR1_half_leq_beta", Sense::MaxAtMostZero,
     expr_cr1_minus_beta,
     {TriangleSpace::Ordering::GammaDominant, TriangleSpace::Angle::None},
     guard_g, 0.0, 0.0, std::nullopt},
    {"x1_le_mid_le_x2", "x1_le_mid", Sense::MaxAtMostZero, expr_x1_minus_mid,
     {TriangleSpace::Ordering::GammaAlphaBeta,
      TriangleSpace::Angle::CosALeHalf},
     guard_x1_den, 0.0, 0.0, kX1Arg},
    {"x1_le_mid_le_x2", "mid_le_x2", Sense::MaxAtMostZero, expr_mid_minus_x2,
     {TriangleSpace::Ordering::GammaAlphaBeta,
      TriangleSpace::Angle::CosALeHalf},
     guard_g, 0.0, 0.0, kX2Arg},
    {"a_le_b_plus_half_c", "a_le_b_plus_half_c", Sense::MaxAtMostZero,
     expr_a_minus_b_halfc,
     {TriangleSpace::Ordering::SortedDesc, TriangleSpace::Angle::NonObtuse},
     nullptr, 0.0, 0.0, std::array<double, 3>{1.0, 1.0, 0.0}},
    {"lbar_chain_ge_half_perimeter", "lbar_chain_ge_half_perimeter",
     Sense::MinAtLeastZero, expr_lbar_chain,
     {TriangleSpace::Ordering::SortedDesc, TriangleSpace::Angle::None},
     guard_b, 0.0, 0.0, std::array<double, 3>{1.0, 1.0, 1.0}},
    {"lb_chain_bc_dominates", "lb_chain_bc_dominates", Sense::MinAtLeastZero,
     expr_lb_chain,
     {TriangleSpace::Ordering::SortedDesc, TriangleSpace::Angle::None},
     guard_a, 0.0, 0.0, std::array<double, 3>{1.0, 1.0, 0.0}},
    {"la_ineq_quadratic", "la_ineq_quadratic", Sense::MaxAtMostZero,
     expr_la_quadratic,
     {TriangleSpace::Ordering::SortedDesc, TriangleSpace::Angle::NonObtuse},
     nullptr, 0.0, 0.0, std::nullopt},
    {"la_ineq_quartic", "la_ineq_quartic", Sense::MaxAtMostZero,
     expr_la_quartic,
     {TriangleSpace::Ordering::SortedDesc, TriangleSpace::Angle::NonObtuse},
     nullptr, 0.0, 0.0, std::nullopt},
    {"ratio_floor_u_under", "ratio_floor_u_under", Sense::MinAtLeastFloor,
     expr_ratio_u_under,
     {TriangleSpace::Ordering::SortedDesc, TriangleSpace::Angle::NonObtuse},
     guard_ratio, (std::sqrt(10.0) + 5.0) / 10.0,
     (std::sqrt(10.0) + 5.0) / 10.0, std::nullopt},
    {"ratio_floor_u_over", "ratio_floor_u_over", Sense::MinAtLeastFloor,
     expr_ratio_u_over,
     {TriangleSpace::Ordering::SortedDesc, TriangleSpace::Angle::None},
     guard_ratio, 0.852, std::nullopt, std::nullopt},
};

struct Candidate {
  double value = 0.0;
  std::array<double, 3> pt{};
};

bool better(Sense sense, double lhs, double rhs) {
  return sense == Sense::MaxAtMostZero ? lhs > rhs : lhs < rhs;
}

bool admissible(const Claim& c, double al, double be, double ga, double slack) {
  if (!c.space.feasible(al, be, ga, slack)) return false;
  return c.guard == nullptr || c.guard(al, be, ga);
}

ClaimCertificate run_program(const Claim& claim, int resolution, int jobs) {
  const long need = static_cast<long>(resolution) * resolution * resolution;
  constexpr int kKeep = 16;

  int m = std::max(resolution, 8);
  long feasible_count = 0;
  std::vector<Candidate> seeds;
  for (;;) {
    std::vector<std::vector<Candidate>> tops(static_cast<size_t>(jobs > 0 ? jobs : 1));
    std::vector<long> counts(tops.size(), 0);
    parallel_chunks(static_cast<long>(m) + 1, std::max(1, jobs),
                    [&](int chunk, long ilo, long ihi) {
      std::vector<Candidate>& top = tops[static_cast<size_t>(chunk)];
      long local_count = 0;
      for (long i = ilo; i < ihi; ++i) {
        const double al = static_cast<double>(i) / m;
        for (int j = 0; j <= m; ++j) {
          const double be = static_cast<double>(j) / m;
          for (int k = 0; k <= m; ++k) {
            const double ga = static_cast<double>(k) / m;
            if (!admissible(claim, al, be, ga, 0.0)) continue;
            ++local_count;
            const double v = claim.expr(al, be, ga);
            if (top.size() < kKeep) {
              top.push_back({v, {al, be, ga}});
              continue;
            }
            auto worst = std::min_element(
                top.begin(), top.end(), [&](const Candidate& x, const Candidate& y) {
                  return better(claim.sense, y.value, x.value);
                });
            if (better(claim.sense, v, worst->value)) *worst = {v, {al, be, ga}};
          }
        }
      }
      counts[static_cast<size_t>(chunk)] = local_count;
    });

    feasible_count = 0;
    seeds.clear();
    for (size_t ci = 0; ci < tops.size(); ++ci) {
      feasible_count += counts[ci];
      seeds.insert(seeds.end(), tops[ci].begin(), tops[ci].end());
    }
    if (feasible_count >= need || m >= 420) break;
    m = m * 4 / 3 + 1;
  }

  if (seeds.empty())
    throw std::logic_error(std::string("no feasible point found for claim ") +
                           claim.label);
  std::sort(seeds.begin(), seeds.end(), [&](const Candidate& x, const Candidate& y) {
    return better(claim.sense, x.value, y.value);
  });
  if (seeds.size() > kKeep) seeds.resize(kKeep);

  // Coordinate descent with shrinking steps; moves must stay feasible.
  Candidate best = seeds.front();
  for (const Candidate& seed : seeds) {
    Candidate cur = seed;
    double step = 1.0 / m;
    while (step > 1e-12) {
      bool improved = false;
      for (int axis = 0; axis < 3; ++axis) {
        for (const double dir : {-1.0, 1.0}) {
          std::array<double, 3> pt = cur.pt;
          pt[static_cast<size_t>(axis)] += dir * step;
          if (!admissible(claim, pt[0], pt[1], pt[2], 1e-12)) continue;
          const double v = claim.expr(pt[0], pt[1], pt[2]);
          if (better(claim.sense, v, cur.value)) {
            cur = {v, pt};
            improved = true;
          }
        }
      }
      if (!improved) step /= 2.0;
    }
    if (better(claim.sense, cur.value, best.value)) best = cur;
  }

  ClaimCertificate cert;
  cert.claim_id = claim.label;
  cert.group = claim.group;
  cert.extremum = best.value;
  cert.arg = best.pt;
  if (best.pt[0] > 1e-12) {
    for (double& v : cert.arg) v /= best.pt[0];
  }
  cert.stated_value = claim.stated_value;
  cert.stated_arg = claim.stated_arg;
  cert.grid_feasible = feasible_count;
  cert.grid_per_axis = m;

  bool holds = true;
  switch (claim.sense) {
    case Sense::MaxAtMostZero: holds = best.value <= 1e-9; break;
    case Sense::MinAtLeastZero: holds = best.value >= -1e-9; break;
    case Sense::MinAtLeastFloor: holds = best.value >= claim.floor - 1e-9; break;
  }
  cert.verdict = holds ? Verdict::Holds : Verdict::Violated;
  if (!holds) {
    // Re-check the witness from scratch before reporting it.
    if (admissible(claim, best.pt[0], best.pt[1], best.pt[2], 1e-12) &&
        better(claim.sense, claim.expr(best.pt[0], best.pt[1], best.pt[2]),
               claim.sense == Sense::MaxAtMostZero ? 1e-9 : claim.floor - 1e-9))
      cert.witness = best.pt;
  }
  return cert;
}

}  // namespace

std::vector<std::string> registered_claims() {
  std::vector<std::string> ids;
  for (const Claim& c : kClaims) {
    if (ids.empty() || ids.back() != c.group) ids.emplace_back(c.group);
  }
  return ids;
}

std::vector<ClaimCertificate> verify_claim(const std::string& claim_id,
                                           int resolution, int jobs) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  std::vector<ClaimCertificate> out;
  for (const Claim& c : kClaims) {
    if (claim_id == c.group || claim_id == c.label)
      out.push_back(run_program(c, resolution, jobs));
  }
  if (out.empty()) throw UnknownClaim("unknown claim: " + claim_id);
  return out;
}

std::vector<ClaimCertificate> verify_all(int resolution, int jobs) {
  std::vector<ClaimCertificate> out;
  for (const std::string& id : registered_claims()) {
    auto certs = verify_claim(id, resolution, jobs);
    out.insert(out.end(), certs.begin(), certs.end());
  }
  return out;
}

}  // namespace trievac
