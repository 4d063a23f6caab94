#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <stdexcept>

namespace trievac {

struct UnknownClaim : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Feasible region for one claim: an ordering over the edge polytope plus an
/// optional angle constraint, expressed polynomially so the closure (c = 0,
/// a = b + c) stays evaluable. Degenerate boundary points are included unless
/// a claim's expression needs them excluded.
struct TriangleSpace {
  enum class Ordering {
    AlphaGammaBeta,  // alpha >= gamma >= beta
    GammaDominant,   // gamma >= max(alpha, beta)
    GammaAlphaBeta,  // gamma >= alpha >= beta
    SortedDesc,      // alpha >= beta >= gamma (canonical a >= b >= c)
  };
  enum class Angle {
    None,
    NonObtuse,   // angle opposite the first edge at most pi/2
    CosAGeHalf,  // angle at A at most pi/3
    CosALeHalf,  // angle at A at least pi/3
  };

  Ordering ordering = Ordering::SortedDesc;
  Angle angle = Angle::None;

  bool feasible(double alpha, double beta, double gamma,
                double slack = 0.0) const;
};

enum class Verdict { Holds, Violated };

struct ClaimCertificate {
  std::string claim_id;  // program label (may be a sub-program of a group)
  std::string group;     // registered id this certificate belongs to
  Verdict verdict = Verdict::Holds;
  double extremum = 0.0;                 // found max (<=0 claims) or min (>=0 / floor claims)
  std::array<double, 3> arg{};           // arg-extremum, normalized alpha = 1
  std::optional<double> stated_value;    // optimal value as reported in print
  std::optional<std::array<double, 3>> stated_arg;
  std::optional<std::array<double, 3>> witness;  // feasible counterexample when Violated
  long grid_feasible = 0;
  int grid_per_axis = 0;
  double slack_tolerance = 1e-9;
};

std::vector<std::string> registered_claims();

/// Certifies one registered claim (some ids run several programs) by grid
/// search over at least resolution^3 feasible points plus coordinate-descent
/// refinement from the best grid cells.
std::vector<ClaimCertificate> verify_claim(const std::string& claim_id,
                                           int resolution, int jobs = 1);

std::vector<ClaimCertificate> verify_all(int resolution, int jobs = 1);

}  // namespace trievac
