#ifndef BSENT_CORE_OPTIMIZE_HPP
#define BSENT_CORE_OPTIMIZE_HPP

// Parameter sweeps and entanglement maximization over beam-splitter and
// squeezing-phase settings.

#include <cstdint>
#include <string>
#include <vector>

#include "core/gaussian.hpp"

namespace bsent {

// Plain parameter carrier, pre-canonicalization. Construction of the typed
// parameters (and so all canonicalization) happens at evaluation time.
struct ParamSet {
  double r_a = 0.0;
  double chi_a = 0.0;
  double r_b = 0.0;
  double chi_b = 0.0;
  double theta = std::numbers::pi / 4.0;
  double phi0 = 0.0;
  double phi1 = 0.0;
};

struct EvalResult {
  double delta = 1.0;
  double entropy_nats = 0.0;
};

// Evaluate delta and entropy at a parameter point. Always computes delta by
// both routes (reduced-covariance determinant and the direct closed form)
// and refuses to proceed if they disagree beyond 1e-10.
EvalResult evaluate(const ParamSet& p);

struct SweepSpec {
  std::string param;  // r_a, chi_a, r_b, chi_b, theta, phi0, phi1
  double from = 0.0;
  double to = 0.0;
  std::int64_t steps = 0;  // number of points, endpoints inclusive
};

struct SweepRow {
  double value = 0.0;
  double delta = 1.0;
  double entropy_nats = 0.0;
};

std::vector<SweepRow> sweep(const ParamSet& base, const SweepSpec& spec);

// Bit flags selecting which parameters the optimizer may vary.
enum FreeParam : unsigned {
  kFreeTheta = 1u << 0,
  kFreePhi0 = 1u << 1,
  kFreePhi1 = 1u << 2,
  kFreeChiA = 1u << 3,
  kFreeChiB = 1u << 4,
  kFreeAll = (1u << 5) - 1,
};

struct MaximizationResult {
  ParamSet argmax;
  double delta_max = 1.0;
  double entropy_max = 0.0;
  // Nearest odd multiple (2k+1)pi of the phase combination
  // 2(phi1 - phi0) - (chi_b - chi_a), folded into (0, 2pi].
  int k_branch = 0;
  // |that combination - pi| folded to [0, pi]; 0 at a phase optimum.
  double phase_residual = 0.0;
  // Set when the coarse grid sees no variation at all (objective constant);
  // argmax is then the lexicographically first grid point.
  bool flat_objective = false;
};

// Grid scan (64 points/dimension up to 3 free parameters, 16 beyond) followed
// by golden-section coordinate refinement to parameter tolerance 1e-8.
// theta ranges over [0, pi/2]; phases over [0, 2pi).
MaximizationResult maximize_entanglement(const ParamSet& fixed, unsigned free_mask);

// Distance of 2(phi1 - phi0) - (chi_b - chi_a) from the nearest odd multiple
// of pi (the setting that maximizes entanglement at fixed theta), in [0, pi].
double phase_condition_residual(const ParamSet& p);

}  // namespace bsent

#endif
