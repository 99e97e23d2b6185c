#ifndef BSENT_H
#define BSENT_H

/*
 * C API for the squeezed-light beam-splitter entanglement library.
 *
 * Two single-mode squeezed vacua (r_a, chi_a) and (r_b, chi_b) meet at a
 * lossless beam splitter (theta, phi0, phi1). The library reports the
 * reduced covariance of output mode a, the invariant delta (square root of
 * its determinant), the thermal-equivalent inverse temperature beta with
 * exp(-beta) = (delta-1)/(delta+1), the entanglement entropy in nats, a
 * partial-transpose separability verdict, the phase condition maximizing
 * the entanglement, and an independent Fock-space verification.
 *
 * Covariance convention: characteristic-function form, vacuum = identity.
 * Angles are radians. All functions returning bsent_status are total: they
 * never throw and never write outputs on failure statuses.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bsent_status {
  BSENT_OK = 0,
  BSENT_ERR_INVALID_ARGUMENT = 1, /* bad pointer, non-finite or out-of-range input */
  BSENT_ERR_DOMAIN = 2,           /* value outside the mathematical domain */
  BSENT_ERR_INTERNAL = 3          /* internal consistency check failed */
} bsent_status;

/* Human-readable description of a status code (static storage). */
const char* bsent_status_message(bsent_status s);

typedef struct bsent_params {
  double r_a;   /* squeeze magnitude, mode a (>= 0; validated numerically up to 3) */
  double chi_a; /* squeeze phase, mode a */
  double r_b;
  double chi_b;
  double theta; /* beam-splitter mixing angle */
  double phi0;  /* transmission phase */
  double phi1;  /* reflection phase */
} bsent_params;

/* Defaults: vacuum inputs through a balanced splitter (theta = pi/4, phases 0). */
void bsent_params_init(bsent_params* p);

typedef struct bsent_report {
  double m11, m12, m22; /* reduced covariance of output mode a */
  double delta;         /* sqrt(m11*m22 - m12^2), >= 1 */
  double beta;          /* thermal-equivalent inverse temperature (inf when delta = 1) */
  double entropy_nats;  /* entanglement entropy */
  int inseparable;      /* partial-transpose verdict for the output state */
  double lambda_min;    /* minimum eigenvalue behind that verdict */
} bsent_report;

/* Full closed-form pipeline at one parameter point. */
bsent_status bsent_compute(const bsent_params* p, bsent_report* out);

typedef struct bsent_thermal {
  double delta;
  double beta;
  double entropy_nats;
} bsent_thermal;

/* Thermal-equivalent parameters and entropy for a given delta >= 1. */
bsent_status bsent_thermal_equivalent(double delta, bsent_thermal* out);

/*
 * Opaque two-mode Gaussian state (explicit covariance pipeline; the same
 * physics as bsent_compute, exposed stepwise).
 */
typedef struct bsent_state bsent_state;

bsent_status bsent_state_create_vacuum(bsent_state** out);
/* Product of two squeezed vacua; uses the r/chi fields of p only. */
bsent_status bsent_state_create_squeezed(const bsent_params* p, bsent_state** out);
/* Applies the beam splitter; uses the theta/phi fields of p only. */
bsent_status bsent_state_apply_beam_splitter(bsent_state* s, const bsent_params* p);
/* 4x4 covariance, row-major, ordering (Re xi_a, Im xi_a, Re xi_b, Im xi_b). */
bsent_status bsent_state_covariance(const bsent_state* s, double out_cov[16]);
/* Reduced covariance of mode a. */
bsent_status bsent_state_reduced_a(const bsent_state* s, double* m11, double* m12, double* m22);
/* Characteristic-function value at a phase-space point (real for these states). */
bsent_status bsent_state_char_fn(const bsent_state* s, double re_xi_a, double im_xi_a,
                                 double re_xi_b, double im_xi_b, double* out_value);
/* Partial-transpose test: inseparable iff the minimum eigenvalue < -1e-9. */
bsent_status bsent_state_ppt(const bsent_state* s, int* inseparable, double* lambda_min);
void bsent_state_free(bsent_state* s);

/*
 * Distance of 2(phi1 - phi0) - (chi_b - chi_a) from the nearest odd multiple
 * of pi, in [0, pi]; zero exactly on the entanglement-maximizing phase branch.
 */
bsent_status bsent_phase_residual(const bsent_params* p, double* out);

/*
 * Sweep one parameter over an inclusive grid. param is one of
 * "r_a", "chi_a", "r_b", "chi_b", "theta", "phi0", "phi1"; steps in
 * [2, 1000000]. The three arrays must each hold steps entries.
 */
bsent_status bsent_sweep(const bsent_params* base, const char* param, double from, double to,
                         int64_t steps, double* values, double* deltas, double* entropies);

#define BSENT_FREE_THETA 0x01u
#define BSENT_FREE_PHI0 0x02u
#define BSENT_FREE_PHI1 0x04u
#define BSENT_FREE_CHI_A 0x08u
#define BSENT_FREE_CHI_B 0x10u

typedef struct bsent_opt_result {
  bsent_params argmax;
  double delta_max;
  double entropy_max;
  int k_branch;          /* odd-multiple index (2k+1)pi of the optimal phase branch */
  double phase_residual; /* residual at the argmax */
  int flat_objective;    /* objective showed no variation; argmax is the first grid point */
} bsent_opt_result;

/*
 * Maximize the entanglement over the parameters selected by free_mask
 * (BSENT_FREE_* flags; must be nonempty): grid scan plus golden-section
 * coordinate refinement to parameter tolerance 1e-8.
 */
bsent_status bsent_optimize(const bsent_params* fixed, unsigned free_mask, bsent_opt_result* out);

typedef struct bsent_verify_result {
  double gaussian_entropy;
  double oracle_entropy;    /* NaN when the truncation guard trips */
  double abs_diff;          /* NaN when the truncation guard trips */
  double truncation_budget; /* probability weight lost to the cutoff */
  int pass; /* |gaussian - oracle| <= max(1e-3, 10*budget) and guard ok */
} bsent_verify_result;

/*
 * Independent Fock-space verification at the given cutoff (in [4, 80]):
 * exact squeezed amplitudes, dense beam-splitter unitary, partial trace,
 * von Neumann entropy. A tripped truncation guard (single-mode lost weight
 * above 1e-6) yields BSENT_OK with pass = 0 and NaN oracle fields.
 */
bsent_status bsent_verify(const bsent_params* p, int cutoff, bsent_verify_result* out);

/* 1 when cutoff + 1 >= 4*sinh^2(r_max) + 10, the rule of thumb for a safe cutoff. */
int bsent_cutoff_adequate(int cutoff, double r_max);

#ifdef __cplusplus
}
#endif

#endif
