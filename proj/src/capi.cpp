// extern-C surface over the core library: opaque handles, status codes,
// no exceptions across the boundary.

#include "bsent.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <new>
#include <stdexcept>

#include "core/fock.hpp"
#include "core/gaussian.hpp"
#include "core/optimize.hpp"

struct bsent_state {
  bsent::GaussianState state;
};

namespace {

template <typename F>
bsent_status guarded(F&& f) noexcept {
  try {
    f();
    return BSENT_OK;
  } catch (const std::invalid_argument&) {
    return BSENT_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error&) {
    return BSENT_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    return BSENT_ERR_INTERNAL;
  } catch (...) {
    return BSENT_ERR_INTERNAL;
  }
}

bsent::ParamSet to_param_set(const bsent_params& p) {
  return {p.r_a, p.chi_a, p.r_b, p.chi_b, p.theta, p.phi0, p.phi1};
}

bsent_params from_param_set(const bsent::ParamSet& p) {
  return {p.r_a, p.chi_a, p.r_b, p.chi_b, p.theta, p.phi0, p.phi1};
}

}  // namespace

extern "C" {

const char* bsent_status_message(bsent_status s) {
  switch (s) {
    case BSENT_OK:
      return "ok";
    case BSENT_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case BSENT_ERR_DOMAIN:
      return "value outside the mathematical domain";
    case BSENT_ERR_INTERNAL:
      return "internal consistency check failed";
  }
  return "unknown status";
}

void bsent_params_init(bsent_params* p) {
  if (!p) return;
  *p = {0.0, 0.0, 0.0, 0.0, std::numbers::pi / 4.0, 0.0, 0.0};
}

bsent_status bsent_compute(const bsent_params* p, bsent_report* out) {
  if (!p || !out) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const bsent::SqueezingParam za(p->r_a, p->chi_a), zb(p->r_b, p->chi_b);
    const bsent::BeamSplitterParams bs(p->theta, p->phi0, p->phi1);
    const bsent::CovarianceMatrix2 m = bsent::covariance_elements(za, zb, bs);
    const bsent::ThermalEquivalent t = bsent::thermal_equivalent(bsent::delta(m));
    const bsent::GaussianState outs =
        bsent::apply_transform(bsent::input_state(za, zb), bsent::beam_splitter_symplectic(bs));
    const bsent::PptResult ppt = bsent::ppt_inseparable(outs);
    *out = {m.m11, m.m12, m.m22, t.delta, t.beta, t.entropy_nats, ppt.inseparable ? 1 : 0,
            ppt.lambda_min};
  });
}

bsent_status bsent_thermal_equivalent(double delta, bsent_thermal* out) {
  if (!out) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    if (!std::isfinite(delta)) throw std::invalid_argument("delta must be finite");
    const bsent::ThermalEquivalent t = bsent::thermal_equivalent(delta);
    *out = {t.delta, t.beta, t.entropy_nats};
  });
}

bsent_status bsent_state_create_vacuum(bsent_state** out) {
  if (!out) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new bsent_state{bsent::GaussianState::vacuum()}; });
}

bsent_status bsent_state_create_squeezed(const bsent_params* p, bsent_state** out) {
  if (!p || !out) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const bsent::SqueezingParam za(p->r_a, p->chi_a), zb(p->r_b, p->chi_b);
    *out = new bsent_state{bsent::input_state(za, zb)};
  });
}

bsent_status bsent_state_apply_beam_splitter(bsent_state* s, const bsent_params* p) {
  if (!s || !p) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const bsent::BeamSplitterParams bs(p->theta, p->phi0, p->phi1);
    s->state = bsent::apply_transform(s->state, bsent::beam_splitter_symplectic(bs));
  });
}

bsent_status bsent_state_covariance(const bsent_state* s, double out_cov[16]) {
  if (!s || !out_cov) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) out_cov[4 * r + c] = s->state.cov()(r, c);
  });
}

bsent_status bsent_state_reduced_a(const bsent_state* s, double* m11, double* m12, double* m22) {
  if (!s || !m11 || !m12 || !m22) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const bsent::CovarianceMatrix2 m = bsent::reduce_mode_a(s->state);
    *m11 = m.m11;
    *m12 = m.m12;
    *m22 = m.m22;
  });
}

bsent_status bsent_state_char_fn(const bsent_state* s, double re_xi_a, double im_xi_a,
                                 double re_xi_b, double im_xi_b, double* out_value) {
  if (!s || !out_value) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_value = bsent::char_fn_eval(
        s->state, {std::complex<double>(re_xi_a, im_xi_a), std::complex<double>(re_xi_b, im_xi_b)});
  });
}

bsent_status bsent_state_ppt(const bsent_state* s, int* inseparable, double* lambda_min) {
  if (!s || !inseparable || !lambda_min) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const bsent::PptResult r = bsent::ppt_inseparable(s->state);
    *inseparable = r.inseparable ? 1 : 0;
    *lambda_min = r.lambda_min;
  });
}

void bsent_state_free(bsent_state* s) { delete s; }

bsent_status bsent_phase_residual(const bsent_params* p, double* out) {
  if (!p || !out) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const bsent::ParamSet ps = to_param_set(*p);
    if (!std::isfinite(ps.phi0) || !std::isfinite(ps.phi1) || !std::isfinite(ps.chi_a) ||
        !std::isfinite(ps.chi_b))
      throw std::invalid_argument("phases must be finite");
    *out = bsent::phase_condition_residual(ps);
  });
}

bsent_status bsent_sweep(const bsent_params* base, const char* param, double from, double to,
                         int64_t steps, double* values, double* deltas, double* entropies) {
  if (!base || !param || !values || !deltas || !entropies) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const std::vector<bsent::SweepRow> rows =
        bsent::sweep(to_param_set(*base), {param, from, to, steps});
    for (std::size_t i = 0; i < rows.size(); ++i) {
      values[i] = rows[i].value;
      deltas[i] = rows[i].delta;
      entropies[i] = rows[i].entropy_nats;
    }
  });
}

bsent_status bsent_optimize(const bsent_params* fixed, unsigned free_mask, bsent_opt_result* out) {
  if (!fixed || !out) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const bsent::MaximizationResult r =
        bsent::maximize_entanglement(to_param_set(*fixed), free_mask);
    *out = {from_param_set(r.argmax), r.delta_max, r.entropy_max,
            r.k_branch, r.phase_residual,  r.flat_objective ? 1 : 0};
  });
}

bsent_status bsent_verify(const bsent_params* p, int cutoff, bsent_verify_result* out) {
  if (!p || !out) return BSENT_ERR_INVALID_ARGUMENT;
  if (cutoff < 4 || cutoff > 80) return BSENT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const bsent::SqueezingParam za(p->r_a, p->chi_a), zb(p->r_b, p->chi_b);
    const bsent::BeamSplitterParams bs(p->theta, p->phi0, p->phi1);
    const double gauss = bsent::entanglement(za, zb, bs).entropy_nats;
    try {
      const bsent::OracleResult oracle = bsent::oracle_entanglement(za, zb, bs, cutoff);
      const double diff = std::abs(gauss - oracle.entropy_nats);
      const double tol = std::max(1e-3, 10.0 * oracle.truncation_budget);
      *out = {gauss, oracle.entropy_nats, diff, oracle.truncation_budget, diff <= tol ? 1 : 0};
    } catch (const bsent::TruncationError& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      *out = {gauss, nan, nan, e.budget(), 0};
    }
  });
}

int bsent_cutoff_adequate(int cutoff, double r_max) {
  if (cutoff < 0 || !std::isfinite(r_max) || r_max < 0.0) return 0;
  return bsent::cutoff_meets_heuristic(cutoff, r_max) ? 1 : 0;
}

}  // extern "C"
