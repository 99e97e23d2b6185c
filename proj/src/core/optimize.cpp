#include "core/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace bsent {

namespace {

constexpr double kRouteTol = 1e-10;
constexpr double kFlatTol = 1e-12;
constexpr double kParamTol = 1e-8;
constexpr double kResidualAssertTol = 1e-6;
constexpr std::int64_t kMaxSteps = 1000000;

double clamp_unit_delta(double d) {
  if (d < 1.0 && d >= 1.0 - 1e-10) return 1.0;
  return d;
}

struct Coord {
  double ParamSet::* field;
  double lo;
  double hi;
  bool periodic;  // phases wrap; theta is clamped to its interval
};

double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    }
  }
  return 0.5 * (a + b);
}

// Phase combination whose odd-pi settings maximize the entanglement.
double phase_combination(const ParamSet& p) {
  return 2.0 * (p.phi1 - p.phi0) - (p.chi_b - p.chi_a);
}

}  // namespace

EvalResult evaluate(const ParamSet& p) {
  const SqueezingParam za(p.r_a, p.chi_a), zb(p.r_b, p.chi_b);
  const BeamSplitterParams bs(p.theta, p.phi0, p.phi1);
  const double d_det = delta(covariance_elements(za, zb, bs));
  const double d2 = delta_squared_closed_form(za, zb, bs);
  if (!(d2 >= 1.0 - 1e-6)) throw std::domain_error("closed-form delta^2 below 1");
  const double d_cf = clamp_unit_delta(std::sqrt(d2));
  if (std::abs(d_det - d_cf) > kRouteTol)
    throw std::logic_error("delta routes disagree beyond tolerance");
  const ThermalEquivalent t = thermal_equivalent(d_det);
  return {t.delta, t.entropy_nats};
}

std::vector<SweepRow> sweep(const ParamSet& base, const SweepSpec& spec) {
  static const std::array<std::pair<const char*, double ParamSet::*>, 7> kFields = {{
      {"r_a", &ParamSet::r_a},
      {"chi_a", &ParamSet::chi_a},
      {"r_b", &ParamSet::r_b},
      {"chi_b", &ParamSet::chi_b},
      {"theta", &ParamSet::theta},
      {"phi0", &ParamSet::phi0},
      {"phi1", &ParamSet::phi1},
  }};
  double ParamSet::* field = nullptr;
  for (const auto& [name, f] : kFields)
    if (spec.param == name) field = f;
  if (!field) throw std::invalid_argument("unknown sweep parameter: " + spec.param);
  if (!std::isfinite(spec.from) || !std::isfinite(spec.to) || spec.from >= spec.to)
    throw std::invalid_argument("sweep range must be finite with from < to");
  if (spec.steps < 2 || spec.steps > kMaxSteps)
    throw std::invalid_argument("sweep steps must be in [2, 1000000]");

  std::vector<SweepRow> rows;
  rows.reserve(std::size_t(spec.steps));
  for (std::int64_t i = 0; i < spec.steps; ++i) {
    ParamSet p = base;
    const double v = spec.from + (spec.to - spec.from) * double(i) / double(spec.steps - 1);
    p.*field = v;
    const EvalResult e = evaluate(p);
    rows.push_back({v, e.delta, e.entropy_nats});
  }
  return rows;
}

MaximizationResult maximize_entanglement(const ParamSet& fixed, unsigned free_mask) {
  constexpr double pi = std::numbers::pi;
  if (free_mask == 0 || (free_mask & ~kFreeAll))
    throw std::invalid_argument("free-parameter mask is empty or has unknown bits");

  std::vector<Coord> coords;
  if (free_mask & kFreeTheta) coords.push_back({&ParamSet::theta, 0.0, 0.5 * pi, false});
  if (free_mask & kFreePhi0) coords.push_back({&ParamSet::phi0, 0.0, two_pi, true});
  if (free_mask & kFreePhi1) coords.push_back({&ParamSet::phi1, 0.0, two_pi, true});
  if (free_mask & kFreeChiA) coords.push_back({&ParamSet::chi_a, 0.0, two_pi, true});
  if (free_mask & kFreeChiB) coords.push_back({&ParamSet::chi_b, 0.0, two_pi, true});
  const std::size_t dims = coords.size();
  const int n = dims <= 3 ? 64 : 16;

  // coarse grid scan; periodic coordinates omit the duplicate endpoint
  auto grid_value = [&](const Coord& c, int k) {
    return c.periodic ? c.lo + (c.hi - c.lo) * double(k) / double(n)
                      : c.lo + (c.hi - c.lo) * double(k) / double(n - 1);
  };
  ParamSet best = fixed;
  for (const Coord& c : coords) best.*(c.field) = grid_value(c, 0);
  double best_e = evaluate(best).entropy_nats;
  double min_e = best_e;
  std::vector<int> counter(dims, 0);
  for (;;) {
    std::size_t j = 0;
    while (j < dims && ++counter[j] == n) counter[j++] = 0;
    if (j == dims) break;
    ParamSet p = fixed;
    for (std::size_t i = 0; i < dims; ++i) p.*(coords[i].field) = grid_value(coords[i], counter[i]);
    const double e = evaluate(p).entropy_nats;
    if (e > best_e) {
      best_e = e;
      best = p;
    }
    if (e < min_e) min_e = e;
  }

  MaximizationResult res;
  res.flat_objective = (best_e - min_e) <= kFlatTol;

  if (!res.flat_objective) {
    // golden-section refinement, one coordinate at a time
    for (int round = 0; round < 3; ++round) {
      for (const Coord& c : coords) {
        const double h = (c.hi - c.lo) / double(c.periodic ? n : n - 1);
        const double center = best.*(c.field);
        double lo = center - h, hi = center + h;
        if (!c.periodic) {
          lo = std::max(lo, c.lo);
          hi = std::min(hi, c.hi);
        }
        ParamSet probe = best;
        const double arg = golden_max(
            [&](double v) {
              probe.*(c.field) = v;
              return evaluate(probe).entropy_nats;
            },
            lo, hi, kParamTol);
        best.*(c.field) = arg;
      }
    }
  }

  // canonicalize the reported argmax through the parameter types
  const SqueezingParam za(best.r_a, best.chi_a), zb(best.r_b, best.chi_b);
  const BeamSplitterParams bs(best.theta, best.phi0, best.phi1);
  res.argmax = {za.r(), za.chi(), zb.r(), zb.chi(), bs.theta(), bs.phi0(), bs.phi1()};
  const EvalResult e = evaluate(res.argmax);
  res.delta_max = e.delta;
  res.entropy_max = e.entropy_nats;
  res.phase_residual = phase_condition_residual(res.argmax);

  double folded = mod_2pi(phase_combination(res.argmax));
  if (folded == 0.0) folded = two_pi;
  res.k_branch = folded >= two_pi ? 0 : int(std::lround((folded - pi) / two_pi));

  // with any phase free and both modes squeezed, a non-flat optimum must sit
  // on the stationary phase condition
  const bool phase_free = free_mask & (kFreePhi0 | kFreePhi1 | kFreeChiA | kFreeChiB);
  if (!res.flat_objective && phase_free && fixed.r_a > 0.0 && fixed.r_b > 0.0 &&
      res.phase_residual >= kResidualAssertTol)
    throw std::logic_error("optimizer left the stationary phase condition unsatisfied");

  return res;
}

double phase_condition_residual(const ParamSet& p) {
  return std::abs(std::remainder(phase_combination(p) - std::numbers::pi, two_pi));
}

}  // namespace bsent
