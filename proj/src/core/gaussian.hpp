#ifndef BSENT_CORE_GAUSSIAN_HPP
#define BSENT_CORE_GAUSSIAN_HPP

// Two-mode Gaussian-state machinery. Covariance matrices use the
// characteristic-function convention: for a zero-mean state,
//   C(xi) = exp(-1/2 xi^T M xi),  xi = (Re xi_a, Im xi_a, Re xi_b, Im xi_b),
// so the vacuum covariance is the identity. All entropies are in nats.

#include <complex>

#include <Eigen/Dense>

#include "core/params.hpp"

namespace bsent {

// Reduced single-mode covariance (m21 = m12 implied).
struct CovarianceMatrix2 {
  double m11 = 1.0;
  double m12 = 0.0;
  double m22 = 1.0;
};

// Thermal state carrying the same entropy as the reduced mode:
// delta = sqrt(det of the reduced covariance), exp(-beta) = (delta-1)/(delta+1).
struct ThermalEquivalent {
  double delta = 1.0;
  double beta = 0.0;  // +infinity for a pure reduction (delta = 1)
  double entropy_nats = 0.0;
};

struct PhaseSpacePoint {
  std::complex<double> xi_a{0.0, 0.0};
  std::complex<double> xi_b{0.0, 0.0};
};

struct PptResult {
  bool inseparable = false;
  double lambda_min = 0.0;
};

// Validated 4x4 covariance matrix of a pure two-mode Gaussian state.
// Construction enforces symmetry (1e-12), the uncertainty relation
// (min eig of cov + i*Omega >= -1e-10) and purity (|det - 1| <= 1e-9).
class GaussianState {
 public:
  explicit GaussianState(const Eigen::Matrix4d& cov);
  const Eigen::Matrix4d& cov() const { return cov_; }
  static GaussianState vacuum();

 private:
  Eigen::Matrix4d cov_;
};

// Symplectic form matching the xi ordering above.
Eigen::Matrix4d omega_matrix();

// 2x2 quadrature transform of the single-mode squeezer:
// cosh(r)*I + sinh(r)*[[cos chi, -sin chi], [-sin chi, -cos chi]].
Eigen::Matrix2d squeezer_symplectic(const SqueezingParam& z);

// 4x4 quadrature transform of the beam splitter: each complex entry
// alpha + i*beta of the mixing matrix becomes the block [[alpha,-beta],[beta,alpha]].
Eigen::Matrix4d beam_splitter_symplectic(const BeamSplitterParams& bs);

// Product state of two independently squeezed vacua.
GaussianState input_state(const SqueezingParam& za, const SqueezingParam& zb);

// Congruence cov -> S cov S^T. Rejects non-symplectic S (tolerance 1e-10).
GaussianState apply_transform(const GaussianState& state, const Eigen::Matrix4d& s);

// Upper-left 2x2 block: covariance of the reduced output mode a.
CovarianceMatrix2 reduce_mode_a(const GaussianState& state);

// Closed-form reduced covariance of output mode a, bypassing the matrix
// pipeline entirely (independent route used for cross-checks):
//   m11 = Sa c^2 + Sb s^2 + 2 xa c^2 cos(Da) + 2 xb s^2 cos(Db)
//   m12 = 2 xa c^2 sin(Da) + 2 xb s^2 sin(Db)
//   m22 = Sa c^2 + Sb s^2 - 2 xa c^2 cos(Da) - 2 xb s^2 cos(Db)
// with c = cos theta, s = sin theta, Da = 2 phi0 - chi_a, Db = 2 phi1 - chi_b.
CovarianceMatrix2 covariance_elements(const SqueezingParam& za,
                                      const SqueezingParam& zb,
                                      const BeamSplitterParams& bs);

// sqrt(m11*m22 - m12^2). Values in [1 - 1e-10, 1) clamp to exactly 1;
// anything below 1 - 1e-6 under the root is a domain error.
double delta(const CovarianceMatrix2& m);

// Independent closed form for delta^2:
//   cos^4 + sin^4 + (1/2) sin^2(2 theta) Sa Sb
//   - 2 xa xb sin^2(2 theta) cos(Db - Da).
double delta_squared_closed_form(const SqueezingParam& za,
                                 const SqueezingParam& zb,
                                 const BeamSplitterParams& bs);

// Thermal-equivalent parameters and entropy for a given delta >= 1:
//   E = ((d+1)/2) ln((d+1)/2) - ((d-1)/2) ln((d-1)/2).
ThermalEquivalent thermal_equivalent(double d);

// Full pipeline: closed-form covariance -> delta -> thermal equivalent.
ThermalEquivalent entanglement(const SqueezingParam& za, const SqueezingParam& zb,
                               const BeamSplitterParams& bs);

// Characteristic-function value C(xi) (real for these zero-mean states).
double char_fn_eval(const GaussianState& state, const PhaseSpacePoint& xi);

// Partial-transpose test: minimum eigenvalue of cov + i*Omega_pt with the
// mode-a block of the symplectic form transposed. Inseparable iff < -1e-9.
PptResult ppt_inseparable(const GaussianState& state);

}  // namespace bsent

#endif
