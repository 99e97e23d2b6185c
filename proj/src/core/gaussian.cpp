#include "core/gaussian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bsent {

namespace {

constexpr double kSymTol = 1e-12;
constexpr double kUncertaintyTol = 1e-10;
constexpr double kPurityTol = 1e-9;
constexpr double kSymplecticTol = 1e-10;
constexpr double kDeltaClamp = 1e-10;
constexpr double kDeltaDomainTol = 1e-6;
constexpr double kPptTol = 1e-9;

Eigen::Matrix2d rep(std::complex<double> u) {
  Eigen::Matrix2d b;
  b << u.real(), -u.imag(), u.imag(), u.real();
  return b;
}

}  // namespace

Eigen::Matrix4d omega_matrix() {
  Eigen::Matrix4d w = Eigen::Matrix4d::Zero();
  w(0, 1) = 1.0;
  w(1, 0) = -1.0;
  w(2, 3) = 1.0;
  w(3, 2) = -1.0;
  return w;
}

GaussianState::GaussianState(const Eigen::Matrix4d& cov) : cov_(cov) {
  if (!cov.allFinite()) throw std::invalid_argument("covariance must be finite");
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > kSymTol)
    throw std::domain_error("covariance must be symmetric");
  Eigen::Matrix4cd h = cov.cast<std::complex<double>>() +
                       std::complex<double>(0.0, 1.0) * omega_matrix().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kUncertaintyTol)
    throw std::domain_error("covariance violates the uncertainty relation");
  if (std::abs(cov.determinant() - 1.0) > kPurityTol)
    throw std::domain_error("covariance does not describe a pure state");
}

GaussianState GaussianState::vacuum() { return GaussianState(Eigen::Matrix4d::Identity()); }

Eigen::Matrix2d squeezer_symplectic(const SqueezingParam& z) {
  const double ch = std::cosh(z.r()), sh = std::sinh(z.r());
  const double c = std::cos(z.chi()), s = std::sin(z.chi());
  Eigen::Matrix2d m;
  m << ch + sh * c, -sh * s, -sh * s, ch - sh * c;
  return m;
}

Eigen::Matrix4d beam_splitter_symplectic(const BeamSplitterParams& bs) {
  const Eigen::Matrix2cd m = bs.mixing_matrix();
  Eigen::Matrix4d s;
  s.block<2, 2>(0, 0) = rep(m(0, 0));
  s.block<2, 2>(0, 2) = rep(m(0, 1));
  s.block<2, 2>(2, 0) = rep(m(1, 0));
  s.block<2, 2>(2, 2) = rep(m(1, 1));
  return s;
}

GaussianState input_state(const SqueezingParam& za, const SqueezingParam& zb) {
  const Eigen::Matrix2d sa = squeezer_symplectic(za);
  const Eigen::Matrix2d sb = squeezer_symplectic(zb);
  Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();
  cov.block<2, 2>(0, 0) = sa * sa.transpose();
  cov.block<2, 2>(2, 2) = sb * sb.transpose();
  return GaussianState(cov);
}

GaussianState apply_transform(const GaussianState& state, const Eigen::Matrix4d& s) {
  if (!s.allFinite()) throw std::invalid_argument("transform must be finite");
  const Eigen::Matrix4d w = omega_matrix();
  if ((s * w * s.transpose() - w).cwiseAbs().maxCoeff() > kSymplecticTol)
    throw std::invalid_argument("transform is not symplectic");
  // the true result is symmetric; fold out the association noise
  const Eigen::Matrix4d out = s * state.cov() * s.transpose();
  return GaussianState(0.5 * (out + out.transpose()));
}

CovarianceMatrix2 reduce_mode_a(const GaussianState& state) {
  const Eigen::Matrix4d& c = state.cov();
  return {c(0, 0), c(0, 1), c(1, 1)};
}

CovarianceMatrix2 covariance_elements(const SqueezingParam& za, const SqueezingParam& zb,
                                      const BeamSplitterParams& bs) {
  const double c2 = std::pow(std::cos(bs.theta()), 2);
  // complement instead of sin^2 so the weights sum to <= 1 exactly; with
  // unsqueezed inputs the reduced state then clamps to the vacuum precisely
  const double s2 = 1.0 - c2;
  const double da = 2.0 * bs.phi0() - za.chi();
  const double db = 2.0 * bs.phi1() - zb.chi();
  const double diag = za.sigma() * c2 + zb.sigma() * s2;
  const double even = 2.0 * za.x() * c2 * std::cos(da) + 2.0 * zb.x() * s2 * std::cos(db);
  const double odd = 2.0 * za.x() * c2 * std::sin(da) + 2.0 * zb.x() * s2 * std::sin(db);
  return {diag + even, odd, diag - even};
}

double delta(const CovarianceMatrix2& m) {
  const double det = m.m11 * m.m22 - m.m12 * m.m12;
  if (!(det >= 1.0 - kDeltaDomainTol))
    throw std::domain_error("reduced covariance determinant below 1");
  double d = std::sqrt(det);
  if (d < 1.0 && d >= 1.0 - kDeltaClamp) d = 1.0;
  return d;
}

double delta_squared_closed_form(const SqueezingParam& za, const SqueezingParam& zb,
                                 const BeamSplitterParams& bs) {
  const double c = std::cos(bs.theta()), s = std::sin(bs.theta());
  const double s2t = std::sin(2.0 * bs.theta());
  const double ddiff = (2.0 * bs.phi1() - zb.chi()) - (2.0 * bs.phi0() - za.chi());
  return std::pow(c, 4) + std::pow(s, 4) + 0.5 * s2t * s2t * za.sigma() * zb.sigma() -
         2.0 * za.x() * zb.x() * s2t * s2t * std::cos(ddiff);
}

ThermalEquivalent thermal_equivalent(double d) {
  if (!(d >= 1.0 - kDeltaClamp)) throw std::domain_error("delta must be >= 1");
  if (d <= 1.0) return {d, std::numeric_limits<double>::infinity(), 0.0};
  const double np1 = 0.5 * (d + 1.0);  // mean photon number + 1
  const double n = 0.5 * (d - 1.0);    // mean photon number
  const double beta = -std::log((d - 1.0) / (d + 1.0));
  return {d, beta, np1 * std::log(np1) - n * std::log(n)};
}

ThermalEquivalent entanglement(const SqueezingParam& za, const SqueezingParam& zb,
                               const BeamSplitterParams& bs) {
  return thermal_equivalent(delta(covariance_elements(za, zb, bs)));
}

double char_fn_eval(const GaussianState& state, const PhaseSpacePoint& xi) {
  Eigen::Vector4d v;
  v << xi.xi_a.real(), xi.xi_a.imag(), xi.xi_b.real(), xi.xi_b.imag();
  if (!v.allFinite()) throw std::invalid_argument("phase-space point must be finite");
  return std::exp(-0.5 * v.dot(state.cov() * v));
}

PptResult ppt_inseparable(const GaussianState& state) {
  // Partial transposition of mode a flips its momentum, which transposes the
  // mode-a block of the symplectic form.
  Eigen::Matrix4d wt = omega_matrix();
  wt(0, 1) = -1.0;
  wt(1, 0) = 1.0;
  Eigen::Matrix4cd h = state.cov().cast<std::complex<double>>() +
                       std::complex<double>(0.0, 1.0) * wt.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  return {lmin < -kPptTol, lmin};
}

}  // namespace bsent
