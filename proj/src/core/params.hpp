#ifndef BSENT_CORE_PARAMS_HPP
#define BSENT_CORE_PARAMS_HPP

// Input-parameter types for the two-mode squeezed-light calculation:
// single-mode squeezing settings and lossless beam-splitter settings,
// canonicalized at construction.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace bsent {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Reduce an angle to [0, 2*pi). Throws on non-finite input.
inline double mod_2pi(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("angle must be finite");
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;  // fmod rounding can land exactly on 2*pi
  return r;
}

// Squeezed-vacuum setting zeta = r * exp(i*chi), stored canonically:
// r >= 0, chi in [0, 2*pi), and chi = 0 whenever r = 0.
class SqueezingParam {
 public:
  SqueezingParam() = default;

  SqueezingParam(double r, double chi) {
    if (!std::isfinite(r) || r < 0.0)
      throw std::invalid_argument("squeeze magnitude must be finite and nonnegative");
    r_ = r;
    chi_ = (r == 0.0) ? 0.0 : mod_2pi(chi);
  }

  explicit SqueezingParam(std::complex<double> zeta)
      : SqueezingParam(std::abs(zeta), std::arg(zeta)) {}

  double r() const { return r_; }
  double chi() const { return chi_; }
  std::complex<double> zeta() const { return std::polar(r_, chi_); }

  // Second moment cosh(2r) of the squeezed quadratures.
  double sigma() const { return std::cosh(2.0 * r_); }
  // Off-diagonal strength sinh(r)cosh(r) = sinh(2r)/2.
  double x() const { return std::sinh(r_) * std::cosh(r_); }

 private:
  double r_ = 0.0;
  double chi_ = 0.0;
};

// Lossless beam-splitter settings (theta, phi0, phi1). The mixing matrix is
//   M = [  cos(theta) e^{i phi0}   sin(theta) e^{i phi1} ]
//       [ -sin(theta) e^{-i phi1}  cos(theta) e^{-i phi0} ]
// theta is folded into [0, pi/2] at construction; each fold branch adjusts
// the phases so the mixing matrix is exactly unchanged.
class BeamSplitterParams {
 public:
  BeamSplitterParams() = default;

  BeamSplitterParams(double theta, double phi0, double phi1) {
    constexpr double pi = std::numbers::pi;
    theta = mod_2pi(theta);
    phi0 = mod_2pi(phi0);
    phi1 = mod_2pi(phi1);
    if (theta <= 0.5 * pi) {
      // already canonical
    } else if (theta <= pi) {
      theta = pi - theta;
      phi0 += pi;
    } else if (theta < 1.5 * pi) {
      theta -= pi;
      phi0 += pi;
      phi1 += pi;
    } else {
      theta = two_pi - theta;
      phi1 += pi;
    }
    theta_ = theta;
    phi0_ = mod_2pi(phi0);
    phi1_ = mod_2pi(phi1);
  }

  double theta() const { return theta_; }
  double phi0() const { return phi0_; }
  double phi1() const { return phi1_; }

  Eigen::Matrix2cd mixing_matrix() const {
    const double c = std::cos(theta_), s = std::sin(theta_);
    const std::complex<double> e0 = std::polar(1.0, phi0_);
    const std::complex<double> e1 = std::polar(1.0, phi1_);
    Eigen::Matrix2cd m;
    m << c * e0, s * e1, -s * std::conj(e1), c * std::conj(e0);
    return m;
  }

 private:
  double theta_ = 0.0;
  double phi0_ = 0.0;
  double phi1_ = 0.0;
};

}  // namespace bsent

#endif
