#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include <doctest.h>

#include "core/fock.hpp"
#include "core/gaussian.hpp"

using namespace bsent;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEntropyAtCosh1 = 0.6594529591680367;  // balanced optimum at r = 0.5
constexpr double kMeanPhotonHalf = 0.2715403174076219;  // sinh^2(0.5)
constexpr double kLn2 = 0.69314718055994531;
constexpr double kTwoLn2 = 1.3862943611198906;

using Cd = std::complex<double>;

Eigen::VectorXcd tensor_state(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) out(i * b.size() + j) = a(i) * b(j);
  return out;
}

Eigen::VectorXcd basis2(int na, int nb, int n_max) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero((n_max + 1) * (n_max + 1));
  v(na * (n_max + 1) + nb) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("squeezed amplitudes") {
  const Eigen::VectorXcd vac = squeeze_vacuum_fock(SqueezingParam(0.0, 0.0), 8);
  CHECK(vac(0) == Cd(1.0, 0.0));
  CHECK(vac.tail(8).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::VectorXcd c = squeeze_vacuum_fock(SqueezingParam(0.8, 2.1), 32);
  for (int n = 1; n <= 31; n += 2) CHECK(std::abs(c(n)) == 0.0);
  // explicit low-order coefficients
  const double r = 0.8, chi = 2.1;
  const Cd f = -std::polar(std::tanh(r), chi);
  const Cd c0 = Cd(1.0 / std::sqrt(std::cosh(r)), 0.0);
  const Cd c2 = c0 * f * std::sqrt(2.0) / 2.0;
  const Cd c4 = c2 * f * std::sqrt(12.0) / 4.0;
  CHECK(std::abs(c(0) - c0) < 1e-14);
  CHECK(std::abs(c(2) - c2) < 1e-14);
  CHECK(std::abs(c(4) - c4) < 1e-14);

  // a generous cutoff leaves essentially no weight behind
  const Eigen::VectorXcd ch = squeeze_vacuum_fock(SqueezingParam(0.5, 0.0), 60);
  CHECK(1.0 - ch.squaredNorm() < 1e-12);
  CHECK(std::abs(mean_photon(ch) - kMeanPhotonHalf) < 1e-8);
}

TEST_CASE("squeezed amplitudes signal a starved cutoff") {
  CHECK_THROWS_AS(squeeze_vacuum_fock(SqueezingParam(2.0, 0.0), 10), TruncationError);
  try {
    squeeze_vacuum_fock(SqueezingParam(0.8, 0.0), 12);
    CHECK(false);  // r = 0.8 at cutoff 12 must trip the budget guard
  } catch (const TruncationError& e) {
    CHECK(e.budget() > 1e-6);
    CHECK(e.budget() < 1e-2);
  }
}

TEST_CASE("quadrature moments match the phase-space transform") {
  const Eigen::Matrix2d q = quadrature_covariance(squeeze_vacuum_fock(SqueezingParam(0.5, 0.0), 60));
  CHECK(std::abs(q(0, 0) - std::exp(1.0)) < 1e-8);
  CHECK(std::abs(q(1, 1) - std::exp(-1.0)) < 1e-8);
  CHECK(std::abs(q(0, 1)) < 1e-8);

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> ur(0.0, 0.8), ua(0.0, two_pi);
  for (int i = 0; i < 20; ++i) {
    const SqueezingParam z(ur(rng), ua(rng));
    const Eigen::Matrix2d s = squeezer_symplectic(z);
    const Eigen::Matrix2d expect = s * s.transpose();
    const Eigen::Matrix2d got = quadrature_covariance(squeeze_vacuum_fock(z, 60));
    CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("beam-splitter unitary structure") {
  const int n_max = 14;
  const int dim = (n_max + 1) * (n_max + 1);
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> u(0.0, two_pi);
  for (int i = 0; i < 3; ++i) {
    const BeamSplitterParams bs(u(rng), u(rng), u(rng));
    const Eigen::MatrixXcd uu = bs_unitary_fock(bs, n_max);
    CHECK((uu.adjoint() * uu - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() <
          1e-9);

    // total photon number commutes with the unitary
    Eigen::VectorXd ntot(dim);
    for (int na = 0; na <= n_max; ++na)
      for (int nb = 0; nb <= n_max; ++nb) ntot(na * (n_max + 1) + nb) = double(na + nb);
    const Eigen::MatrixXcd lhs = uu * ntot.asDiagonal();
    const Eigen::MatrixXcd rhs = ntot.asDiagonal() * uu;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);

    // vacuum is fixed
    const Eigen::VectorXcd out = uu * basis2(0, 0, n_max);
    CHECK(std::abs(out(0) - 1.0) < 1e-12);
    CHECK((out.tail(dim - 1)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("single photon splits with the advertised amplitudes") {
  const int n_max = 6;
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.0, two_pi);
  for (int i = 0; i < 5; ++i) {
    const double th = u(rng), p0 = u(rng), p1 = u(rng);
    const BeamSplitterParams bs(th, p0, p1);
    const Eigen::VectorXcd out = bs_unitary_fock(bs, n_max) * basis2(1, 0, n_max);
    const Cd a10 = std::polar(std::cos(th), -p0);
    const Cd a01 = -std::polar(std::sin(th), p1);
    CHECK(std::abs(out(1 * (n_max + 1) + 0) - a10) < 1e-10);
    CHECK(std::abs(out(0 * (n_max + 1) + 1) - a01) < 1e-10);
    double rest = 0.0;
    for (int k = 0; k < out.size(); ++k)
      if (k != 1 * (n_max + 1) && k != 1) rest = std::max(rest, std::abs(out(k)));
    CHECK(rest < 1e-10);
  }
  // balanced splitter: equal 1/2 probabilities
  const Eigen::VectorXcd half =
      bs_unitary_fock(BeamSplitterParams(0.25 * kPi, 0.0, 0.0), n_max) * basis2(1, 0, n_max);
  CHECK(std::abs(std::norm(half(1 * (n_max + 1))) - 0.5) < 1e-12);
  CHECK(std::abs(std::norm(half(1)) - 0.5) < 1e-12);
}

TEST_CASE("mode operators transform by the mixing matrix") {
  const int n_max = 12;
  const int d = n_max + 1;
  const Eigen::MatrixXcd a1 = lower_op(n_max).cast<Cd>();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd a2 = Eigen::MatrixXcd::Zero(d * d, d * d);
  Eigen::MatrixXcd b2 = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          a2(i * d + k, j * d + l) = a1(i, j) * id(k, l);
          b2(i * d + k, j * d + l) = id(i, j) * a1(k, l);
        }

  const BeamSplitterParams bs(1.1, 0.7, 2.9);
  const Eigen::MatrixXcd uu = bs_unitary_fock(bs, n_max);
  const Eigen::MatrixXcd lhs_a = uu.adjoint() * a2 * uu;
  const Eigen::MatrixXcd lhs_b = uu.adjoint() * b2 * uu;
  const Cd ca = std::polar(std::cos(bs.theta()), -bs.phi0());
  const Cd sa = std::polar(std::sin(bs.theta()), -bs.phi1());
  const Eigen::MatrixXcd rhs_a = ca * a2 + sa * b2;
  const Eigen::MatrixXcd rhs_b = -std::conj(sa) * a2 + std::conj(ca) * b2;

  // compare on columns whose photon total stays inside the truncation
  double worst = 0.0;
  for (int na = 0; na <= n_max; ++na)
    for (int nb = 0; na + nb <= n_max - 1 && nb <= n_max; ++nb) {
      const int col = na * d + nb;
      worst = std::max(worst, (lhs_a.col(col) - rhs_a.col(col)).cwiseAbs().maxCoeff());
      worst = std::max(worst, (lhs_b.col(col) - rhs_b.col(col)).cwiseAbs().maxCoeff());
    }
  CHECK(worst < 1e-9);
}

TEST_CASE("partial traces") {
  const int n_max = 7;
  std::mt19937 rng(31);
  std::normal_distribution<double> g(0.0, 1.0);

  // product state reduces to a pure state on either side
  Eigen::VectorXcd va(n_max + 1), vb(n_max + 1);
  for (int i = 0; i <= n_max; ++i) {
    va(i) = Cd(g(rng), g(rng));
    vb(i) = Cd(g(rng), g(rng));
  }
  va.normalize();
  vb.normalize();
  const Eigen::VectorXcd prod = tensor_state(va, vb);
  const Eigen::MatrixXcd rho_a = reduced_density_a(prod, n_max);
  CHECK(std::abs(rho_a.trace().real() - 1.0) < 1e-12);
  CHECK(vn_entropy(rho_a) < 1e-10);

  // maximally mixed pair across |01> and |10>
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero((n_max + 1) * (n_max + 1));
  bell(0 * (n_max + 1) + 1) = 1.0 / std::sqrt(2.0);
  bell(1 * (n_max + 1) + 0) = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(vn_entropy(reduced_density_a(bell, n_max)) - kLn2) < 1e-12);

  // both reductions of any pure state carry the same entropy
  Eigen::VectorXcd psi((n_max + 1) * (n_max + 1));
  for (int i = 0; i < psi.size(); ++i) psi(i) = Cd(g(rng), g(rng));
  psi.normalize();
  CHECK(std::abs(vn_entropy(reduced_density_a(psi, n_max)) -
                 vn_entropy(reduced_density_b(psi, n_max))) < 1e-9);

  // trace follows the squared norm for unnormalized input
  CHECK(std::abs(reduced_density_a(2.0 * prod, n_max).trace().real() - 4.0) < 1e-12);

  CHECK_THROWS_AS(reduced_density_a(Eigen::VectorXcd::Zero(5), n_max), std::invalid_argument);
}

TEST_CASE("entropy of density matrices") {
  Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(2, 2);
  pure(0, 0) = 1.0;
  CHECK(vn_entropy(pure) == 0.0);

  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(2, 2);
  mixed(0, 0) = 0.5;
  mixed(1, 1) = 0.5;
  CHECK(std::abs(vn_entropy(mixed) - kLn2) < 1e-12);

  // truncated geometric state carrying delta = 3
  const int n_top = 60;
  Eigen::MatrixXcd geo = Eigen::MatrixXcd::Zero(n_top + 1, n_top + 1);
  double w = 1.0, total = 0.0;
  for (int n = 0; n <= n_top; ++n, w *= 0.5) total += w;
  w = 1.0;
  for (int n = 0; n <= n_top; ++n, w *= 0.5) geo(n, n) = w / total;
  CHECK(std::abs(vn_entropy(geo) - kTwoLn2) < 1e-9);

  // tolerated numerical dust vs. genuine negativity
  Eigen::MatrixXcd dust = Eigen::MatrixXcd::Zero(2, 2);
  dust(0, 0) = 1.0;
  dust(1, 1) = -1e-15;
  CHECK(vn_entropy(dust) < 1e-12);
  Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
  neg(0, 0) = 1.000001;
  neg(1, 1) = -1e-6;
  CHECK_THROWS_AS(vn_entropy(neg), std::domain_error);

  Eigen::MatrixXcd nonherm = Eigen::MatrixXcd::Zero(2, 2);
  nonherm(0, 1) = 0.5;
  CHECK_THROWS_AS(vn_entropy(nonherm), std::invalid_argument);
}

TEST_CASE("oracle entanglement at the balanced optimum") {
  const OracleResult r = oracle_entanglement(SqueezingParam(0.5, 0.0), SqueezingParam(0.5, 0.0),
                                             BeamSplitterParams(0.25 * kPi, 0.0, 0.5 * kPi), 40);
  CHECK(r.truncation_budget < 1e-12);
  CHECK(std::abs(r.entropy_nats - kEntropyAtCosh1) < 1e-6);
}

TEST_CASE("oracle entanglement with no squeezing") {
  const OracleResult r = oracle_entanglement(SqueezingParam(0.0, 0.0), SqueezingParam(0.0, 0.0),
                                             BeamSplitterParams(0.9, 1.0, 2.0), 6);
  CHECK(r.truncation_budget == 0.0);
  CHECK(r.entropy_nats < 1e-12);
}

TEST_CASE("oracle propagates the truncation guard") {
  CHECK_THROWS_AS(oracle_entanglement(SqueezingParam(0.8, 0.0), SqueezingParam(0.8, 0.0),
                                      BeamSplitterParams(0.25 * kPi, 0.0, 0.0), 12),
                  TruncationError);
}

TEST_CASE("oracle converges in the cutoff") {
  const SqueezingParam z(0.5, 0.0);
  const BeamSplitterParams bs(0.25 * kPi, 0.0, 0.5 * kPi);
  const double e40 = oracle_entanglement(z, z, bs, 40).entropy_nats;
  const double e50 = oracle_entanglement(z, z, bs, 50).entropy_nats;
  CHECK(std::abs(e50 - e40) < 1e-5);
}

TEST_CASE("displacement expectation against the characteristic function") {
  const int n_max = 50;
  const SqueezingParam za(0.4, 1.1), zb(0.55, 5.0);
  const Eigen::VectorXcd psi =
      tensor_state(squeeze_vacuum_fock(za, n_max), squeeze_vacuum_fock(zb, n_max));
  CHECK(std::abs(displacement_expectation(psi, n_max, {0.0, 0.0}, {0.0, 0.0}) - Cd(1.0, 0.0)) <
        1e-12);

  const GaussianState st = input_state(za, zb);
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 12; ++i) {
    const Cd xa(u(rng), u(rng)), xb(u(rng), u(rng));
    const Cd got = displacement_expectation(psi, n_max, xa, xb);
    // the covariance quadratic form pairs each mode's second component with
    // the negative imaginary part of the displacement argument, so the
    // matching phase-space point is the conjugate
    const double expect = char_fn_eval(st, {std::conj(xa), std::conj(xb)});
    CHECK(std::abs(got - Cd(expect, 0.0)) < 1e-6);
  }
}

TEST_CASE("displacement expectation after the splitter") {
  const int n_max = 24;
  const SqueezingParam za(0.35, 0.6), zb(0.35, 4.1);
  const BeamSplitterParams bs(0.9, 0.7, 2.3);
  Eigen::VectorXcd psi =
      tensor_state(squeeze_vacuum_fock(za, n_max), squeeze_vacuum_fock(zb, n_max));
  // drop the weight beyond the total-number truncation, as the oracle does
  for (int na = 0; na <= n_max; ++na)
    for (int nb = 0; nb <= n_max; ++nb)
      if (na + nb > n_max) psi(na * (n_max + 1) + nb) = 0.0;
  psi.normalize();
  const Eigen::VectorXcd out = bs_unitary_fock(bs, n_max) * psi;

  const GaussianState st =
      apply_transform(input_state(za, zb), beam_splitter_symplectic(bs));
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int i = 0; i < 6; ++i) {
    const Cd xa(u(rng), u(rng)), xb(u(rng), u(rng));
    const Cd got = displacement_expectation(out, n_max, xa, xb);
    // conjugate points for the same reason as the pre-splitter check
    const double expect = char_fn_eval(st, {std::conj(xa), std::conj(xb)});
    CHECK(std::abs(got - Cd(expect, 0.0)) < 1e-6);
  }
}

TEST_CASE("cutoff heuristic") {
  CHECK(cutoff_meets_heuristic(40, 0.8));
  CHECK_FALSE(cutoff_meets_heuristic(12, 0.8));
  CHECK(cutoff_meets_heuristic(9, 0.0));
  CHECK_FALSE(cutoff_meets_heuristic(8, 0.0));
}

TEST_CASE("fock input validation") {
  CHECK_THROWS_AS(lower_op(0), std::invalid_argument);
  CHECK_THROWS_AS(lower_op(200), std::invalid_argument);
  CHECK_THROWS_AS(squeeze_vacuum_fock(SqueezingParam(0.1, 0.0), -3), std::invalid_argument);
}
