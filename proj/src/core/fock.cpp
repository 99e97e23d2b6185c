#include "core/fock.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace bsent {

namespace {

constexpr double kSingleModeBudgetTol = 1e-6;
constexpr double kEigNegTol = 1e-8;
constexpr double kEigDropTol = 1e-14;

void check_cutoff(int n_max) {
  // upper bound keeps the dense exponential tractable
  if (n_max < 1 || n_max > 128) throw std::invalid_argument("cutoff must be in [1, 128]");
}

Eigen::MatrixXcd displacement_op(std::complex<double> xi, int n_max) {
  const Eigen::MatrixXd a = lower_op(n_max);
  Eigen::MatrixXcd x = xi * a.transpose().cast<std::complex<double>>() -
                       std::conj(xi) * a.cast<std::complex<double>>();
  return x.exp();
}

}  // namespace

Eigen::MatrixXd lower_op(int n_max) {
  check_cutoff(n_max);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Eigen::VectorXcd squeeze_vacuum_fock(const SqueezingParam& z, int n_max) {
  check_cutoff(n_max);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_max + 1);
  c(0) = 1.0 / std::sqrt(std::cosh(z.r()));
  const std::complex<double> f = -std::polar(std::tanh(z.r()), z.chi());
  for (int n = 0; 2 * n + 2 <= n_max; ++n)
    c(2 * n + 2) = c(2 * n) * f * std::sqrt(double(2 * n + 1) * double(2 * n + 2)) /
                   (2.0 * double(n + 1));
  const double budget = 1.0 - c.squaredNorm();
  if (budget > kSingleModeBudgetTol) throw TruncationError(budget);
  return c;
}

Eigen::MatrixXcd bs_unitary_fock(const BeamSplitterParams& bs, int n_max) {
  check_cutoff(n_max);
  const int d = n_max + 1;
  const int dim = d * d;
  auto idx = [d](int na, int nb) { return na * d + nb; };

  // real antisymmetric generator theta * (a^dag b - a b^dag), filled directly
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  for (int na = 0; na <= n_max; ++na) {
    for (int nb = 0; nb <= n_max; ++nb) {
      if (na + 1 <= n_max && nb - 1 >= 0)
        g(idx(na + 1, nb - 1), idx(na, nb)) = bs.theta() * std::sqrt(double(na + 1) * double(nb));
      if (na - 1 >= 0 && nb + 1 <= n_max)
        g(idx(na - 1, nb + 1), idx(na, nb)) = -bs.theta() * std::sqrt(double(na) * double(nb + 1));
    }
  }
  const Eigen::MatrixXd o = g.exp();

  // phase rotations supplying phi0 and phi1: U = P exp(g) Q with
  // P = exp(i(pa n_a + pb n_b)), Q = exp(i(qa n_a + qb n_b))
  const double pa = -0.5 * (bs.phi0() + bs.phi1());
  const double pb = -pa;
  const double qa = 0.5 * (bs.phi1() - bs.phi0());
  const double qb = -qa;
  Eigen::VectorXcd left(dim), right(dim);
  for (int na = 0; na <= n_max; ++na) {
    for (int nb = 0; nb <= n_max; ++nb) {
      left(idx(na, nb)) = std::polar(1.0, pa * na + pb * nb);
      right(idx(na, nb)) = std::polar(1.0, qa * na + qb * nb);
    }
  }
  return left.asDiagonal() * o.cast<std::complex<double>>() * right.asDiagonal();
}

Eigen::MatrixXcd reduced_density_a(const Eigen::VectorXcd& psi, int n_max) {
  check_cutoff(n_max);
  const int d = n_max + 1;
  if (psi.size() != d * d) throw std::invalid_argument("state size does not match cutoff");
  Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      m(psi.data(), d, d);
  return m * m.adjoint();
}

Eigen::MatrixXcd reduced_density_b(const Eigen::VectorXcd& psi, int n_max) {
  check_cutoff(n_max);
  const int d = n_max + 1;
  if (psi.size() != d * d) throw std::invalid_argument("state size does not match cutoff");
  Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      m(psi.data(), d, d);
  return m.transpose() * m.conjugate();
}

double vn_entropy(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("density matrix must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam < -kEigNegTol) throw std::domain_error("density matrix has a negative eigenvalue");
    if (lam <= kEigDropTol) continue;
    s -= lam * std::log(lam);
  }
  return s;
}

OracleResult oracle_entanglement(const SqueezingParam& za, const SqueezingParam& zb,
                                 const BeamSplitterParams& bs, int n_max) {
  check_cutoff(n_max);
  const int d = n_max + 1;
  const Eigen::VectorXcd ca = squeeze_vacuum_fock(za, n_max);
  const Eigen::VectorXcd cb = squeeze_vacuum_fock(zb, n_max);

  // tensor product restricted to total photon number <= n_max, so the
  // beam splitter (number-conserving) acts unitarily on the kept subspace
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
  for (int na = 0; na <= n_max; ++na)
    for (int nb = 0; na + nb <= n_max; ++nb) psi(na * d + nb) = ca(na) * cb(nb);
  const double kept = psi.squaredNorm();
  const double budget = 1.0 - kept;
  psi /= std::sqrt(kept);

  const Eigen::VectorXcd out = bs_unitary_fock(bs, n_max) * psi;
  return {vn_entropy(reduced_density_a(out, n_max)), budget};
}

std::complex<double> displacement_expectation(const Eigen::VectorXcd& psi, int n_max,
                                              std::complex<double> xi_a,
                                              std::complex<double> xi_b) {
  check_cutoff(n_max);
  const int d = n_max + 1;
  if (psi.size() != d * d) throw std::invalid_argument("state size does not match cutoff");
  const Eigen::MatrixXcd da = displacement_op(xi_a, n_max);
  const Eigen::MatrixXcd db = displacement_op(xi_b, n_max);
  Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      m(psi.data(), d, d);
  const Eigen::MatrixXcd moved = da * m * db.transpose();
  return (m.conjugate().cwiseProduct(moved)).sum();
}

double mean_photon(const Eigen::VectorXcd& c) {
  double num = 0.0, den = 0.0;
  for (int n = 0; n < c.size(); ++n) {
    const double w = std::norm(c(n));
    num += n * w;
    den += w;
  }
  if (den <= 0.0) throw std::invalid_argument("state has zero norm");
  return num / den;
}

Eigen::Matrix2d quadrature_covariance(const Eigen::VectorXcd& c) {
  const int n_max = int(c.size()) - 1;
  const Eigen::MatrixXcd a = lower_op(n_max).cast<std::complex<double>>();
  const Eigen::MatrixXcd ad = a.adjoint();
  const std::complex<double> i1(0.0, 1.0);
  const double rt = 1.0 / std::sqrt(2.0);
  const Eigen::MatrixXcd q1 = i1 * rt * (ad - a);
  const Eigen::MatrixXcd q2 = rt * (a + ad);
  const Eigen::VectorXcd cn = c / c.norm();
  auto sym = [&](const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
    return (cn.adjoint() * (u * v + v * u) * cn)(0).real();
  };
  Eigen::Matrix2d m;
  m << sym(q1, q1), sym(q1, q2), sym(q1, q2), sym(q2, q2);
  return m;
}

bool cutoff_meets_heuristic(int n_max, double r_max) {
  const double sh = std::sinh(r_max);
  return n_max + 1 >= 4.0 * sh * sh + 10.0;
}

}  // namespace bsent
