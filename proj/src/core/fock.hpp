#ifndef BSENT_CORE_FOCK_HPP
#define BSENT_CORE_FOCK_HPP

// Truncated Fock-space oracle: builds the squeezed inputs and the
// beam-splitter unitary by direct matrix methods and computes the output
// entanglement entropy with no reference to the Gaussian closed forms.
// Two-mode vectors use index na*(n_max+1) + nb.

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "core/params.hpp"

namespace bsent {

// Signalled when a truncated expansion drops more than the allowed weight.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(double budget)
      : std::runtime_error("truncation budget exceeded"), budget_(budget) {}
  double budget() const { return budget_; }

 private:
  double budget_;
};

struct OracleResult {
  double entropy_nats = 0.0;
  double truncation_budget = 0.0;  // probability weight lost to the cutoff
};

// Single-mode annihilation operator on {|0>, ..., |n_max>}.
Eigen::MatrixXd lower_op(int n_max);

// Squeezed-vacuum amplitudes c_0..c_{n_max} from the even recurrence
// c_{2n+2}/c_{2n} = -e^{i chi} tanh(r) sqrt((2n+1)(2n+2)) / (2(n+1)),
// c_0 = 1/sqrt(cosh r). Throws TruncationError if 1 - ||c||^2 > 1e-6.
Eigen::VectorXcd squeeze_vacuum_fock(const SqueezingParam& z, int n_max);

// Two-mode beam-splitter unitary: diagonal phase rotations around
// exp(theta (a^dag b - a b^dag)), with the mixing generator exponentiated
// densely (scaling and squaring). Exactly number-conserving.
Eigen::MatrixXcd bs_unitary_fock(const BeamSplitterParams& bs, int n_max);

// Partial traces of a (possibly unnormalized) two-mode pure state.
Eigen::MatrixXcd reduced_density_a(const Eigen::VectorXcd& psi, int n_max);
Eigen::MatrixXcd reduced_density_b(const Eigen::VectorXcd& psi, int n_max);

// von Neumann entropy -sum lambda ln lambda in nats. Eigenvalues below
// -1e-8 are a domain error; those at or below 1e-14 are dropped.
double vn_entropy(const Eigen::MatrixXcd& rho);

// Full oracle: squeezed amplitudes -> tensor product projected onto total
// photon number <= n_max (lost weight is the reported budget) -> renormalize
// -> beam splitter -> reduced mode a -> entropy.
OracleResult oracle_entanglement(const SqueezingParam& za, const SqueezingParam& zb,
                                 const BeamSplitterParams& bs, int n_max);

// <psi| D(xi_a) x D(xi_b) |psi> with each single-mode displacement built as a
// truncated matrix exponential of xi a^dag - conj(xi) a. The tensor-product
// split is exact for the untruncated operator and keeps edge artifacts to the
// single-mode level.
std::complex<double> displacement_expectation(const Eigen::VectorXcd& psi, int n_max,
                                              std::complex<double> xi_a,
                                              std::complex<double> xi_b);

// Mean photon number of a single-mode state (normalizes internally).
double mean_photon(const Eigen::VectorXcd& c);

// 2x2 matrix of symmetrized quadrature second moments <{q_i, q_j}> for a
// single-mode state, in the convention where the vacuum gives the identity.
Eigen::Matrix2d quadrature_covariance(const Eigen::VectorXcd& c);

// True when the cutoff comfortably covers the photon-number distribution:
// n_max + 1 >= 4 sinh^2(r_max) + 10.
bool cutoff_meets_heuristic(int n_max, double r_max);

}  // namespace bsent

#endif
