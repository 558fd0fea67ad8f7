#pragma once

#include <Eigen/Core>

namespace armlqr {

/// Solves the continuous Lyapunov equation A^T X + X A + C = 0 through its
/// Kronecker form (I (x) A^T + A^T (x) I) vec(X) = -vec(C).
///
/// Intended for small n (the n^2 x n^2 system is solved densely). Throws
/// Error{NoStabilizingSolution} if the Kronecker operator is singular, i.e.
/// A has eigenvalues lambda_i + lambda_j = 0.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c);

/// Largest real part among the eigenvalues of `a`.
double spectral_abscissa(const Eigen::MatrixXd& a);

}  // namespace armlqr
