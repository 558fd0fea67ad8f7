#include <armlqr/lyapunov.hpp>

#include <armlqr/error.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace armlqr {

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || c.rows() != n || c.cols() != n) {
    throw Error(ErrorCode::InvalidArgument, "solve_lyapunov: dimension mismatch");
  }
  const Eigen::MatrixXd at = a.transpose();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  const Eigen::Index nn = n * n;

  // Column-major vec: vec(A^T X) = (I (x) A^T) vec(X), vec(X A) = (A^T (x) I) vec(X).
  Eigen::MatrixXd kron = Eigen::MatrixXd::Zero(nn, nn);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      kron.block(i * n, j * n, n, n) = eye(i, j) * at + at(i, j) * eye;
    }
  }

  Eigen::FullPivLU<Eigen::MatrixXd> lu(kron);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::NoStabilizingSolution, "Lyapunov operator is singular");
  }
  const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(c.data(), nn);
  Eigen::VectorXd vec_x = lu.solve(rhs);
  Eigen::MatrixXd x = Eigen::Map<Eigen::MatrixXd>(vec_x.data(), n, n);
  if (c.isApprox(c.transpose())) x = 0.5 * (x + x.transpose()).eval();
  return x;
}

double spectral_abscissa(const Eigen::MatrixXd& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  return es.eigenvalues().real().maxCoeff();
}

}  // namespace armlqr
