#include <armlqr/lqr.hpp>

#include <armlqr/error.hpp>
#include <armlqr/lyapunov.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace armlqr {

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXd stabilizing_seed(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::Index n = a.rows();
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  const double min_real = es.eigenvalues().real().minCoeff();
  if (es.eigenvalues().real().maxCoeff() < 0.0) return Eigen::MatrixXd::Zero(b.cols(), n);

  const double beta = std::max(0.0, -min_real) + 1.0;
  const Eigen::MatrixXd shifted = a + beta * Eigen::MatrixXd::Identity(n, n);
  // (A + beta I) Z + Z (A + beta I)^T = 2 B B^T
  const Eigen::MatrixXd z = solve_lyapunov(shifted.transpose(), -2.0 * b * b.transpose());
  Eigen::LDLT<Eigen::MatrixXd> ldlt(z);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive() || ldlt.vectorD().minCoeff() <= 0.0) {
    throw Error(ErrorCode::NoStabilizingSolution, "(A, B) is not controllable; no stabilizing seed gain");
  }
  return ldlt.solve(b).transpose();
}

}  // namespace

LqrWeights default_weights() {
  LqrWeights w;
  w.Q = Vec6(1e4, 1e4, 1e4, 800.0, 500.0, 500.0).asDiagonal();
  w.R = Mat3::Identity();
  return w;
}

void validate_weights(const LqrWeights& w) {
  if (!w.Q.allFinite() || !w.R.allFinite()) throw Error(ErrorCode::InvalidArgument, "weights must be finite");
  if ((w.Q - w.Q.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "Q must be symmetric");
  }
  if ((w.R - w.R.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "R must be symmetric");
  }
  const double q_min = Eigen::SelfAdjointEigenSolver<Mat6>(w.Q, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  if (q_min < -1e-12 * std::max(1.0, max_abs(w.Q))) {
    throw Error(ErrorCode::InvalidArgument, "Q must be positive semidefinite (min eigenvalue " + std::to_string(q_min) + ")");
  }
  const double r_min = Eigen::SelfAdjointEigenSolver<Mat3>(w.R, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  if (!(r_min > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "R must be positive definite (min eigenvalue " + std::to_string(r_min) + ")");
  }
}

double are_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& q,
                    const Eigen::MatrixXd& r, const Eigen::MatrixXd& s) {
  const Eigen::MatrixXd r_inv_bt = r.ldlt().solve(b.transpose());
  const Eigen::MatrixXd res = a.transpose() * s + s * a - s * b * r_inv_bt * s + q;
  const double q_scale = max_abs(q);
  return q_scale > 0.0 ? max_abs(res) / q_scale : max_abs(res);
}

AreSolution solve_are(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& q,
                      const Eigen::MatrixXd& r, const AreOptions& options) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n || q.rows() != n || q.cols() != n || r.rows() != b.cols() ||
      r.cols() != b.cols()) {
    throw Error(ErrorCode::InvalidArgument, "solve_are: dimension mismatch");
  }
  const auto r_ldlt = r.ldlt();
  if (r_ldlt.info() != Eigen::Success || !r_ldlt.isPositive()) {
    throw Error(ErrorCode::InvalidArgument, "solve_are: R must be positive definite");
  }
  const Eigen::MatrixXd r_inv_bt = r_ldlt.solve(b.transpose());

  Eigen::MatrixXd k = stabilizing_seed(a, b);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  int iter = 0;
  bool converged = false;
  while (iter < options.max_iterations) {
    ++iter;
    const Eigen::MatrixXd closed = a - b * k;
    const Eigen::MatrixXd s_next = solve_lyapunov(closed, q + k.transpose() * r * k);
    const double change = max_abs(s_next - s);
    s = s_next;
    k = r_inv_bt * s;
    if (!s.allFinite()) break;
    if (change <= options.tolerance * std::max(1.0, max_abs(s))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoStabilizingSolution,
                "Newton-Kleinman iteration did not converge in " + std::to_string(iter) + " steps");
  }
  if (spectral_abscissa(a - b * k) >= 0.0) {
    throw Error(ErrorCode::NoStabilizingSolution, "Riccati solution does not stabilize the closed loop");
  }
  return {s, k, iter, are_residual(a, b, q, r, s)};
}

Mat6 solve_are(const Mat6& a, const Mat63& b, const LqrWeights& w, const AreOptions& options) {
  return solve_are(Eigen::MatrixXd(a), Eigen::MatrixXd(b), Eigen::MatrixXd(w.Q), Eigen::MatrixXd(w.R), options).S;
}

LqrGain lqr_gain(const StateSpaceModel& model, const LqrWeights& w, const AreOptions& options) {
  validate_weights(w);
  const auto sol = solve_are(Eigen::MatrixXd(model.A), Eigen::MatrixXd(model.B), Eigen::MatrixXd(w.Q),
                             Eigen::MatrixXd(w.R), options);
  LqrGain gain;
  gain.S = sol.S;
  gain.K = sol.K;
  gain.residual = sol.residual;
  gain.iterations = sol.iterations;
  gain.closed_loop_poles = Eigen::EigenSolver<Mat6>(model.A - model.B * gain.K, false).eigenvalues();
  return gain;
}

TorqueCommand lqr_control(const LqrGain& gain, const JointState& state, const JointState& reference,
                          const TorqueCommand& feedforward) {
  return {feedforward.tau - gain.K * (state.stacked() - reference.stacked())};
}

double quadratic_cost(std::span<const CostSample> trajectory, const LqrWeights& w) {
  if (trajectory.empty()) throw Error(ErrorCode::InvalidArgument, "quadratic_cost: empty trajectory");
  double j = 0.0;
  for (const auto& sample : trajectory) {
    j += (sample.state_error.dot(w.Q * sample.state_error) + sample.torque_delta.dot(w.R * sample.torque_delta)) *
         sample.dt;
  }
  return j;
}

}  // namespace armlqr
