#pragma once

#include <armlqr/linearize.hpp>
#include <armlqr/model.hpp>
#include <armlqr/types.hpp>

#include <Eigen/Core>

#include <complex>
#include <span>

namespace armlqr {

/// State and input weights of the quadratic cost.
struct LqrWeights {
  Mat6 Q = Mat6::Identity();
  Mat3 R = Mat3::Identity();
};

/// Q = diag(1e4, 1e4, 1e4, 800, 500, 500), R = I.
LqrWeights default_weights();

/// Throws Error{InvalidArgument} unless Q is symmetric PSD and R symmetric PD.
void validate_weights(const LqrWeights& w);

struct AreOptions {
  int max_iterations = 10000;
  double tolerance = 1e-13;  // relative change in S between Newton steps
};

/// Stabilizing solution of the continuous ARE and the associated gain.
struct AreSolution {
  Eigen::MatrixXd S;
  Eigen::MatrixXd K;
  int iterations = 0;
  double residual = 0.0;  // scaled max-norm, see are_residual
};

/// ||A^T S + S A - S B R^-1 B^T S + Q||_max / max(||Q||_max, 1e-300), or the
/// unscaled norm when Q = 0.
double are_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& q,
                    const Eigen::MatrixXd& r, const Eigen::MatrixXd& s);

/// Newton-Kleinman iteration on A^T S + S A - S B R^-1 B^T S + Q = 0.
///
/// The iteration starts from K = 0 when A is already Hurwitz. Otherwise the
/// seed comes from a shifted Lyapunov solve: with beta > -min Re(lambda(A)),
/// (A + beta I) Z + Z (A + beta I)^T = 2 B B^T gives K0 = B^T Z^-1, which puts
/// every closed-loop eigenvalue on Re = -beta. Each Newton step solves one
/// Lyapunov equation with solve_lyapunov.
///
/// Throws Error{NoStabilizingSolution} if the seed cannot be built, the
/// iteration does not converge, or the final closed loop is not Hurwitz.
AreSolution solve_are(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& q,
                      const Eigen::MatrixXd& r, const AreOptions& options = {});

Mat6 solve_are(const Mat6& a, const Mat63& b, const LqrWeights& w, const AreOptions& options = {});

/// Full-state feedback gain K = R^-1 B^T S with its ARE solution.
struct LqrGain {
  Mat36 K = Mat36::Zero();
  Mat6 S = Mat6::Zero();
  Eigen::Matrix<std::complex<double>, 6, 1> closed_loop_poles;
  double residual = 0.0;
  int iterations = 0;
};

LqrGain lqr_gain(const StateSpaceModel& model, const LqrWeights& w, const AreOptions& options = {});

/// tau = feedforward - K (x - x_ref) with x = (theta, omega).
TorqueCommand lqr_control(const LqrGain& gain, const JointState& state, const JointState& reference,
                          const TorqueCommand& feedforward);

/// One rectangle of the running cost.
struct CostSample {
  Vec6 state_error = Vec6::Zero();
  Vec3 torque_delta = Vec3::Zero();
  double dt = 0.0;
};

/// J = sum (x^T Q x + u^T R u) dt. Throws Error{InvalidArgument} on an empty
/// trajectory.
double quadratic_cost(std::span<const CostSample> trajectory, const LqrWeights& w);

}  // namespace armlqr
