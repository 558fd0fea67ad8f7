#include <armlqr/metrics.hpp>

#include <armlqr/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace armlqr {

namespace {

// Time at which |err| re-enters the band after sample k (outside) and before
// sample k + 1 (inside).
double entry_time(double t0, double t1, double e0, double e1, double tol) {
  const double edge = e0 > 0.0 ? tol : -tol;
  const double span = e1 - e0;
  if (span == 0.0) return t1;
  const double frac = std::clamp((edge - e0) / span, 0.0, 1.0);
  return t0 + frac * (t1 - t0);
}

}  // namespace

ResponseMetrics compute_metrics(std::span<const double> times, std::span<const JointState> states,
                                const JointState& reference, double band) {
  if (times.empty() || times.size() != states.size()) {
    throw Error(ErrorCode::InvalidArgument, "compute_metrics: empty or mismatched trajectory");
  }
  if (!(band > 0.0)) throw Error(ErrorCode::InvalidArgument, "compute_metrics: band must be positive");

  ResponseMetrics m;
  const std::size_t n = states.size();
  for (int j = 0; j < 3; ++j) {
    const double target = reference.theta[j];
    const double step = target - states.front().theta[j];
    m.zero_step[j] = std::abs(step) < 1e-12;
    const double tol = m.zero_step[j] ? kZeroStepTolerance : band * std::abs(step);

    std::size_t last_outside = n;
    for (std::size_t i = n; i-- > 0;) {
      if (std::abs(states[i].theta[j] - target) > tol) {
        last_outside = i;
        break;
      }
    }
    m.settled[j] = last_outside != n - 1;
    if (last_outside == n) {
      m.settling_time[j] = 0.0;
    } else if (!m.settled[j]) {
      m.settling_time[j] = std::numeric_limits<double>::infinity();
    } else {
      const std::size_t k = last_outside;
      m.settling_time[j] = entry_time(times[k], times[k + 1], states[k].theta[j] - target,
                                      states[k + 1].theta[j] - target, tol) -
                           times.front();
    }

    double excursion = 0.0;
    double peak = 0.0;
    for (const auto& s : states) {
      if (!m.zero_step[j]) excursion = std::max(excursion, (s.theta[j] - target) * (step > 0.0 ? 1.0 : -1.0));
      peak = std::max(peak, std::abs(s.omega[j]));
    }
    m.overshoot_pct[j] = m.zero_step[j] ? 0.0 : 100.0 * excursion / std::abs(step);
    m.peak_velocity[j] = peak;
    m.steady_state_error[j] = std::abs(states.back().theta[j] - target);
  }
  return m;
}

}  // namespace armlqr
