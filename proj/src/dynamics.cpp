#include "ptq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "ptq/error.hpp"
#include "ptq/sensing.hpp"

namespace ptq {

StateVector4 initial_state(const InitialStateSpec& spec) {
  return StateVector4(std::sin(spec.theta_init), 0.0, std::cos(spec.theta_init), 0.0);
}

namespace {

void record(Trajectory& traj, double t, const StateVector4& psi, double norm_log, bool store_states) {
  traj.times.push_back(t);
  if (store_states) traj.states.push_back(psi);
  traj.norm_log.push_back(norm_log);
  traj.concurrence.push_back(concurrence_pure(psi));
  traj.coherence_x.push_back(coherence_expectation(psi));
}

}  // namespace

Trajectory propagate(const SystemParams& params, const StateVector4& psi0, double t_max, double dt,
                     const PropagateOptions& options) {
  if (!(dt > 0.0) || !(t_max >= dt) || !std::isfinite(t_max))
    throw Error(ErrorCode::InvalidArgument, "need dt > 0 and t_max >= dt");
  if (options.record_every == 0) throw Error(ErrorCode::InvalidArgument, "record_every must be positive");
  if (std::abs(psi0.norm() - 1.0) > 1e-10) throw Error(ErrorCode::NotNormalized, "initial state is not unit norm");

  // dpsi/dt = A psi with A = -iH
  const ComplexMatrix4 h = build_hamiltonian(params);
  if (dt * max_row_sum(h) > 0.1)
    throw Error(ErrorCode::StepTooLarge, "dt * |H| = " + std::to_string(dt * max_row_sum(h)) + " > 0.1");
  const ComplexMatrix4 a = -kI * h;

  const auto steps = static_cast<std::size_t>(std::llround(t_max / dt));
  Trajectory traj;
  const std::size_t expected = steps / options.record_every + 2;
  traj.times.reserve(expected);
  traj.norm_log.reserve(expected);
  traj.concurrence.reserve(expected);
  traj.coherence_x.reserve(expected);
  if (options.store_states) traj.states.reserve(expected);

  StateVector4 psi = psi0;
  double norm_log = 0.0;
  record(traj, 0.0, psi, norm_log, options.store_states);

  for (std::size_t step = 1; step <= steps; ++step) {
    const StateVector4 k1 = a * psi;
    const StateVector4 k2 = a * (psi + 0.5 * dt * k1);
    const StateVector4 k3 = a * (psi + 0.5 * dt * k2);
    const StateVector4 k4 = a * (psi + dt * k3);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double norm = psi.norm();
    if (!std::isfinite(norm) || norm == 0.0)
      throw Error(ErrorCode::NonFinite, "state left the finite range at step " + std::to_string(step));
    psi /= norm;
    norm_log += std::log(norm);

    if (step % options.record_every == 0 || step == steps)
      record(traj, static_cast<double>(step) * dt, psi, norm_log, options.store_states);
  }
  return traj;
}

ExactState propagate_exact(const SystemParams& params, const StateVector4& psi0, double t) {
  Eigen::ComplexEigenSolver<ComplexMatrix4> solver(build_hamiltonian(params));
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "eigensolver failed");
  const ComplexMatrix4& v = solver.eigenvectors();
  const StateVector4 coeffs = v.partialPivLu().solve(psi0);
  StateVector4 phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::exp(-kI * solver.eigenvalues()(k) * t);
  const StateVector4 psi = v * phases.cwiseProduct(coeffs);
  const double norm = psi.norm();
  return {psi / norm, std::log(norm)};
}

std::optional<SteadyState> detect_steady_state(const Trajectory& traj, double window, double tol) {
  const auto& t = traj.times;
  const auto& c = traj.concurrence;
  const std::size_t n = t.size();
  if (n < 2 || !(window > 0.0) || window >= t.back() - t.front())
    throw Error(ErrorCode::InvalidArgument, "window must be positive and shorter than the trajectory");

  // Sweep window starts s with a two-pointer end e (last sample with
  // t <= t_s + window) and monotone deques for the running min and max.
  std::deque<std::size_t> maxq;
  std::deque<std::size_t> minq;
  std::size_t end = 0;
  std::optional<std::size_t> last_bad;
  std::size_t last_start = 0;
  for (std::size_t s = 0; s < n && t[s] + window <= t.back(); ++s) {
    while (end < n && t[end] <= t[s] + window) {
      while (!maxq.empty() && c[maxq.back()] <= c[end]) maxq.pop_back();
      maxq.push_back(end);
      while (!minq.empty() && c[minq.back()] >= c[end]) minq.pop_back();
      minq.push_back(end);
      ++end;
    }
    while (maxq.front() < s) maxq.pop_front();
    while (minq.front() < s) minq.pop_front();
    if (c[maxq.front()] - c[minq.front()] >= tol) last_bad = s;
    last_start = s;
  }
  const std::size_t first_good = last_bad ? *last_bad + 1 : 0;
  if (first_good > last_start) return std::nullopt;

  double sum = 0.0;
  for (std::size_t k = first_good; k < n; ++k) sum += c[k];
  return SteadyState{t[first_good], sum / static_cast<double>(n - first_good)};
}

std::vector<double> sliding_max(const std::vector<double>& times, const std::vector<double>& values,
                                double half_width) {
  const std::size_t n = times.size();
  std::vector<double> out(n);
  std::deque<std::size_t> q;
  std::size_t hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (hi < n && times[hi] <= times[i] + half_width) {
      while (!q.empty() && values[q.back()] <= values[hi]) q.pop_back();
      q.push_back(hi);
      ++hi;
    }
    while (times[q.front()] < times[i] - half_width) q.pop_front();
    out[i] = values[q.front()];
  }
  return out;
}

std::vector<double> detect_revivals(const Trajectory& traj, double envelope_window, double collapse_fraction) {
  std::vector<double> revivals;
  const auto& t = traj.times;
  const auto& c = traj.concurrence;
  const std::size_t n = t.size();
  if (n < 3 || !(envelope_window > 0.0)) return revivals;

  std::vector<double> magnitude(n);
  for (std::size_t i = 0; i < n; ++i) magnitude[i] = std::abs(c[i]);
  const std::vector<double> env = sliding_max(t, magnitude, 0.5 * envelope_window);

  double trough = env[0];
  std::size_t i = 0;
  while (i < n) {
    // a run of equal envelope values is one plateau
    std::size_t j = i;
    while (j + 1 < n && env[j + 1] == env[i]) ++j;
    const bool interior = i > 0 && j + 1 < n;
    const bool is_peak = interior && env[i - 1] < env[i] && env[j + 1] < env[i];
    if (is_peak && env[i] - trough >= collapse_fraction * env[i]) {
      std::size_t best = i;
      for (std::size_t k = i; k <= j; ++k)
        if (magnitude[k] > magnitude[best]) best = k;
      // the peak sample sits inside the plateau's window
      const double lo = t[i] - 0.5 * envelope_window;
      const double hi = t[j] + 0.5 * envelope_window;
      const auto first = std::lower_bound(t.begin(), t.end(), lo) - t.begin();
      const auto last = std::upper_bound(t.begin(), t.end(), hi) - t.begin();
      for (auto k = first; k < last; ++k)
        if (magnitude[k] > magnitude[best]) best = static_cast<std::size_t>(k);
      revivals.push_back(t[best]);
      trough = env[i];
    } else {
      trough = std::min(trough, env[i]);
    }
    i = j + 1;
  }
  return revivals;
}

ComplexMatrix4 passive_pt_map(const ComplexMatrix4& rho_eff, double gamma, double t) {
  if (t < 0.0 || gamma < 0.0) throw Error(ErrorCode::InvalidArgument, "passive mapping needs t >= 0 and gamma >= 0");
  return std::exp(2.0 * gamma * t) * rho_eff;
}

}  // namespace ptq
