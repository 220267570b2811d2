#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ptq/entanglement.hpp"
#include "ptq/model.hpp"

namespace ptq {

struct InitialStateSpec {
  double theta_init = 0.0;  // radians
};

/// (sin theta |0> + cos theta |1>) (x) |0>
StateVector4 initial_state(const InitialStateSpec& spec);

/// Normalized trajectory psi(t) = e^{-iHt} psi0 / |e^{-iHt} psi0|.
/// norm_log[k] is log |e^{-iHt_k} psi0|. states is empty when the run was
/// made without state storage; every other column has one entry per sample.
struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector4> states;
  std::vector<double> norm_log;
  std::vector<double> concurrence;
  std::vector<double> coherence_x;

  std::size_t size() const { return times.size(); }
};

struct PropagateOptions {
  std::size_t record_every = 1;  // keep every k-th step (the last step is always kept)
  bool store_states = true;
};

/// Fixed-step RK4 with per-step renormalization. Throws StepTooLarge when
/// dt * max_row_sum(H) > 0.1 and NonFinite if the state blows up.
Trajectory propagate(const SystemParams& params, const StateVector4& psi0, double t_max, double dt,
                     const PropagateOptions& options = {});

struct ExactState {
  StateVector4 state;  // normalized
  double norm_log = 0.0;
};

/// psi(t) from the eigendecomposition V e^{-i Lambda t} V^{-1} psi0. Only
/// meaningful away from exceptional points.
ExactState propagate_exact(const SystemParams& params, const StateVector4& psi0, double t);

struct SteadyState {
  double t_ss = 0.0;
  double c_ss = 0.0;  // mean concurrence from t_ss to the end
};

/// Earliest time after which the concurrence range over every window of
/// the given width stays below tol.
std::optional<SteadyState> detect_steady_state(const Trajectory& traj, double window, double tol);

/// Times of envelope maxima that follow a collapse. The envelope is a
/// centered sliding-window maximum of C(t); a maximum counts as a revival
/// when it rises above the lowest envelope value since the previous revival
/// (or the start) by at least collapse_fraction of its own height. The time
/// reported is that of the largest C(t) sample under the envelope peak.
std::vector<double> detect_revivals(const Trajectory& traj, double envelope_window, double collapse_fraction = 0.3);

/// Centered sliding-window maximum over samples within +-half_width.
std::vector<double> sliding_max(const std::vector<double>& times, const std::vector<double>& values,
                                double half_width);

/// rho_PT = e^{2 gamma t} rho_eff.
ComplexMatrix4 passive_pt_map(const ComplexMatrix4& rho_eff, double gamma, double t);

}  // namespace ptq
