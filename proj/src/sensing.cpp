#include "ptq/sensing.hpp"

#include <cmath>

namespace ptq {

namespace {

constexpr int kMaxHalvings = 4;

bool agree(double a, double b) { return std::abs(a - b) <= 1e-3 * std::max(std::abs(a), std::abs(b)) + 1e-10; }

void check_stencil(const SystemParams& params, Kappa kappa, double h) {
  const PhaseLabel here = classify_phase(params);
  if (here.pair_gap < 10.0 * h)
    throw Error(ErrorCode::EpTooClose, "|E3 - E4| = " + std::to_string(here.pair_gap) + " < 10 h");
  const double x = kappa_value(params, kappa);
  const bool broken = here.phase == Phase::PTBroken;
  for (double side : {-1.0, 1.0}) {
    const PhaseLabel p = classify_phase(with_kappa(params, kappa, x + side * h));
    if ((p.phase == Phase::PTBroken) != broken || p.pair_gap < 10.0 * h * 0.5)
      throw Error(ErrorCode::EpTooClose, "difference stencil crosses the exceptional point");
  }
}

double qfi_at_step(const StateFamily& family, double x, double h) {
  // Align the neighbours to the centre state so a jump in the caller's
  // phase convention cannot leak into the difference quotient.
  const StateVector4 psi = family(x);
  const auto aligned = [&](double at) {
    const StateVector4 v = family(at);
    const Complex overlap = v.dot(psi);
    return StateVector4(std::abs(overlap) > 0.0 ? StateVector4(v * (overlap / std::abs(overlap))) : v);
  };
  const StateVector4 d = (aligned(x + h) - aligned(x - h)) / (2.0 * h);
  return 4.0 * (d.squaredNorm() - std::norm(psi.dot(d)));
}

template <class F>
double richardson_guarded(F&& estimate, double h, const char* what) {
  double coarse = estimate(h);
  for (int k = 0; k < kMaxHalvings; ++k) {
    h *= 0.5;
    const double fine = estimate(h);
    if (agree(coarse, fine)) return fine;
    coarse = fine;
  }
  throw Error(ErrorCode::NoDerivativeConvergence, what);
}

}  // namespace

std::string_view to_string(Kappa kappa) { return kappa == Kappa::J ? "J" : "Omega"; }

SystemParams with_kappa(SystemParams params, Kappa kappa, double value) {
  (kappa == Kappa::J ? params.j : params.omega) = value;
  return params;
}

double kappa_value(const SystemParams& params, Kappa kappa) {
  return kappa == Kappa::J ? params.j : params.omega;
}

double coherence_expectation(const StateVector4& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw Error(ErrorCode::NotNormalized, "state is not unit norm");
  const Complex value = psi.dot(coherence_operator() * psi);
  return value.real();
}

StateVector4 sensing_state(const SystemParams& params) { return solve_spectrum(params).eigenvectors[2]; }

double qfi_of_family(const StateFamily& family, double x, double h) {
  return richardson_guarded([&](double step) { return qfi_at_step(family, x, step); }, h,
                            "QFI finite differences did not settle");
}

double qfi(const SystemParams& params, Kappa kappa, double h) {
  if (std::abs(params.omega) <= 1e-12) throw Error(ErrorCode::OmegaSingular, "Omega must be nonzero");
  check_stencil(params, kappa, h);
  const StateFamily family = [&](double x) { return sensing_state(with_kappa(params, kappa, x)); };
  return qfi_of_family(family, kappa_value(params, kappa), h);
}

double sensitivity_variance(const SystemParams& params, Kappa kappa, double h) {
  if (std::abs(params.omega) <= 1e-12) throw Error(ErrorCode::OmegaSingular, "Omega must be nonzero");
  check_stencil(params, kappa, h);
  const double x = kappa_value(params, kappa);
  const auto sx = [&](double v) { return coherence_expectation(sensing_state(with_kappa(params, kappa, v))); };
  const double slope = richardson_guarded([&](double step) { return (sx(x + step) - sx(x - step)) / (2.0 * step); },
                                          h, "coherence slope did not settle");
  if (std::abs(slope) < 1e-12) throw Error(ErrorCode::ZeroSlope, "d<sx1>/dkappa vanishes");
  const double mean = sx(x);
  return (1.0 - mean * mean) / (slope * slope);
}

SensingPoint sensing_point(const SystemParams& params, Kappa kappa, double h) {
  SensingPoint pt;
  pt.kappa = kappa;
  pt.value = kappa_value(params, kappa);
  try {
    pt.coherence = coherence_expectation(sensing_state(params));
  } catch (const Error&) {
    // coherence stays 0 when the state cannot be formed; the flags below say why
  }
  try {
    pt.qfi = qfi(params, kappa, h);
    pt.cr_bound = pt.qfi > 0.0 ? 1.0 / std::sqrt(pt.qfi) : 0.0;
  } catch (const Error& e) {
    pt.qfi_flag = e.code();
  }
  try {
    pt.variance_sq = sensitivity_variance(params, kappa, h);
  } catch (const Error& e) {
    pt.variance_flag = e.code();
  }
  return pt;
}

std::vector<SensingPoint> sensing_sweep(Kappa kappa, double fixed_value, std::pair<double, double> range,
                                        std::size_t n, double gamma, double h, Exec exec) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "a sweep needs at least two points");
  const auto grid = linspace(range.first, range.second, n);
  SystemParams base{0.0, 0.0, gamma};
  base = with_kappa(base, kappa == Kappa::J ? Kappa::Omega : Kappa::J, fixed_value);
  return map_indices(
      n, [&](std::size_t i) { return sensing_point(with_kappa(base, kappa, grid[i]), kappa, h); }, exec);
}

}  // namespace ptq
