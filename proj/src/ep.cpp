#include "ptq/ep.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ptq/error.hpp"

namespace ptq {

namespace {

constexpr double kEpTol = 1e-6;
constexpr double kPhaseTol = 1e-8;
constexpr int kBisectionBudget = 200;

bool broken(const SystemParams& p) { return classify_phase(p, kPhaseTol).phase == Phase::PTBroken; }

SystemParams slice_params(const EpSlice& fixed, double x, double gamma) {
  if (std::holds_alternative<FixOmega>(fixed)) return {std::get<FixOmega>(fixed).value, x, gamma};
  return {x, std::get<FixJ>(fixed).value, gamma};
}

}  // namespace

EpResidual ep_residual(const SystemParams& p) {
  const Auxiliaries aux = auxiliary_quantities(p);
  constexpr double step = std::numbers::pi / 3.0;
  return {aux.theta_y - step * std::round(aux.theta_y / step), aux.x - aux.r * aux.r};
}

Complex degenerate_eigenvalue(const SystemParams& p) {
  const Auxiliaries aux = auxiliary_quantities(p);
  const double radicand_re = (aux.y * aux.y * aux.y).real();
  const double r = std::copysign(aux.r, radicand_re);
  return {(p.j - 0.5 * (aux.x / r + r)) / 3.0, 0.0};
}

EpPoint locate_ep(const EpSlice& fixed, std::pair<double, double> bracket, double tol, double gamma) {
  double lo = bracket.first;
  double hi = bracket.second;
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw Error(ErrorCode::InvalidArgument, "bracket must be finite with lo < hi");

  const bool lo_broken = broken(slice_params(fixed, lo, gamma));
  if (lo_broken == broken(slice_params(fixed, hi, gamma)))
    throw Error(ErrorCode::NoSignChange, "both bracket ends lie in the same PT phase");

  int iterations = 0;
  while (iterations < kBisectionBudget) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (broken(slice_params(fixed, mid, gamma)) == lo_broken)
      lo = mid;
    else
      hi = mid;
    ++iterations;
  }
  if (hi - lo > tol) throw Error(ErrorCode::NotConverged, "bisection budget exhausted");

  // report the PT-symmetric end, where the eigenvalues are real
  const double x = lo_broken ? hi : lo;
  const SystemParams p = slice_params(fixed, x, gamma);
  const Eigenvalues values = eigenvalues_closed_form(p);
  const EpResidual res = ep_residual(p);

  EpPoint ep;
  ep.j_c = p.j;
  ep.omega_c = p.omega;
  ep.gamma = gamma;
  ep.residual_theta = res.theta;
  ep.residual_x = res.x;
  ep.gap = std::abs(values[2] - values[3]);
  ep.e_degenerate = degenerate_eigenvalue(p);
  const double separation = std::min({std::abs(values[0] - values[2]), std::abs(values[1] - values[2]),
                                      std::abs(values[0] - values[3]), std::abs(values[1] - values[3])});
  ep.second_order = separation > 1e-3;

  if (std::abs(ep.residual_theta) > kEpTol || std::abs(ep.residual_x) > kEpTol || ep.gap > kEpTol)
    throw Error(ErrorCode::NotConverged, "located point fails the exceptional-point residual check");
  return ep;
}

std::optional<std::pair<double, double>> find_phase_bracket(const EpSlice& fixed, std::pair<double, double> range,
                                                            double gamma, std::size_t samples) {
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  const auto xs = linspace(range.first, range.second, samples + 1);
  bool prev = broken(slice_params(fixed, xs[0], gamma));
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const bool cur = broken(slice_params(fixed, xs[k], gamma));
    if (cur != prev) return std::pair{xs[k - 1], xs[k]};
    prev = cur;
  }
  return std::nullopt;
}

std::vector<EpCurvePoint> ep_curve(std::pair<double, double> omega_range, std::size_t n_points, double gamma,
                                   std::pair<double, double> j_range, Exec exec) {
  if (n_points == 0) throw Error(ErrorCode::InvalidArgument, "n_points must be positive");
  if (n_points == 1 && omega_range.first != omega_range.second)
    throw Error(ErrorCode::InvalidArgument, "a single point needs a degenerate Omega range");

  const auto omegas = linspace(omega_range.first, omega_range.second, n_points);
  auto points = map_indices(
      n_points,
      [&](std::size_t i) {
        EpCurvePoint out;
        out.omega = omegas[i];
        const auto bracket = find_phase_bracket(FixOmega{out.omega}, j_range, gamma);
        if (!bracket) {
          out.failure = "no phase change in the J range";
          return out;
        }
        try {
          out.point = locate_ep(FixOmega{out.omega}, *bracket, 1e-8, gamma);
        } catch (const Error& e) {
          out.failure = e.what();
        }
        return out;
      },
      exec);

  bool any = false;
  for (const auto& p : points) any = any || p.point.has_value();
  if (!any) throw Error(ErrorCode::EmptyCurve, "no exceptional point found in the Omega range");
  return points;
}

StateVector4 coalesced_eigenvector(const EpPoint& ep) {
  const SystemParams p = ep.params();
  const EpResidual res = ep_residual(p);
  if (std::abs(res.theta) > kEpTol || std::abs(res.x) > kEpTol)
    throw Error(ErrorCode::NotAtEp, "parameters are not on the exceptional curve");
  if (std::abs(p.omega) <= 1e-12) throw Error(ErrorCode::OmegaSingular, "Omega must be nonzero");

  const Complex e = degenerate_eigenvalue(p);
  const Complex shifted = p.j - e - kI * p.gamma;
  const Complex c1 = -shifted / p.omega;
  const Complex c0 = -2.0 * (p.j + e) * shifted / (p.omega * p.omega) - 1.0;
  StateVector4 v(c0, c1, c1, 1.0);
  v.normalize();
  fix_global_phase(v);
  return v;
}

}  // namespace ptq
