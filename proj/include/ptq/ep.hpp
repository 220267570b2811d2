#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ptq/parallel.hpp"
#include "ptq/spectrum.hpp"

namespace ptq {

/// A point on the exceptional curve where E3 and E4 coalesce.
struct EpPoint {
  double j_c = 0.0;
  double omega_c = 0.0;
  double gamma = 1.0;
  double residual_theta = 0.0;  // branch-reduced arg Y
  double residual_x = 0.0;      // X - r^2
  double gap = 0.0;             // |E3 - E4|
  Complex e_degenerate;
  bool second_order = true;  // false when E1 or E2 also approach the pair

  SystemParams params() const { return {omega_c, j_c, gamma}; }
};

/// Certificate residuals (theta, X - r^2); both vanish on the exceptional curve.
/// theta is arg Y reduced to the nearest multiple of pi/3, so it does not
/// depend on which cube-root branch labels the coalescing pair.
struct EpResidual {
  double theta = 0.0;
  double x = 0.0;
};

EpResidual ep_residual(const SystemParams& params);

/// Degenerate eigenvalue on the curve, (J - (X/r + r)/2)/3 with r the signed
/// real cube root of the (then real) radicand.
Complex degenerate_eigenvalue(const SystemParams& params);

struct FixOmega {
  double value;
};
struct FixJ {
  double value;
};
using EpSlice = std::variant<FixOmega, FixJ>;

/// Bisection on the PT phase along a one-parameter slice. The swept
/// parameter is refined to machine resolution; tol is the width the bracket
/// must reach. Throws NoSignChange or NotConverged.
EpPoint locate_ep(const EpSlice& fixed, std::pair<double, double> bracket, double tol = 1e-8,
                  double gamma = 1.0);

/// First cell of a uniform scan of range (samples cells) across which the
/// PT phase changes, or nothing if the whole range is in one phase.
std::optional<std::pair<double, double>> find_phase_bracket(const EpSlice& fixed, std::pair<double, double> range,
                                                            double gamma = 1.0, std::size_t samples = 64);

struct EpCurvePoint {
  double omega = 0.0;
  std::optional<EpPoint> point;  // empty marks a gap in the curve
  std::string failure;
};

/// J_c(Omega) over an Omega range. For each Omega the first phase change in
/// j_range is bracketed on a coarse scan and then located. Throws EmptyCurve
/// when no point in the range has an EP.
std::vector<EpCurvePoint> ep_curve(std::pair<double, double> omega_range, std::size_t n_points,
                                   double gamma = 1.0, std::pair<double, double> j_range = {0.0, 3.0},
                                   Exec exec = Exec::Parallel);

/// The single eigenvector left at the EP. Throws NotAtEp when the point does
/// not satisfy the curve residuals.
StateVector4 coalesced_eigenvector(const EpPoint& ep);

}  // namespace ptq
