#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ptq/error.hpp"
#include "ptq/parallel.hpp"
#include "ptq/spectrum.hpp"

namespace ptq {

enum class Kappa { J, Omega };

std::string_view to_string(Kappa kappa);

/// params with the kappa coordinate replaced by value.
SystemParams with_kappa(SystemParams params, Kappa kappa, double value);
double kappa_value(const SystemParams& params, Kappa kappa);

/// <psi| sx (x) 1 |psi>. Throws NotNormalized.
double coherence_expectation(const StateVector4& psi);

/// Normalized, phase-fixed eigenvector Psi3 at params.
StateVector4 sensing_state(const SystemParams& params);

using StateFamily = std::function<StateVector4(double)>;

/// 4[<d psi|d psi> - |<d psi|psi>|^2] by central differences at x. The step
/// is halved (at most 4 times) until two successive steps agree to 1e-3
/// relative; throws NoDerivativeConvergence otherwise.
double qfi_of_family(const StateFamily& family, double x, double h);

/// Quantum Fisher information of Psi3 with respect to kappa. Throws
/// EpTooClose when |E3 - E4| < 10 h or the stencil straddles the EP.
double qfi(const SystemParams& params, Kappa kappa, double h = 1e-5);

/// (1 - <sx1>^2) / (d<sx1>/dkappa)^2 on Psi3. Throws ZeroSlope when the
/// slope magnitude is below 1e-12, and EpTooClose as qfi.
double sensitivity_variance(const SystemParams& params, Kappa kappa, double h = 1e-5);

struct SensingPoint {
  Kappa kappa = Kappa::J;
  double value = 0.0;
  double qfi = 0.0;
  double variance_sq = 0.0;
  double coherence = 0.0;
  double cr_bound = 0.0;  // 1/sqrt(F)
  std::optional<ErrorCode> qfi_flag;       // EpTooClose / NoDerivativeConvergence
  std::optional<ErrorCode> variance_flag;  // ZeroSlope / EpTooClose / ...

  bool qfi_defined() const { return !qfi_flag; }
  bool variance_defined() const { return !variance_flag; }
  bool flagged() const { return qfi_flag || variance_flag; }
};

SensingPoint sensing_point(const SystemParams& params, Kappa kappa, double h = 1e-5);

/// n grid points over range with the other coordinate fixed. Failing points
/// are flagged, never dropped.
std::vector<SensingPoint> sensing_sweep(Kappa kappa, double fixed_value, std::pair<double, double> range,
                                        std::size_t n, double gamma = 1.0, double h = 1e-5,
                                        Exec exec = Exec::Parallel);

}  // namespace ptq
