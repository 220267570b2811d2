#pragma once

#include <optional>

#include "ptq/model.hpp"

namespace ptq {

/// Two-qubit density matrix. Construction does not validate; consumers that
/// need a physical state call validate().
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(ComplexMatrix4 m) : m_(std::move(m)) {}

  static DensityMatrix4 pure(const StateVector4& psi) { return DensityMatrix4(psi * psi.adjoint()); }
  static DensityMatrix4 maximally_mixed() { return DensityMatrix4(ComplexMatrix4::Identity() / 4.0); }

  const ComplexMatrix4& matrix() const { return m_; }
  Complex trace() const { return m_.trace(); }

  /// Throws InvalidDensity unless Hermitian, unit-trace and PSD within 1e-10.
  void validate() const;

 private:
  ComplexMatrix4 m_;
};

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}, where l_i^2 are the
/// eigenvalues of rho (sy x sy) rho* (sy x sy) in nonincreasing order.
double concurrence_mixed(const DensityMatrix4& rho);

/// |<psi| sy x sy |psi*>|. Throws NotNormalized if |psi| deviates from 1 by
/// more than 1e-10.
double concurrence_pure(const StateVector4& psi);

/// Report emitted when the printed closed form disagrees with the Wootters
/// value of the same eigenvector.
struct DiscrepancyReport {
  SystemParams params;
  int state = 3;
  double closed_form = 0.0;
  double wootters = 0.0;
  double difference() const { return std::abs(closed_form - wootters); }
};

struct EigenstateConcurrence {
  double closed_form = 0.0;  // sqrt(lambda_1) - sqrt(lambda_2)
  double wootters = 0.0;     // authoritative value
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::optional<DiscrepancyReport> discrepancy;  // set when the two differ by > 1e-6
};

/// Closed-form concurrence of eigenstate s (3 or 4) from the R coefficients,
/// cross-checked against concurrence_pure. Throws OmegaSingular.
EigenstateConcurrence eigenstate_concurrence_closed(const SystemParams& params, int s);

/// Wootters concurrence of the labeled eigenvector (index 1..4).
double eigenstate_concurrence(const SystemParams& params, int s);

}  // namespace ptq
