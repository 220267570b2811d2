#pragma once

#include <array>
#include <string_view>

#include "ptq/model.hpp"

namespace ptq {

/// Intermediate quantities of the cubic that governs the exchange-symmetric
/// sector: X, Z and the principal cube root Y = r e^{i theta_y}.
struct Auxiliaries {
  double x = 0.0;
  double z = 0.0;
  Complex y;
  double r = 0.0;
  double theta_y = 0.0;  // arg Y in (-pi, pi]
};

Auxiliaries auxiliary_quantities(const SystemParams& params);

enum class SpectrumSource { ClosedForm, Oracle };

std::string_view to_string(SpectrumSource source);

using Eigenvalues = std::array<Complex, 4>;
using Eigenvectors = std::array<StateVector4, 4>;

/// Labeled eigenpairs. Index 0 is E1 (the singlet, E1 = -J), index 1 is E2
/// (the non-coalescing root of the symmetric sector) and indices 2, 3 are
/// the pair E3, E4 that merges on the exceptional curve.
///
/// Labeling inside the symmetric sector: when all three roots are real they
/// are sorted ascending (E2 < E3 < E4); otherwise E2 is the real root and
/// E3 (E4) carries the positive (negative) imaginary part.
struct Spectrum {
  Eigenvalues eigenvalues{};
  Eigenvectors eigenvectors{};
  SpectrumSource source = SpectrumSource::ClosedForm;
  double max_residual = 0.0;

  double max_imag() const;
  double min_gap() const;
  double pair_gap() const { return std::abs(eigenvalues[2] - eigenvalues[3]); }
  /// Index of the eigenvalue with the largest imaginary part.
  int dominant_index() const;
};

/// Closed-form eigenvalues (E1..E4). Throws DegenerateCubic when |Y| < 1e-12.
Eigenvalues eigenvalues_closed_form(const SystemParams& params);

/// Closed-form right eigenvectors for the given (labeled) eigenvalues.
/// Throws OmegaSingular when Omega <= 1e-12 and NearDefective when a residual
/// exceeds the tolerance for the local gap.
Eigenvectors eigenvectors_closed_form(const SystemParams& params, const Eigenvalues& eigenvalues);

Spectrum closed_form_spectrum(const SystemParams& params);

/// Numerical eigensystem of an arbitrary 4x4 matrix, independent of the
/// closed forms. Exchange-symmetric matrices with the singlet as an exact
/// eigenvector are deflated to the 3x3 symmetric block first.
Spectrum eigensystem_oracle(const ComplexMatrix4& h);

inline Spectrum oracle_spectrum(const SystemParams& params) {
  return eigensystem_oracle(build_hamiltonian(params));
}

/// Closed form where it is defined, oracle otherwise.
Spectrum solve_spectrum(const SystemParams& params);

/// Pairs two eigenvalue multisets optimally (over all permutations) and
/// returns the largest pairing distance.
double eigenvalue_multiset_distance(const Eigenvalues& a, const Eigenvalues& b);

/// Orders the three symmetric-sector roots as (E2, E3, E4).
std::array<Complex, 3> order_symmetric_roots(std::array<Complex, 3> roots);

/// Scales v so that its largest-magnitude amplitude is real and positive.
/// Ties (within 1e-12) go to the highest index.
void fix_global_phase(StateVector4& v);

double eigen_residual(const ComplexMatrix4& h, Complex eigenvalue, const StateVector4& v);

/// Residual tolerance for eigenpairs given the local minimum gap.
constexpr double residual_tolerance(double min_gap) { return min_gap < 1e-4 ? 1e-6 : 1e-9; }

enum class Phase { PTSymmetric, PTBroken, NearEP };

std::string_view to_string(Phase phase);

struct PhaseLabel {
  Phase phase = Phase::PTSymmetric;
  double max_imag = 0.0;
  double pair_gap = 0.0;

  bool symmetric() const { return phase != Phase::PTBroken; }
};

PhaseLabel classify_phase(const SystemParams& params, double tol_phase = 1e-8, double tol_gap = 1e-6);

}  // namespace ptq
