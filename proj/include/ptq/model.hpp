#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ptq {

using Complex = std::complex<double>;

// Basis order |00>, |01>, |10>, |11> (qubit 1 is the left factor), with
// sigma_z|1> = +|1> and sigma_z|0> = -|0>.
using ComplexMatrix4 = Eigen::Matrix4cd;
using StateVector4 = Eigen::Vector4cd;
using ComplexMatrix2 = Eigen::Matrix2cd;

inline constexpr Complex kI{0.0, 1.0};

/// Rates of the coupled gain/loss qubit pair, all in units of gamma.
struct SystemParams {
  double omega = 0.0;  // coherent Rabi coupling
  double j = 0.0;      // Ising coupling
  double gamma = 1.0;  // balanced gain/loss rate; 0 is the Hermitian limit

  bool is_hermitian() const { return gamma == 0.0; }
  // The reproduction presets only use non-negative rates.
  bool in_preset_range() const { return omega >= 0.0 && j >= 0.0 && gamma >= 0.0; }
  bool is_finite() const;
};

namespace pauli {
const ComplexMatrix2& identity();
const ComplexMatrix2& x();
const ComplexMatrix2& y();
const ComplexMatrix2& z();
}  // namespace pauli

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b);

/// sigma_x (x) sigma_x, the parity operator of the pair.
const ComplexMatrix4& parity_operator();
/// Swaps the two qubits: |ab> -> |ba>.
const ComplexMatrix4& exchange_operator();
/// sigma_y (x) sigma_y, the spin-flip used by the concurrence.
const ComplexMatrix4& spin_flip_operator();
/// sigma_x on qubit 1.
const ComplexMatrix4& coherence_operator();

/// (|10> - |01>)/sqrt(2)
StateVector4 singlet_state();
StateVector4 basis_state(int index);

/// H = (Omega sx1 - i gamma sz1)/2 + (Omega sx2 - i gamma sz2)/2 + J sz1 sz2.
ComplexMatrix4 build_hamiltonian(const SystemParams& params);

/// Largest entry magnitude of P conj(H) P - H.
double pt_symmetry_residual(const ComplexMatrix4& h);
double pt_symmetry_residual(const SystemParams& params);

/// Largest entry magnitude of S H S - H for the qubit exchange S.
double exchange_residual(const ComplexMatrix4& h);

/// Sum of absolute values along the heaviest row; bounds the spectral radius.
double max_row_sum(const ComplexMatrix4& h);

}  // namespace ptq
