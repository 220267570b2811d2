#include "ptq/model.hpp"

#include <cmath>

namespace ptq {

bool SystemParams::is_finite() const {
  return std::isfinite(omega) && std::isfinite(j) && std::isfinite(gamma);
}

namespace pauli {

const ComplexMatrix2& identity() {
  static const ComplexMatrix2 m = ComplexMatrix2::Identity();
  return m;
}

const ComplexMatrix2& x() {
  static const ComplexMatrix2 m = (ComplexMatrix2() << 0, 1, 1, 0).finished();
  return m;
}

const ComplexMatrix2& y() {
  static const ComplexMatrix2 m = (ComplexMatrix2() << 0, -kI, kI, 0).finished();
  return m;
}

const ComplexMatrix2& z() {
  // index 0 is |0> with eigenvalue -1
  static const ComplexMatrix2 m = (ComplexMatrix2() << -1, 0, 0, 1).finished();
  return m;
}

}  // namespace pauli

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

const ComplexMatrix4& parity_operator() {
  static const ComplexMatrix4 m = kron(pauli::x(), pauli::x());
  return m;
}

const ComplexMatrix4& exchange_operator() {
  static const ComplexMatrix4 m = [] {
    ComplexMatrix4 s = ComplexMatrix4::Zero();
    s(0, 0) = 1;
    s(1, 2) = 1;
    s(2, 1) = 1;
    s(3, 3) = 1;
    return s;
  }();
  return m;
}

const ComplexMatrix4& spin_flip_operator() {
  static const ComplexMatrix4 m = kron(pauli::y(), pauli::y());
  return m;
}

const ComplexMatrix4& coherence_operator() {
  static const ComplexMatrix4 m = kron(pauli::x(), pauli::identity());
  return m;
}

StateVector4 singlet_state() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector4(0.0, -s, s, 0.0);
}

StateVector4 basis_state(int index) {
  StateVector4 v = StateVector4::Zero();
  v(index) = 1.0;
  return v;
}

ComplexMatrix4 build_hamiltonian(const SystemParams& p) {
  const ComplexMatrix2 single = 0.5 * (p.omega * pauli::x() - kI * p.gamma * pauli::z());
  const ComplexMatrix2& id = pauli::identity();
  return kron(single, id) + kron(id, single) + p.j * kron(pauli::z(), pauli::z());
}

double pt_symmetry_residual(const ComplexMatrix4& h) {
  const ComplexMatrix4& parity = parity_operator();
  return (parity * h.conjugate() * parity - h).cwiseAbs().maxCoeff();
}

double pt_symmetry_residual(const SystemParams& params) {
  return pt_symmetry_residual(build_hamiltonian(params));
}

double exchange_residual(const ComplexMatrix4& h) {
  const ComplexMatrix4& s = exchange_operator();
  return (s * h * s - h).cwiseAbs().maxCoeff();
}

double max_row_sum(const ComplexMatrix4& h) {
  return h.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace ptq
