#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ptq/model.hpp"

using namespace ptq;

TEST_CASE("hamiltonian: Omega = 0 is diagonal") {
  const ComplexMatrix4 h = build_hamiltonian({0.0, 0.3, 1.0});
  ComplexMatrix4 expected = ComplexMatrix4::Zero();
  expected.diagonal() << Complex(0.3, 1.0), -0.3, -0.3, Complex(0.3, -1.0);
  CHECK((h - expected).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("hamiltonian: Hermitian limit has single-flip couplings only") {
  const ComplexMatrix4 h = build_hamiltonian({1.5, 0.0, 0.0});
  CHECK(h.imag().cwiseAbs().maxCoeff() == 0.0);
  CHECK(h.diagonal().cwiseAbs().maxCoeff() == 0.0);
  // |00> couples to |01> and |10>, never to |11>
  CHECK(h(0, 1).real() == doctest::Approx(0.75));
  CHECK(h(0, 2).real() == doctest::Approx(0.75));
  CHECK(h(1, 3).real() == doctest::Approx(0.75));
  CHECK(h(2, 3).real() == doctest::Approx(0.75));
  CHECK(std::abs(h(0, 3)) == 0.0);
  CHECK(std::abs(h(1, 2)) == 0.0);
  CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hamiltonian: generic point is traceless without double flips") {
  const ComplexMatrix4 h = build_hamiltonian({2.0, 0.7, 1.0});
  CHECK(std::abs(h.trace()) == 0.0);
  CHECK(std::abs(h(0, 3)) == 0.0);
  CHECK(std::abs(h(3, 0)) == 0.0);
}

TEST_CASE("pt symmetry residual") {
  CHECK(pt_symmetry_residual(SystemParams{2.0, 0.4, 1.0}) <= 1e-14);
  CHECK(pt_symmetry_residual(SystemParams{0.0, 0.0, 1.0}) <= 1e-14);

  // P maps |00> to |11>, so a perturbation of the |00> entry shows up
  // twice in P conj(H) P - H: once at (0,0) and once at (3,3), each of
  // magnitude 0.1.
  ComplexMatrix4 h = build_hamiltonian({2.0, 0.4, 1.0});
  h(0, 0) += Complex(0.0, 0.1);
  CHECK(pt_symmetry_residual(h) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("property: PT symmetry, zero trace and exchange symmetry on random parameters") {
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> omega(-3.0, 3.0), j(-1.5, 1.5), gamma(0.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const SystemParams p{omega(rng), j(rng), gamma(rng)};
    const ComplexMatrix4 h = build_hamiltonian(p);
    CHECK(pt_symmetry_residual(h) <= 1e-13);
    CHECK(std::abs(h.trace()) == 0.0);
    CHECK(exchange_residual(h) <= 1e-14);
  }
}

TEST_CASE("pauli constants and basis convention") {
  CHECK(pauli::z()(0, 0).real() == -1.0);
  CHECK(pauli::z()(1, 1).real() == 1.0);
  CHECK(((pauli::x() * pauli::y()) + kI * pauli::z()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((parity_operator() * parity_operator() - ComplexMatrix4::Identity()).cwiseAbs().maxCoeff() == 0.0);

  // the singlet has sigma_z1 sigma_z2 = -1 and is annihilated by the
  // collective sigma_x and sigma_z
  const StateVector4 s = singlet_state();
  const ComplexMatrix4 zz = kron(pauli::z(), pauli::z());
  const ComplexMatrix4 sum_x = kron(pauli::x(), pauli::identity()) + kron(pauli::identity(), pauli::x());
  const ComplexMatrix4 sum_z = kron(pauli::z(), pauli::identity()) + kron(pauli::identity(), pauli::z());
  CHECK((zz * s + s).norm() < 1e-15);
  CHECK((sum_x * s).norm() < 1e-15);
  CHECK((sum_z * s).norm() < 1e-15);
}
