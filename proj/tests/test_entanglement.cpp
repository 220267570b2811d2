#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/QR>

#include "ptq/entanglement.hpp"
#include "ptq/error.hpp"
#include "ptq/spectrum.hpp"

using namespace ptq;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no ptq::Error thrown");
  return ErrorCode::InvalidArgument;
}

StateVector4 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  StateVector4 v;
  for (int i = 0; i < 4; ++i) v[i] = Complex(n(rng), n(rng));
  return v.normalized();
}

Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) m(i, k) = Complex(n(rng), n(rng));
  return Eigen::HouseholderQR<Eigen::Matrix2cd>(m).householderQ();
}

}  // namespace

TEST_CASE("concurrence_mixed: reference states") {
  CHECK(concurrence_mixed(DensityMatrix4::pure(singlet_state())) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence_mixed(DensityMatrix4::pure(basis_state(0))) == doctest::Approx(0.0));
  CHECK(concurrence_mixed(DensityMatrix4::maximally_mixed()) == doctest::Approx(0.0));

  // Werner state p |singlet><singlet| + (1-p) I/4 has C = max(0, (3p-1)/2)
  for (double p : {0.2, 0.5, 0.9}) {
    const ComplexMatrix4 rho = p * singlet_state() * singlet_state().adjoint() +
                               (1.0 - p) * ComplexMatrix4::Identity() / 4.0;
    CHECK(concurrence_mixed(DensityMatrix4(rho)) == doctest::Approx(std::max(0.0, (3.0 * p - 1.0) / 2.0)));
  }
}

TEST_CASE("concurrence_mixed: invalid densities") {
  ComplexMatrix4 m = ComplexMatrix4::Identity() / 4.0;
  m(0, 1) = Complex(0.0, 0.1);
  CHECK(code_of([&] { concurrence_mixed(DensityMatrix4(m)); }) == ErrorCode::InvalidDensity);
  CHECK(code_of([] { concurrence_mixed(DensityMatrix4(ComplexMatrix4::Identity())); }) == ErrorCode::InvalidDensity);
  ComplexMatrix4 neg = ComplexMatrix4::Zero();
  neg.diagonal() << 0.6, 0.6, -0.2, 0.0;
  CHECK(code_of([&] { concurrence_mixed(DensityMatrix4(neg)); }) == ErrorCode::InvalidDensity);
}

TEST_CASE("concurrence_pure: reference states") {
  const double alpha = std::numbers::pi / 8.0;
  StateVector4 schmidt(std::cos(alpha), 0.0, 0.0, std::sin(alpha));
  CHECK(concurrence_pure(schmidt) == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(concurrence_pure(singlet_state()) == doctest::Approx(1.0));
  CHECK(code_of([] { concurrence_pure(StateVector4(1.0, 1.0, 0.0, 0.0)); }) == ErrorCode::NotNormalized);
}

TEST_CASE("property: local unitary and global phase invariance on 500 random pure states") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 500; ++i) {
    const StateVector4 psi = random_state(rng);
    const double c = concurrence_pure(psi);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    const ComplexMatrix4 u = kron(random_unitary(rng), random_unitary(rng));
    CHECK(std::abs(concurrence_pure(u * psi) - c) < 1e-9);
    CHECK(std::abs(concurrence_pure(std::polar(1.0, 0.37 * i) * psi) - c) < 1e-9);
    CHECK(std::abs(concurrence_mixed(DensityMatrix4::pure(psi)) - c) < 1e-10);
  }
}

TEST_CASE("property: mixed-state concurrence lies in [0, 1]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    ComplexMatrix4 rho = ComplexMatrix4::Zero();
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double w = weight(rng);
      const StateVector4 v = random_state(rng);
      rho += w * v * v.adjoint();
      total += w;
    }
    const double c = concurrence_mixed(DensityMatrix4(rho / total));
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("eigenstate concurrence in the two phases") {
  SUBCASE("PTB: the conjugate pair shares its concurrence") {
    const SystemParams p{2.0, 0.7, 1.0};
    CHECK(std::abs(eigenstate_concurrence(p, 3) - eigenstate_concurrence(p, 4)) < 1e-6);
  }
  SUBCASE("PTS: Psi3 decreases and Psi4 increases with J") {
    const SystemParams p{2.0, 0.3, 1.0};
    CHECK(std::abs(eigenstate_concurrence(p, 3) - eigenstate_concurrence(p, 4)) > 1e-3);
    double c3 = eigenstate_concurrence({2.0, 0.1, 1.0}, 3);
    double c4 = eigenstate_concurrence({2.0, 0.1, 1.0}, 4);
    for (double j = 0.15; j < 0.56; j += 0.05) {
      const double n3 = eigenstate_concurrence({2.0, j, 1.0}, 3);
      const double n4 = eigenstate_concurrence({2.0, j, 1.0}, 4);
      CHECK(n3 < c3);
      CHECK(n4 > c4);
      c3 = n3;
      c4 = n4;
    }
  }
  SUBCASE("singlet is maximally entangled") {
    CHECK(eigenstate_concurrence({2.0, 0.4, 1.0}, 1) == doctest::Approx(1.0));
  }
  SUBCASE("index range") {
    CHECK(code_of([] { eigenstate_concurrence({2.0, 0.4, 1.0}, 0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { eigenstate_concurrence_closed({2.0, 0.4, 1.0}, 2); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { eigenstate_concurrence_closed({0.0, 0.4, 1.0}, 3); }) == ErrorCode::OmegaSingular);
  }
}

TEST_CASE("closed-form eigenstate concurrence is cross-checked against Wootters") {
  // The closed form is kept verbatim; a mismatch is reported, not hidden.
  const SystemParams p{2.0, 0.7, 1.0};
  const EigenstateConcurrence e = eigenstate_concurrence_closed(p, 3);
  const StateVector4 psi3 = solve_spectrum(p).eigenvectors[2].normalized();
  CHECK(e.wootters == doctest::Approx(concurrence_pure(psi3)).epsilon(1e-12));
  // round-off can push a lambda just below zero; it is clamped before the root
  CHECK(e.lambda1 >= -1e-12);
  CHECK(e.lambda2 >= -1e-12);
  CHECK(e.closed_form ==
        doctest::Approx(std::sqrt(std::max(e.lambda1, 0.0)) - std::sqrt(std::max(e.lambda2, 0.0))));
  if (std::abs(e.closed_form - e.wootters) > 1e-6) {
    REQUIRE(e.discrepancy.has_value());
    CHECK(e.discrepancy->state == 3);
    CHECK(e.discrepancy->difference() == doctest::Approx(std::abs(e.closed_form - e.wootters)));
  } else {
    CHECK_FALSE(e.discrepancy.has_value());
  }
}
