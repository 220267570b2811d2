#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ptq/entanglement.hpp"
#include "ptq/ep.hpp"
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

}  // namespace

TEST_CASE("ep residuals") {
  SUBCASE("each residual has a square-root onset on one side of the curve") {
    const EpResidual pts = ep_residual({2.0, 0.589, 1.0});
    CHECK(std::abs(pts.x) < 1e-12);
    CHECK(std::abs(pts.theta) == doctest::Approx(0.016).epsilon(0.05));
    const EpResidual ptb = ep_residual({2.0, 0.590, 1.0});
    CHECK(std::abs(ptb.theta) < 1e-12);
    CHECK(ptb.x == doctest::Approx(0.0477).epsilon(0.01));
  }
  SUBCASE("decoupled point is not an EP") {
    const EpResidual r = ep_residual({2.0, 0.0, 1.0});
    CHECK(std::abs(r.theta) == doctest::Approx(std::numbers::pi / 6.0));
  }
  SUBCASE("origin has zero angle but nonzero X - r^2") {
    const EpResidual r = ep_residual({0.0, 0.0, 1.0});
    CHECK(std::abs(r.theta) < 1e-14);
    CHECK(r.x == doctest::Approx(-6.0));
  }
}

TEST_CASE("locate_ep reproduces the critical values") {
  const EpPoint a = locate_ep(FixOmega{2.0}, {0.3, 0.9});
  CHECK(std::abs(a.j_c - 0.588) <= 0.002 + 1e-12);

  const EpPoint b = locate_ep(FixJ{0.3}, {1.2, 2.2});
  CHECK(std::abs(b.omega_c - 1.649) <= 0.002);

  const EpPoint c = locate_ep(FixOmega{1.7}, {0.1, 0.6});
  CHECK(std::abs(c.j_c - 0.338) <= 0.002);

  const EpPoint d = locate_ep(FixJ{0.5}, {1.5, 2.2});
  CHECK(std::abs(d.omega_c - 1.900) <= 0.002);

  for (const EpPoint* p : {&a, &b, &c, &d}) {
    CHECK(std::abs(p->residual_theta) <= 1e-6);
    CHECK(std::abs(p->residual_x) <= 1e-6);
    CHECK(p->gap <= 1e-6);
    CHECK(std::abs(p->e_degenerate.imag()) <= 1e-8);
    CHECK(p->second_order);
    const Spectrum s = solve_spectrum(p->params());
    CHECK(std::abs(s.eigenvalues[2].imag()) <= 1e-8);
    CHECK(std::abs(s.eigenvalues[3].imag()) <= 1e-8);
    CHECK(std::abs(s.eigenvalues[2].real() - s.eigenvalues[3].real()) <= 1e-6);
    CHECK(std::abs(s.eigenvalues[2] - p->e_degenerate) <= 1e-6);
  }
}

TEST_CASE("locate_ep: error paths") {
  CHECK(code_of([] { locate_ep(FixOmega{2.0}, {0.1, 0.3}); }) == ErrorCode::NoSignChange);
  CHECK(code_of([] { locate_ep(FixOmega{2.0}, {0.9, 0.3}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("bisection agrees with the zero of the analytic residual") {
  // At fixed Omega the radicand's discriminant Z changes sign at J_c.
  const double omega = 2.0;
  const auto z_of = [&](double j) { return auxiliary_quantities({omega, j, 1.0}).z; };
  double lo = 0.3, hi = 0.9;
  REQUIRE(z_of(lo) * z_of(hi) < 0.0);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (z_of(lo) * z_of(mid) <= 0.0 ? hi : lo) = mid;
  }
  const EpPoint ep = locate_ep(FixOmega{omega}, {0.3, 0.9});
  CHECK(std::abs(ep.j_c - 0.5 * (lo + hi)) < 1e-6);
}

TEST_CASE("phase along a slice: zero on the PTS side, growing on the PTB side") {
  const EpPoint ep = locate_ep(FixOmega{2.0}, {0.3, 0.9});
  for (double d : {1e-1, 1e-2, 1e-3}) CHECK(solve_spectrum({2.0, ep.j_c - d, 1.0}).max_imag() < 1e-10);
  double previous = 0.0;
  for (double d : {1e-6, 1e-4, 1e-2, 1e-1}) {
    const double m = solve_spectrum({2.0, ep.j_c + d, 1.0}).max_imag();
    CHECK(m > previous);
    previous = m;
  }
}

TEST_CASE("find_phase_bracket") {
  const auto b = find_phase_bracket(FixOmega{2.0}, {0.0, 1.2});
  REQUIRE(b.has_value());
  CHECK(b->first < 0.58998);
  CHECK(b->second > 0.58998);
  CHECK_FALSE(find_phase_bracket(FixOmega{2.0}, {0.0, 0.5}).has_value());
}

TEST_CASE("ep_curve") {
  SUBCASE("three points between the two critical values") {
    const auto curve = ep_curve({1.649, 2.0}, 3);
    REQUIRE(curve.size() == 3);
    REQUIRE(curve.front().point);
    REQUIRE(curve.back().point);
    CHECK(std::abs(curve.front().point->j_c - 0.300) < 2e-3);
    CHECK(std::abs(curve.back().point->j_c - 0.588) < 2.5e-3);
    CHECK(curve[1].point->j_c > curve[0].point->j_c);
    CHECK(curve[2].point->j_c > curve[1].point->j_c);
  }
  SUBCASE("single point on a degenerate range") {
    const auto curve = ep_curve({1.9, 1.9}, 1);
    REQUIRE(curve.size() == 1);
    REQUIRE(curve[0].point);
    CHECK(std::abs(curve[0].point->j_c - 0.5) < 2e-3);
  }
  SUBCASE("no EP in range") {
    CHECK(code_of([] { ep_curve({0.1, 0.2}, 5, 1.0, {0.0, 0.05}); }) == ErrorCode::EmptyCurve);
  }
  SUBCASE("invalid sizes") {
    CHECK(code_of([] { ep_curve({1.0, 2.0}, 1); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { ep_curve({1.0, 2.0}, 0); }) == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("coalesced eigenvector") {
  const EpPoint ep = locate_ep(FixOmega{2.0}, {0.3, 0.9});
  const StateVector4 v = coalesced_eigenvector(ep);
  CHECK(v.norm() == doctest::Approx(1.0));
  CHECK(eigen_residual(build_hamiltonian(ep.params()), ep.e_degenerate, v) <= 1e-6);
  CHECK(std::abs(v[1] - v[2]) < 1e-12);

  for (double d : {-1e-4, 1e-4}) {
    const Spectrum s = solve_spectrum({2.0, ep.j_c + d, 1.0});
    CHECK(std::abs(s.eigenvectors[2].normalized().dot(s.eigenvectors[3].normalized())) >= 0.999);
  }

  EpPoint off = ep;
  off.j_c += 0.05;
  CHECK(code_of([&] { coalesced_eigenvector(off); }) == ErrorCode::NotAtEp);
}

TEST_CASE("eigenstate concurrences merge at the EP") {
  for (const auto& [slice, bracket] :
       {std::pair<EpSlice, std::pair<double, double>>{FixOmega{2.0}, {0.3, 0.9}},
        std::pair<EpSlice, std::pair<double, double>>{FixJ{0.3}, {1.2, 2.2}}}) {
    const EpPoint ep = locate_ep(slice, bracket);
    // approach from the PTS side, where the two concurrences differ
    const bool fix_omega = std::holds_alternative<FixOmega>(slice);
    double previous = 1.0;
    for (double d : {1e-1, 1e-2, 1e-3}) {
      const SystemParams p = fix_omega ? SystemParams{ep.omega_c, ep.j_c - d, 1.0}
                                       : SystemParams{ep.omega_c + d, ep.j_c, 1.0};
      const double gap = std::abs(eigenstate_concurrence(p, 3) - eigenstate_concurrence(p, 4));
      CHECK(gap < previous);
      previous = gap;
    }
  }
}

TEST_CASE("concurrence splitting on the PTS side scales as the square root of the distance") {
  const EpPoint ep = locate_ep(FixOmega{2.0}, {0.3, 0.9});
  const auto gap = [&](double d) {
    const SystemParams p{2.0, ep.j_c - d, 1.0};
    return std::abs(eigenstate_concurrence(p, 3) - eigenstate_concurrence(p, 4));
  };
  CHECK(gap(1e-4) / gap(1e-6) == doctest::Approx(10.0).epsilon(0.01));
  CHECK(gap(1e-4) > 1e-3);
  CHECK(std::abs(eigenstate_concurrence({2.0, ep.j_c + 1e-4, 1.0}, 3) -
                 eigenstate_concurrence({2.0, ep.j_c + 1e-4, 1.0}, 4)) < 1e-12);
}
