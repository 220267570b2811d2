#include "ptq/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "ptq/error.hpp"
#include "ptq/spectrum.hpp"

namespace ptq {

void DensityMatrix4::validate() const {
  if (!m_.allFinite()) throw Error(ErrorCode::InvalidDensity, "non-finite entries");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw Error(ErrorCode::InvalidDensity, "not Hermitian");
  if (std::abs(m_.trace() - 1.0) > 1e-10) throw Error(ErrorCode::InvalidDensity, "trace differs from 1");
  const ComplexMatrix4 herm = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) throw Error(ErrorCode::InvalidDensity, "not positive semidefinite");
}

double concurrence_mixed(const DensityMatrix4& rho) {
  rho.validate();
  const ComplexMatrix4 herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver(herm);
  const Eigen::Vector4d roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix4 sqrt_rho = solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();

  // l_i are the singular values of sqrt(rho) (sy x sy) sqrt(rho)*, whose
  // squares are the eigenvalues of rho (sy x sy) rho* (sy x sy).
  const ComplexMatrix4 a = sqrt_rho * spin_flip_operator() * sqrt_rho.conjugate();
  Eigen::JacobiSVD<ComplexMatrix4> svd(a);
  const Eigen::Vector4d l = svd.singularValues();  // nonincreasing
  return std::clamp(l(0) - l(1) - l(2) - l(3), 0.0, 1.0);
}

double concurrence_pure(const StateVector4& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw Error(ErrorCode::NotNormalized, "state is not unit norm");
  // <psi| sy x sy |psi*> = -2 (psi00 psi11 - psi01 psi10) up to a phase
  return std::min(1.0, 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2)));
}

EigenstateConcurrence eigenstate_concurrence_closed(const SystemParams& p, int s) {
  if (s != 3 && s != 4) throw Error(ErrorCode::InvalidArgument, "closed form covers eigenstates 3 and 4");
  if (std::abs(p.omega) <= 1e-12) throw Error(ErrorCode::OmegaSingular, "R coefficients divide by Omega");

  const Eigenvalues values = eigenvalues_closed_form(p);
  const Complex e = values[s - 1];
  const Complex shifted = p.j - e - kI * p.gamma;
  const Complex r2 = -shifted / p.omega;
  const Complex r1 = -2.0 * (p.j + e) * shifted / (p.omega * p.omega) - 1.0;
  const double n2 = 1.0 / (1.0 + std::norm(r1) + 2.0 * std::norm(r2));
  const double n4 = n2 * n2;

  const double re_r1 = r1.real();
  const double r2_sq = std::norm(r2);
  const double a = 2.0 * re_r1 - 2.0 * r2_sq;
  const double b = 2.0 * (r2_sq - re_r1);
  const double common = 4.0 * re_r1 * re_r1 + 2.0 * b * r2_sq - 4.0 * r2_sq * re_r1;

  EigenstateConcurrence out;
  out.lambda1 = 0.5 * n4 * (common + a * a);
  out.lambda2 = 0.5 * n4 * (common - a * a);
  out.closed_form = std::sqrt(std::max(out.lambda1, 0.0)) - std::sqrt(std::max(out.lambda2, 0.0));

  StateVector4 v(r1, r2, r2, 1.0);
  v *= std::sqrt(n2);
  out.wootters = concurrence_pure(v);

  if (std::abs(out.closed_form - out.wootters) > 1e-6)
    out.discrepancy = DiscrepancyReport{p, s, out.closed_form, out.wootters};
  return out;
}

double eigenstate_concurrence(const SystemParams& p, int s) {
  if (s < 1 || s > 4) throw Error(ErrorCode::InvalidArgument, "eigenstate index must be 1..4");
  return concurrence_pure(solve_spectrum(p).eigenvectors[s - 1]);
}

}  // namespace ptq
