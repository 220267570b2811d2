#include "ptq/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ptq/error.hpp"

namespace ptq {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

// Below this the symmetric-sector roots are treated as a real triple.
constexpr double kRealTripleTol = 1e-10;

double scale_of(const ComplexMatrix4& h) { return std::max(1.0, h.cwiseAbs().maxCoeff()); }

}  // namespace

std::string_view to_string(SpectrumSource source) {
  return source == SpectrumSource::ClosedForm ? "closed_form" : "oracle";
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::PTSymmetric: return "PTS";
    case Phase::PTBroken: return "PTB";
    case Phase::NearEP: return "NearEP";
  }
  return "?";
}

double Spectrum::max_imag() const {
  double m = 0.0;
  for (const auto& e : eigenvalues) m = std::max(m, std::abs(e.imag()));
  return m;
}

double Spectrum::min_gap() const {
  return std::min({std::abs(eigenvalues[1] - eigenvalues[2]), std::abs(eigenvalues[1] - eigenvalues[3]),
                   std::abs(eigenvalues[2] - eigenvalues[3])});
}

int Spectrum::dominant_index() const {
  int best = 0;
  for (int i = 1; i < 4; ++i)
    if (eigenvalues[i].imag() > eigenvalues[best].imag()) best = i;
  return best;
}

Auxiliaries auxiliary_quantities(const SystemParams& p) {
  const double j = p.j;
  const double o2 = p.omega * p.omega;
  const double g2 = p.gamma * p.gamma;

  Auxiliaries aux;
  aux.x = 4.0 * j * j + 3.0 * o2 - 3.0 * g2;
  aux.z = 16.0 * j * j * j * j * g2 + j * j * (8.0 * g2 * g2 + 20.0 * g2 * o2 - o2 * o2) +
          (g2 - o2) * (g2 - o2) * (g2 - o2);
  const Complex sqrt_z = std::sqrt(Complex(aux.z, 0.0));
  const Complex radicand = -8.0 * j * j * j - 9.0 * j * (o2 + 2.0 * g2) + 3.0 * kSqrt3 * sqrt_z;
  aux.y = std::pow(radicand, 1.0 / 3.0);
  if (radicand == Complex(0.0, 0.0)) aux.y = 0.0;
  aux.r = std::abs(aux.y);
  aux.theta_y = std::arg(aux.y);
  return aux;
}

std::array<Complex, 3> order_symmetric_roots(std::array<Complex, 3> roots) {
  double max_imag = 0.0;
  double scale = 1.0;
  for (const auto& e : roots) {
    max_imag = std::max(max_imag, std::abs(e.imag()));
    scale = std::max(scale, std::abs(e));
  }
  if (max_imag <= kRealTripleTol * scale) {
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    return roots;
  }
  // one real root plus a conjugate pair
  auto real_it = std::min_element(roots.begin(), roots.end(),
                                  [](Complex a, Complex b) { return std::abs(a.imag()) < std::abs(b.imag()); });
  std::swap(roots[0], *real_it);
  if (roots[1].imag() < roots[2].imag()) std::swap(roots[1], roots[2]);
  return roots;
}

Eigenvalues eigenvalues_closed_form(const SystemParams& p) {
  const Auxiliaries aux = auxiliary_quantities(p);
  // Y and X/Y enter symmetrically, so take the cube root of whichever
  // radicand (sign of sqrt Z) avoids cancellation and pair it with X/u.
  const double j = p.j, o2 = p.omega * p.omega, g2 = p.gamma * p.gamma;
  const Complex sqrt_z = std::sqrt(Complex(aux.z, 0.0));
  const double lead = -8.0 * j * j * j - 9.0 * j * (o2 + 2.0 * g2);
  const Complex plus = lead + 3.0 * kSqrt3 * sqrt_z;
  const Complex minus = lead - 3.0 * kSqrt3 * sqrt_z;
  const Complex u = std::abs(minus) > std::abs(plus) ? std::pow(minus, 1.0 / 3.0) : aux.y;
  if (std::abs(u) < 1e-12)
    throw Error(ErrorCode::DegenerateCubic, "|Y| < 1e-12, closed form undefined");

  const Complex w = std::polar(1.0, std::numbers::pi / 3.0);
  const Complex v = aux.x / u;
  const std::array<Complex, 3> roots{
      (p.j + v + u) / 3.0,
      (p.j - v * w - u / w) / 3.0,
      (p.j - v / w - u * w) / 3.0,
  };
  const auto ordered = order_symmetric_roots(roots);
  return {Complex(-p.j, 0.0), ordered[0], ordered[1], ordered[2]};
}

void fix_global_phase(StateVector4& v) {
  const double largest = v.cwiseAbs().maxCoeff();
  if (largest == 0.0) return;
  int pick = 3;
  while (std::abs(v(pick)) < largest - 1e-12) --pick;
  const Complex a = v(pick);
  v *= std::conj(a) / std::abs(a);
  v(pick) = std::abs(a);
}

double eigen_residual(const ComplexMatrix4& h, Complex eigenvalue, const StateVector4& v) {
  return (h * v - eigenvalue * v).norm();
}

Eigenvectors eigenvectors_closed_form(const SystemParams& p, const Eigenvalues& eigenvalues) {
  if (std::abs(p.omega) <= 1e-12)
    throw Error(ErrorCode::OmegaSingular, "closed-form eigenvectors divide by Omega");

  Eigenvectors vectors;
  vectors[0] = singlet_state();
  for (int k = 1; k < 4; ++k) {
    const Complex e = eigenvalues[k];
    // The iγ sign is tied to the basis convention sigma_z|1> = +|1>.
    const Complex shifted = p.j - e - kI * p.gamma;
    const Complex r2 = -shifted / p.omega;
    const Complex r1 = -2.0 * (p.j + e) * shifted / (p.omega * p.omega) - 1.0;
    const double norm = 1.0 / std::sqrt(1.0 + std::norm(r1) + 2.0 * std::norm(r2));
    StateVector4 v(r1, r2, r2, 1.0);
    v *= norm;
    fix_global_phase(v);
    vectors[k] = v;
  }
  return vectors;
}

namespace {

double max_residual_of(const ComplexMatrix4& h, const Eigenvalues& values, const Eigenvectors& vectors) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, eigen_residual(h, values[k], vectors[k]));
  return worst;
}

}  // namespace

Spectrum closed_form_spectrum(const SystemParams& p) {
  Spectrum s;
  s.source = SpectrumSource::ClosedForm;
  s.eigenvalues = eigenvalues_closed_form(p);
  s.eigenvectors = eigenvectors_closed_form(p, s.eigenvalues);
  s.max_residual = max_residual_of(build_hamiltonian(p), s.eigenvalues, s.eigenvectors);
  if (s.max_residual > residual_tolerance(s.min_gap()))
    throw Error(ErrorCode::NearDefective,
                "closed-form eigenvector residual " + std::to_string(s.max_residual) + " exceeds tolerance");
  return s;
}

Spectrum eigensystem_oracle(const ComplexMatrix4& h) {
  if (!h.allFinite()) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");

  const double scale = scale_of(h);
  const StateVector4 singlet = singlet_state();
  const Complex singlet_value = singlet.dot(h * singlet);
  const bool deflatable = exchange_residual(h) <= 1e-13 * scale &&
                          eigen_residual(h, singlet_value, singlet) <= 1e-13 * scale;

  Spectrum s;
  s.source = SpectrumSource::Oracle;
  std::array<Complex, 3> roots;
  std::array<StateVector4, 3> root_vectors;

  if (deflatable) {
    // orthonormal basis of the exchange-symmetric sector
    const double inv = 1.0 / std::sqrt(2.0);
    Eigen::Matrix<Complex, 4, 3> basis = Eigen::Matrix<Complex, 4, 3>::Zero();
    basis(0, 0) = 1.0;
    basis(1, 1) = inv;
    basis(2, 1) = inv;
    basis(3, 2) = 1.0;
    const Eigen::Matrix3cd block = basis.adjoint() * h * basis;
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(block);
    if (solver.info() != Eigen::Success)
      throw Error(ErrorCode::NoConvergence, "eigensolver failed on the symmetric block");
    for (int k = 0; k < 3; ++k) {
      roots[k] = solver.eigenvalues()(k);
      root_vectors[k] = (basis * solver.eigenvectors().col(k)).normalized();
    }
    s.eigenvalues[0] = singlet_value;
    s.eigenvectors[0] = singlet;
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix4> solver(h);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "eigensolver failed");
    // E1 is the eigenvector with the largest singlet weight
    int singlet_index = 0;
    double best = -1.0;
    for (int k = 0; k < 4; ++k) {
      const double overlap = std::abs(singlet.dot(solver.eigenvectors().col(k)));
      if (overlap > best + 1e-12) {
        best = overlap;
        singlet_index = k;
      }
    }
    s.eigenvalues[0] = solver.eigenvalues()(singlet_index);
    s.eigenvectors[0] = solver.eigenvectors().col(singlet_index).normalized();
    int n = 0;
    for (int k = 0; k < 4; ++k) {
      if (k == singlet_index) continue;
      roots[n] = solver.eigenvalues()(k);
      root_vectors[n] = solver.eigenvectors().col(k).normalized();
      ++n;
    }
  }

  const auto ordered = order_symmetric_roots(roots);
  for (int k = 0; k < 3; ++k) {
    // locate the vector belonging to each ordered root
    int src = 0;
    for (int m = 1; m < 3; ++m)
      if (std::abs(roots[m] - ordered[k]) < std::abs(roots[src] - ordered[k])) src = m;
    s.eigenvalues[k + 1] = roots[src];
    s.eigenvectors[k + 1] = root_vectors[src];
    roots[src] = Complex(std::numeric_limits<double>::infinity(), 0.0);
  }
  for (auto& v : s.eigenvectors) fix_global_phase(v);
  s.max_residual = max_residual_of(h, s.eigenvalues, s.eigenvectors);
  return s;
}

Spectrum solve_spectrum(const SystemParams& p) {
  if (std::abs(p.omega) <= 1e-12) return oracle_spectrum(p);
  try {
    return closed_form_spectrum(p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateCubic) return oracle_spectrum(p);
    throw;
  }
}

double eigenvalue_multiset_distance(const Eigenvalues& a, const Eigenvalues& b) {
  std::array<int, 4> perm{0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a[k] - b[perm[k]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

PhaseLabel classify_phase(const SystemParams& p, double tol_phase, double tol_gap) {
  Eigenvalues values;
  try {
    values = eigenvalues_closed_form(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateCubic) throw;
    values = oracle_spectrum(p).eigenvalues;
  }
  PhaseLabel label;
  for (const auto& e : values) label.max_imag = std::max(label.max_imag, std::abs(e.imag()));
  label.pair_gap = std::abs(values[2] - values[3]);
  if (label.max_imag > tol_phase)
    label.phase = Phase::PTBroken;
  else if (label.pair_gap <= tol_gap)
    label.phase = Phase::NearEP;
  else
    label.phase = Phase::PTSymmetric;
  return label;
}

}  // namespace ptq
