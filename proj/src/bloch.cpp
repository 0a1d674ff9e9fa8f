#include "qutrit/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qutrit {

namespace {

ComplexMatrix3 symmetric_pair(int i, int j, double scale) {
  ComplexMatrix3 m;
  m(i, j) = scale;
  m(j, i) = scale;
  return m;
}

ComplexMatrix3 antisymmetric_pair(int i, int j, double scale) {
  ComplexMatrix3 m;
  m(i, j) = Complex(0.0, -scale);
  m(j, i) = Complex(0.0, scale);
  return m;
}

GellMannBasis build_basis() {
  const double s = std::sqrt(1.5);
  return {symmetric_pair(0, 1, s),
          symmetric_pair(0, 2, s),
          symmetric_pair(1, 2, s),
          antisymmetric_pair(0, 1, s),
          antisymmetric_pair(0, 2, s),
          antisymmetric_pair(1, 2, s),
          ComplexMatrix3::diagonal(s, -s, 0.0),
          ComplexMatrix3::diagonal(1.0, 1.0, -2.0) * std::sqrt(0.5)};
}

}  // namespace

const GellMannBasis& gell_mann() {
  static const GellMannBasis basis = build_basis();
  return basis;
}

std::array<double, 8> BlochVector8::as_array() const {
  return {x[0], x[1], x[2], y[0], y[1], y[2], z[0], z[1]};
}

BlochVector8 BlochVector8::from_array(const std::array<double, 8>& a) {
  return {{a[0], a[1], a[2]}, {a[3], a[4], a[5]}, {a[6], a[7]}};
}

double BlochVector8::dot(const BlochVector8& o) const {
  const auto a = as_array();
  const auto b = o.as_array();
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

double BlochVector8::norm() const { return std::sqrt(dot(*this)); }

double BlochVector8::offdiagonal_norm() const {
  double s = 0.0;
  for (int j = 0; j < 3; ++j) s += x[j] * x[j] + y[j] * y[j];
  return std::sqrt(s);
}

BlochVector8 BlochVector8::operator*(double s) const {
  auto a = as_array();
  for (auto& v : a) v *= s;
  return from_array(a);
}

BlochVector8 BlochVector8::operator+(const BlochVector8& o) const {
  auto a = as_array();
  const auto b = o.as_array();
  for (std::size_t i = 0; i < 8; ++i) a[i] += b[i];
  return from_array(a);
}

BlochVector8 BlochVector8::operator-(const BlochVector8& o) const { return *this + o * -1.0; }

std::string ValidationReport::describe() const {
  std::ostringstream os;
  os.precision(3);
  const char* sep = "";
  if (!hermitian) {
    os << "not Hermitian (max asymmetry " << hermiticity_error << ")";
    sep = "; ";
  }
  if (!unit_trace) {
    os << sep << "trace deviates from 1 by " << trace_error;
    sep = "; ";
  }
  if (!positive) os << sep << "negative eigenvalue " << min_eigenvalue;
  return os.str();
}

ValidationReport validate_state(const ComplexMatrix3& m) {
  ValidationReport r;
  r.hermiticity_error = m.hermiticity_error();
  r.hermitian = r.hermiticity_error <= kHermitianTolerance;
  const Complex tr = m.trace();
  r.trace_error = std::abs(tr - 1.0);
  r.unit_trace = r.trace_error <= kTraceTolerance;
  if (r.hermitian) {
    r.min_eigenvalue = eigh3(m).eigenvalues[0];
    r.positive = r.min_eigenvalue >= -kPositivityTolerance;
  }
  return r;
}

DensityMatrix::DensityMatrix(const ComplexMatrix3& m) : m_(m) {
  const ValidationReport r = validate_state(m);
  if (!r.ok()) throw ValidationError("invalid density matrix: " + r.describe());
}

DensityMatrix assume_state(const ComplexMatrix3& m) { return DensityMatrix(m, DensityMatrix::Unchecked{}); }

DensityMatrix DensityMatrix::maximally_mixed() {
  return assume_state(ComplexMatrix3::identity() * (1.0 / 3.0));
}

DensityMatrix DensityMatrix::basis(int k) {
  if (k < 0 || k > 2) throw std::out_of_range("basis index must be 0, 1 or 2");
  Vector3c v{};
  v[k] = 1.0;
  return assume_state(ComplexMatrix3::outer(v));
}

DensityMatrix DensityMatrix::pure(const Vector3c& psi) {
  const double n = std::sqrt(std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]));
  if (!(n > 0.0)) throw ValidationError("cannot normalize the zero vector");
  return assume_state(ComplexMatrix3::outer({psi[0] / n, psi[1] / n, psi[2] / n}));
}

BlochVector8 to_bloch(const ComplexMatrix3& m) {
  const auto& h = gell_mann();
  std::array<double, 8> a{};
  for (std::size_t j = 0; j < 8; ++j) a[j] = trace_product(h[j], m);
  return BlochVector8::from_array(a);
}

BlochVector8 to_bloch(const DensityMatrix& rho) { return to_bloch(rho.matrix()); }

DensityMatrix BlochDecoding::state() const {
  if (!positive) {
    std::ostringstream os;
    os << "Bloch vector does not describe a state (min eigenvalue " << min_eigenvalue << ")";
    throw ValidationError(os.str());
  }
  return assume_state(matrix);
}

BlochDecoding from_bloch(const BlochVector8& b) {
  const auto& h = gell_mann();
  const auto a = b.as_array();
  ComplexMatrix3 m = ComplexMatrix3::identity();
  for (std::size_t j = 0; j < 8; ++j) m += h[j] * a[j];
  m *= 1.0 / 3.0;
  BlochDecoding d{m, eigh3(m).eigenvalues[0], false};
  d.positive = d.min_eigenvalue >= -kPositivityTolerance;
  return d;
}

double hs_distance(const DensityMatrix& a, const DensityMatrix& b) {
  const ComplexMatrix3 d = a.matrix() - b.matrix();
  return std::sqrt(std::max(0.0, 3.0 * trace_product(d, d)));
}

double bloch_norm(const DensityMatrix& rho) {
  // Same as sqrt(3 Tr rho^2 - 1) but without cancellation near 1/3.
  return to_bloch(rho).norm();
}

}  // namespace qutrit
