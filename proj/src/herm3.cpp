#include "qutrit/herm3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace qutrit {

ComplexMatrix3 ComplexMatrix3::identity() { return diagonal(1.0, 1.0, 1.0); }

ComplexMatrix3 ComplexMatrix3::diagonal(double d0, double d1, double d2) {
  ComplexMatrix3 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

ComplexMatrix3 ComplexMatrix3::outer(const Vector3c& v) {
  ComplexMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix3 ComplexMatrix3::from_columns(const Vector3c& c0, const Vector3c& c1,
                                            const Vector3c& c2) {
  ComplexMatrix3 m;
  for (int i = 0; i < 3; ++i) {
    m(i, 0) = c0[i];
    m(i, 1) = c1[i];
    m(i, 2) = c2[i];
  }
  return m;
}

ComplexMatrix3 ComplexMatrix3::adjoint() const {
  ComplexMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = std::conj((*this)(j, i));
  return m;
}

Complex ComplexMatrix3::determinant() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double ComplexMatrix3::norm() const {
  double s = 0.0;
  for (const auto& c : a_) s += std::norm(c);
  return std::sqrt(s);
}

double ComplexMatrix3::hermiticity_error() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

ComplexMatrix3& ComplexMatrix3::operator+=(const ComplexMatrix3& o) {
  for (std::size_t k = 0; k < 9; ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix3& ComplexMatrix3::operator-=(const ComplexMatrix3& o) {
  for (std::size_t k = 0; k < 9; ++k) a_[k] -= o.a_[k];
  return *this;
}

ComplexMatrix3& ComplexMatrix3::operator*=(Complex s) {
  for (auto& c : a_) c *= s;
  return *this;
}

ComplexMatrix3 operator*(const ComplexMatrix3& a, const ComplexMatrix3& b) {
  ComplexMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return m;
}

Vector3c operator*(const ComplexMatrix3& a, const Vector3c& v) {
  Vector3c r{};
  for (int i = 0; i < 3; ++i) r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
  return r;
}

double trace_product(const ComplexMatrix3& a, const ComplexMatrix3& b) {
  Complex s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, i);
  return s.real();
}

double max_abs_diff(const ComplexMatrix3& a, const ComplexMatrix3& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 9; ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

namespace {

void require_hermitian(const ComplexMatrix3& h) {
  const double err = h.hermiticity_error();
  if (!(err <= kHermitianTolerance * std::max(1.0, h.norm()))) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |H_ij - conj(H_ji)| = " << err;
    throw ValidationError(os.str());
  }
}

double vnorm(const Vector3c& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

// Bilinear cross product: a . (a x b) = b . (a x b) = 0 without conjugation.
Vector3c cross(const Vector3c& a, const Vector3c& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vector3c conj(const Vector3c& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }

// <a|b>
Complex inner(const Vector3c& a, const Vector3c& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

Vector3c scaled(const Vector3c& v, Complex s) { return {v[0] * s, v[1] * s, v[2] * s}; }

// Null vector of (H - lambda 1) from the best-conditioned pair of rows.
Vector3c null_vector(const ComplexMatrix3& h, double lambda) {
  ComplexMatrix3 a = h - ComplexMatrix3::identity() * lambda;
  const Vector3c r0{a(0, 0), a(0, 1), a(0, 2)};
  const Vector3c r1{a(1, 0), a(1, 1), a(1, 2)};
  const Vector3c r2{a(2, 0), a(2, 1), a(2, 2)};
  std::array<Vector3c, 3> cands{cross(r0, r1), cross(r0, r2), cross(r1, r2)};
  auto best = std::max_element(cands.begin(), cands.end(), [](const auto& x, const auto& y) {
    return vnorm(x) < vnorm(y);
  });
  const double n = vnorm(*best);
  return n > 0.0 ? scaled(*best, 1.0 / n) : Vector3c{1.0, 0.0, 0.0};
}

Vector3c phase_normalized(Vector3c v) {
  const double n = vnorm(v);
  if (n > 0.0) v = scaled(v, 1.0 / n);
  for (auto& c : v) {
    if (std::abs(c) > 1e-12) {
      const double mag = std::abs(c);
      v = scaled(v, std::conj(c) / mag);
      c = mag;
      break;
    }
  }
  return v;
}

bool lex_greater(const Vector3c& a, const Vector3c& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() > b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() > b[i].imag();
  }
  return false;
}

Spectrum finalize(std::array<double, 3> values, std::array<Vector3c, 3> vectors) {
  std::array<int, 3> order{0, 1, 2};
  for (auto& v : vectors) v = phase_normalized(v);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return values[i] < values[j]; });
  Spectrum s;
  for (int k = 0; k < 3; ++k) s.eigenvalues[k] = values[order[k]];
  // Equal eigenvalues: lexicographically larger eigenvector first. Only the
  // vectors move, so the values stay ascending.
  for (int pass = 0; pass < 2; ++pass) {
    for (int k = 0; k < 2; ++k) {
      if (s.eigenvalues[k + 1] - s.eigenvalues[k] <= 1e-12 && lex_greater(vectors[order[k + 1]], vectors[order[k]]))
        std::swap(order[k], order[k + 1]);
    }
  }
  s.eigenvectors =
      ComplexMatrix3::from_columns(vectors[order[0]], vectors[order[1]], vectors[order[2]]);
  return s;
}

double residual(const ComplexMatrix3& h, const Spectrum& s) {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Vector3c v = s.eigenvectors.column(k);
    const Vector3c hv = h * v;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(hv[i] - s.eigenvalues[k] * v[i]));
  }
  return worst;
}

std::array<double, 3> cardano_values(const ComplexMatrix3& h) {
  const double shift = h.trace().real() / 3.0;
  ComplexMatrix3 k = h - ComplexMatrix3::identity() * shift;
  const double p = k.norm() * k.norm() / 6.0;
  if (p <= 0.0) return {shift, shift, shift};
  const double q = k.determinant().real() / 2.0;
  const double ratio = std::clamp(q / (p * std::sqrt(p)), -1.0, 1.0);
  const double phi = std::acos(ratio) / 3.0;
  const double r = 2.0 * std::sqrt(p);
  const double third = 2.0 * std::numbers::pi / 3.0;
  std::array<double, 3> v{shift + r * std::cos(phi), shift + r * std::cos(phi + third),
                          shift + r * std::cos(phi + 2.0 * third)};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Spectrum eigh3_cardano(const ComplexMatrix3& h) {
  require_hermitian(h);
  const auto values = cardano_values(h);
  // Extremal eigenvectors from cross products, middle one completes the basis.
  Vector3c lo = null_vector(h, values[0]);
  Vector3c hi = null_vector(h, values[2]);
  const Complex overlap = inner(lo, hi);
  for (int i = 0; i < 3; ++i) hi[i] -= overlap * lo[i];
  const double n = vnorm(hi);
  hi = n > 0.0 ? scaled(hi, 1.0 / n) : hi;
  const Vector3c mid = conj(cross(hi, lo));
  return finalize(values, {lo, mid, hi});
}

Spectrum eigh3_jacobi(const ComplexMatrix3& h) {
  require_hermitian(h);
  ComplexMatrix3 a = h;
  ComplexMatrix3 v = ComplexMatrix3::identity();
  const double scale = std::max(h.norm(), 1e-300);
  constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = std::sqrt(std::norm(a(0, 1)) + std::norm(a(0, 2)) + std::norm(a(1, 2)));
    if (off <= 1e-18 * scale) break;
    for (const auto& [p, q] : pairs) {
      const double g = std::abs(a(p, q));
      if (g <= 1e-300) continue;
      const Complex e = a(p, q) / g;
      const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
      const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      ComplexMatrix3 j = ComplexMatrix3::identity();
      j(p, p) = c;
      j(p, q) = s;
      j(q, p) = -s * std::conj(e);
      j(q, q) = c * std::conj(e);
      a = j.adjoint() * a * j;
      v = v * j;
    }
  }
  return finalize({a(0, 0).real(), a(1, 1).real(), a(2, 2).real()},
                  {v.column(0), v.column(1), v.column(2)});
}

Spectrum eigh3(const ComplexMatrix3& h) {
  require_hermitian(h);
  const auto values = cardano_values(h);
  const double gap = std::min(values[1] - values[0], values[2] - values[1]);
  if (gap < kDegenerateGap) return eigh3_jacobi(h);
  Spectrum s = eigh3_cardano(h);
  if (residual(h, s) > 1e-13 * std::max(1.0, h.norm())) return eigh3_jacobi(h);
  return s;
}

int rank_of(const ComplexMatrix3& h, double tol) {
  const Spectrum s = eigh3(h);
  return static_cast<int>(
      std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(), [tol](double l) { return std::abs(l) > tol; }));
}

}  // namespace qutrit
