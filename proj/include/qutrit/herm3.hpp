#pragma once

// Fixed-size complex 3x3 matrices and a Hermitian eigensolver.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace qutrit {

using Complex = std::complex<double>;
using Vector3c = std::array<Complex, 3>;

/// Dense 3x3 complex matrix, row-major.
class ComplexMatrix3 {
 public:
  constexpr ComplexMatrix3() = default;
  explicit ComplexMatrix3(const std::array<Complex, 9>& entries) : a_(entries) {}

  static ComplexMatrix3 identity();
  static ComplexMatrix3 diagonal(double d0, double d1, double d2);
  /// |v><v|
  static ComplexMatrix3 outer(const Vector3c& v);
  /// Columns are the given vectors.
  static ComplexMatrix3 from_columns(const Vector3c& c0, const Vector3c& c1, const Vector3c& c2);

  Complex& operator()(int i, int j) { return a_[3 * i + j]; }
  const Complex& operator()(int i, int j) const { return a_[3 * i + j]; }

  Vector3c column(int j) const { return {a_[j], a_[3 + j], a_[6 + j]}; }

  ComplexMatrix3 adjoint() const;
  Complex trace() const { return a_[0] + a_[4] + a_[8]; }
  Complex determinant() const;
  /// Frobenius norm.
  double norm() const;
  /// max |a_ij - conj(a_ji)|
  double hermiticity_error() const;

  ComplexMatrix3& operator+=(const ComplexMatrix3& o);
  ComplexMatrix3& operator-=(const ComplexMatrix3& o);
  ComplexMatrix3& operator*=(Complex s);

  friend ComplexMatrix3 operator+(ComplexMatrix3 a, const ComplexMatrix3& b) { return a += b; }
  friend ComplexMatrix3 operator-(ComplexMatrix3 a, const ComplexMatrix3& b) { return a -= b; }
  friend ComplexMatrix3 operator*(ComplexMatrix3 a, Complex s) { return a *= s; }
  friend ComplexMatrix3 operator*(Complex s, ComplexMatrix3 a) { return a *= s; }
  friend ComplexMatrix3 operator*(const ComplexMatrix3& a, const ComplexMatrix3& b);
  friend Vector3c operator*(const ComplexMatrix3& a, const Vector3c& v);

  friend bool operator==(const ComplexMatrix3&, const ComplexMatrix3&) = default;

  const std::array<Complex, 9>& entries() const { return a_; }

 private:
  std::array<Complex, 9> a_{};
};

/// Re Tr(A B), the Hilbert-Schmidt inner product for Hermitian A, B.
double trace_product(const ComplexMatrix3& a, const ComplexMatrix3& b);

/// Max elementwise |a - b|.
double max_abs_diff(const ComplexMatrix3& a, const ComplexMatrix3& b);

/// Thrown when an operation receives a matrix outside its domain.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending; column k of
/// `eigenvectors` belongs to `eigenvalues[k]`. Each eigenvector is normalized
/// with its first non-negligible component real and positive.
struct Spectrum {
  std::array<double, 3> eigenvalues{};
  ComplexMatrix3 eigenvectors;
};

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kDefaultRankTolerance = 1e-9;
/// Eigenvalue gap below which the closed-form route hands over to Jacobi.
inline constexpr double kDegenerateGap = 1e-8;

/// Closed-form (trigonometric Cardano) eigenvalues with cross-product
/// eigenvectors; falls back to cyclic Jacobi near degeneracy or when the
/// closed-form residual is poor. Throws ValidationError for non-Hermitian input.
Spectrum eigh3(const ComplexMatrix3& h);

/// The two routes behind eigh3, exposed for cross-validation.
Spectrum eigh3_cardano(const ComplexMatrix3& h);
Spectrum eigh3_jacobi(const ComplexMatrix3& h);

/// Number of eigenvalues with |lambda| > tol.
int rank_of(const ComplexMatrix3& h, double tol = kDefaultRankTolerance);

}  // namespace qutrit
