#pragma once

// Gell-Mann basis (normalized to Tr(h_i h_j) = 3 delta_ij) and the
// eight-dimensional Bloch representation of qutrit states.
//
// Basis order is (X1, X2, X3, Y1, Y2, Y3, Z1, Z2) with
//   X1, Y1 coupling |0> <-> |1>
//   X2, Y2 coupling |0> <-> |2>
//   X3, Y3 coupling |1> <-> |2>
//   Z1 = sqrt(3/2) diag(1, -1, 0),  Z2 = diag(1, 1, -2) / sqrt(2).
// This is NOT the usual particle-physics enumeration (lambda_1..lambda_8) and
// the normalization is to the dimension 3 rather than to 2.

#include <array>
#include <optional>
#include <string>

#include "qutrit/herm3.hpp"

namespace qutrit {

using GellMannBasis = std::array<ComplexMatrix3, 8>;

/// The eight basis matrices in the order documented above.
const GellMannBasis& gell_mann();

struct BlochVector8 {
  std::array<double, 3> x{};
  std::array<double, 3> y{};
  std::array<double, 2> z{};

  /// (x1, x2, x3, y1, y2, y3, z1, z2)
  std::array<double, 8> as_array() const;
  static BlochVector8 from_array(const std::array<double, 8>& a);

  double dot(const BlochVector8& o) const;
  double norm() const;
  /// Norm of the six offdiagonal coordinates.
  double offdiagonal_norm() const;

  BlochVector8 operator*(double s) const;
  BlochVector8 operator+(const BlochVector8& o) const;
  BlochVector8 operator-(const BlochVector8& o) const;
};

inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kPositivityTolerance = 1e-10;

/// Outcome of checking a matrix against the density-matrix conditions.
struct ValidationReport {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;

  bool ok() const { return hermitian && unit_trace && positive; }
  /// Human-readable list of the failed conditions; empty when ok().
  std::string describe() const;
};

ValidationReport validate_state(const ComplexMatrix3& m);

/// A validated qutrit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Throws ValidationError (with the report text) when `m` is not a state.
  explicit DensityMatrix(const ComplexMatrix3& m);

  static DensityMatrix maximally_mixed();
  /// |k><k| for k in {0, 1, 2}.
  static DensityMatrix basis(int k);
  /// |psi><psi| after normalizing psi.
  static DensityMatrix pure(const Vector3c& psi);

  const ComplexMatrix3& matrix() const { return m_; }
  double purity() const { return trace_product(m_, m_); }

 private:
  struct Unchecked {};
  DensityMatrix(const ComplexMatrix3& m, Unchecked) : m_(m) {}
  friend DensityMatrix assume_state(const ComplexMatrix3& m);

  ComplexMatrix3 m_;
};

/// Wraps a matrix known to be a state by construction (no validation).
DensityMatrix assume_state(const ComplexMatrix3& m);

BlochVector8 to_bloch(const DensityMatrix& rho);
/// Coordinates Tr(h_j M) for any matrix; used for non-state probes.
BlochVector8 to_bloch(const ComplexMatrix3& m);

struct BlochDecoding {
  ComplexMatrix3 matrix;
  double min_eigenvalue = 0.0;
  bool positive = false;

  /// The decoded state; throws ValidationError when not positive.
  DensityMatrix state() const;
};

/// rho = (1 + b . h) / 3. Never fails; `positive` reports whether the
/// result is a state.
BlochDecoding from_bloch(const BlochVector8& b);

/// sqrt(3 Tr[(rho1 - rho2)^2]).
double hs_distance(const DensityMatrix& a, const DensityMatrix& b);

/// sqrt(3 Tr rho^2 - 1), the distance from the maximally mixed state.
double bloch_norm(const DensityMatrix& rho);

}  // namespace qutrit
