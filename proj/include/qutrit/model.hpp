#pragma once

// The two three-dimensional qutrit models.
//
// Both place a state at (z1, z2, w): (z1, z2) are its Z1/Z2 Bloch coordinates,
// which faithfully embed the diagonal states as the base triangle, and |w| is
// the norm of the six offdiagonal coordinates.
//
//  * Q1: w >= 0. A hemisphere of radius sqrt(2) with the three spherical
//    segments beyond the base triangle cut off by vertical half-discs.
//  * Q2: Q1 plus a lower part w < 0 bounded by the mirror image of the
//    rank-3-only region: three 30-degree half-cones with apexes at the basis
//    states, tangent to a lower spherical cap of radius 1/sqrt(2). The sign of
//    w is chosen by peeling the state to rank 2 and comparing with that
//    envelope.

#include <array>
#include <optional>
#include <stdexcept>

#include "qutrit/bloch.hpp"

namespace qutrit {

enum class ModelVariant { Q1, Q2 };

struct ModelPoint {
  double z1 = 0.0;
  double z2 = 0.0;
  double w = 0.0;
  ModelVariant variant = ModelVariant::Q1;

  double norm() const;
};

struct PlanePoint {
  double z1 = 0.0;
  double z2 = 0.0;
};

/// Raised by boundary profiles for (z1, z2) outside the base triangle.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kTriangleTolerance = 1e-10;
inline constexpr double kBoundaryTolerance = 1e-10;
/// Band within which |w'| and the lower envelope count as equal in the sign rule.
inline constexpr double kSignRuleBand = 1e-10;
inline constexpr double kPeelDegenerateLimit = 1e-9;

/// The base triangle: images of |0>, |1>, |2>. Equilateral, centroid at the
/// origin, circumradius sqrt(2), inradius 1/sqrt(2). The radial shorthand
/// r_j = sqrt(x_j^2 + y_j^2) of each basis pair adds in quadrature to w.
namespace base_triangle {

/// Image of |k><k|.
PlanePoint vertex(int k);
/// Midpoint of the edge opposite vertex k.
PlanePoint edge_midpoint(int k);
/// Barycentric weights (= diagonal of any state projecting to this point).
std::array<double, 3> barycentric(PlanePoint p);
PlanePoint from_barycentric(const std::array<double, 3>& b);
bool contains(PlanePoint p, double tol = kTriangleTolerance);
/// Projects points within `tol` back onto the triangle; throws DomainError
/// for points further out.
PlanePoint clamp(PlanePoint p, double tol = kTriangleTolerance);

inline constexpr double kCircumradius = 1.4142135623730951;   // sqrt(2)
inline constexpr double kInradius = 0.70710678118654757;      // 1/sqrt(2)
/// Distance from a vertex to where its lower cone touches the inner sphere.
inline constexpr double kConeLength = 1.0606601717798212;     // 3/(2 sqrt 2)

}  // namespace base_triangle

/// Upper boundary of both models: sqrt(2 - z1^2 - z2^2).
double w_upper(double z1, double z2);

/// Height h >= 0 of the upper envelope of conv(half-ball radius 1/sqrt(2) with
/// w >= 0, base triangle). Above h in Q1 live rank-2 images; below only rank 3.
double rank3_envelope(double z1, double z2);

/// Lower boundary of Q2: -rank3_envelope(z1, z2).
double w_lower(double z1, double z2);

/// Membership in the closed model body selected by p.variant.
bool contains(const ModelPoint& p);

ModelPoint map_q1(const DensityMatrix& rho);

/// A state with image p in Q1: the diagonal fixed by (z1, z2) and the
/// offdiagonal pattern of the pure state over that diagonal scaled to norm w.
/// Throws DomainError when p is not in Q1.
DensityMatrix witness_state(const ModelPoint& p);

/// (1 - rho) / 2. Its Bloch vector is -1/2 that of rho.
DensityMatrix state_inversion(const DensityMatrix& rho);

/// Euclidean pairing of two Bloch vectors; -1 marks touching dual planes.
double dual_pairing(const BlochVector8& xi, const BlochVector8& eta);

/// p |+2><+2| + (1-p)(|0><0| + |1><1|)/2 with |+2> = (|0> + |1>)/sqrt(2).
DensityMatrix rho_p(double p);
/// Closed form of the dual plane contact state of rho_p(p):
/// (1 - sqrt(2)/(1+3p) Z2 - sqrt(6) p/(1+3p) X1) / 3.
DensityMatrix rho_p_dual(double p);

/// (rho - lambda_min) / (1 - 3 lambda_min), a state of rank <= 2. Returns
/// nullopt when 1 - 3 lambda_min < kPeelDegenerateLimit (rho ~ 1/3).
std::optional<DensityMatrix> peel(const DensityMatrix& rho);

/// Q2 image: |w| as in Q1, sign from the peeled state. The equality case of
/// the comparison goes to the lower part. States with w = 0 keep w = 0.
ModelPoint map_q2(const DensityMatrix& rho);

ModelPoint map_to(ModelVariant variant, const DensityMatrix& rho);

}  // namespace qutrit
