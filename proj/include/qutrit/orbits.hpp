#pragma once

// Unitary orbits of qutrit states seen through the Q1 model.
//
// Conjugation preserves purity, so an orbit lies on a sphere of radius
// sqrt(3 sum lambda_i^2 - 1). Its shadow on the base triangle is the convex
// hull of the six permutations of the eigenvalues (Schur-Horn), which is the
// projected Birkhoff polytope of distributions majorized by lambda.

#include <array>
#include <optional>
#include <vector>

#include "qutrit/model.hpp"

namespace qutrit {

/// A probability vector of three eigenvalues (any order).
class EigenvalueTriple {
 public:
  /// Throws std::invalid_argument unless entries lie in [0, 1] and sum to 1
  /// within 1e-12.
  EigenvalueTriple(double a, double b, double c);

  const std::array<double, 3>& values() const { return v_; }
  /// Values sorted in descending order.
  std::array<double, 3> sorted_descending() const;

 private:
  std::array<double, 3> v_;
};

/// Counterclockwise convex polygon in the (z1, z2) plane. May hold one vertex
/// (fully degenerate spectrum) or three (doubly degenerate).
struct PlanarPolygon {
  std::vector<PlanePoint> vertices;

  bool contains(PlanePoint p, double tol = 1e-9) const;
  PlanePoint centroid() const;
};

PlanarPolygon birkhoff_polygon(const EigenvalueTriple& lambda);

double orbit_radius(const EigenvalueTriple& lambda);

/// p majorizes q: descending partial sums of p dominate those of q (1e-12).
bool majorizes(const EigenvalueTriple& p, const EigenvalueTriple& q);

/// Point of the orbit sphere above (z1, z2), or nullopt if (z1, z2) is not in
/// the projected polytope.
std::optional<ModelPoint> orbit_point(const EigenvalueTriple& lambda, double z1, double z2);

/// Convex hull (Andrew's monotone chain), counterclockwise, duplicates within
/// `dedup_tol` merged and collinear points dropped.
std::vector<PlanePoint> convex_hull(std::vector<PlanePoint> points, double dedup_tol = 1e-10);

}  // namespace qutrit
