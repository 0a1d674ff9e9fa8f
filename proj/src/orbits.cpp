#include "qutrit/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qutrit {

EigenvalueTriple::EigenvalueTriple(double a, double b, double c) : v_{a, b, c} {
  const double sum = a + b + c;
  const bool in_range = std::all_of(v_.begin(), v_.end(), [](double x) { return x >= 0.0 && x <= 1.0; });
  if (!in_range || std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "eigenvalues (" << a << ", " << b << ", " << c << ") are not a probability vector";
    throw std::invalid_argument(os.str());
  }
}

std::array<double, 3> EigenvalueTriple::sorted_descending() const {
  auto s = v_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

namespace {
double cross(PlanePoint o, PlanePoint a, PlanePoint b) {
  return (a.z1 - o.z1) * (b.z2 - o.z2) - (a.z2 - o.z2) * (b.z1 - o.z1);
}
}  // namespace

std::vector<PlanePoint> convex_hull(std::vector<PlanePoint> pts, double dedup_tol) {
  std::sort(pts.begin(), pts.end(), [](PlanePoint a, PlanePoint b) {
    return a.z1 < b.z1 || (a.z1 == b.z1 && a.z2 < b.z2);
  });
  std::vector<PlanePoint> unique;
  for (const auto& p : pts) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](PlanePoint q) {
      return std::hypot(p.z1 - q.z1, p.z2 - q.z2) <= dedup_tol;
    });
    if (!dup) unique.push_back(p);
  }
  if (unique.size() < 3) return unique;

  std::vector<PlanePoint> hull(2 * unique.size());
  std::size_t k = 0;
  for (const auto& p : unique) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= dedup_tol * dedup_tol) --k;
    hull[k++] = p;
  }
  for (std::size_t i = unique.size() - 1, t = k + 1; i-- > 0;) {
    const auto& p = unique[i];
    while (k >= t && cross(hull[k - 2], hull[k - 1], p) <= dedup_tol * dedup_tol) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

bool PlanarPolygon::contains(PlanePoint p, double tol) const {
  if (vertices.empty()) return false;
  if (vertices.size() == 1)
    return std::hypot(p.z1 - vertices[0].z1, p.z2 - vertices[0].z2) <= tol;
  if (vertices.size() == 2) {
    const PlanePoint a = vertices[0];
    const PlanePoint b = vertices[1];
    const double len = std::hypot(b.z1 - a.z1, b.z2 - a.z2);
    const double u = ((p.z1 - a.z1) * (b.z1 - a.z1) + (p.z2 - a.z2) * (b.z2 - a.z2)) / (len * len);
    const double uc = std::clamp(u, 0.0, 1.0);
    return std::hypot(p.z1 - (a.z1 + uc * (b.z1 - a.z1)), p.z2 - (a.z2 + uc * (b.z2 - a.z2))) <= tol;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const PlanePoint a = vertices[i];
    const PlanePoint b = vertices[(i + 1) % vertices.size()];
    const double len = std::hypot(b.z1 - a.z1, b.z2 - a.z2);
    // signed distance to the left of edge a->b
    if (cross(a, b, p) / len < -tol) return false;
  }
  return true;
}

PlanePoint PlanarPolygon::centroid() const {
  PlanePoint c;
  for (const auto& v : vertices) {
    c.z1 += v.z1;
    c.z2 += v.z2;
  }
  const double n = static_cast<double>(vertices.size());
  return {c.z1 / n, c.z2 / n};
}

PlanarPolygon birkhoff_polygon(const EigenvalueTriple& lambda) {
  std::array<int, 3> perm{0, 1, 2};
  std::vector<PlanePoint> images;
  const auto& l = lambda.values();
  do {
    images.push_back(base_triangle::from_barycentric({l[perm[0]], l[perm[1]], l[perm[2]]}));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {convex_hull(std::move(images))};
}

double orbit_radius(const EigenvalueTriple& lambda) {
  const auto& l = lambda.values();
  return std::sqrt(std::max(0.0, 3.0 * (l[0] * l[0] + l[1] * l[1] + l[2] * l[2]) - 1.0));
}

bool majorizes(const EigenvalueTriple& p, const EigenvalueTriple& q) {
  const auto a = p.sorted_descending();
  const auto b = q.sorted_descending();
  constexpr double tol = 1e-12;
  return a[0] >= b[0] - tol && a[0] + a[1] >= b[0] + b[1] - tol;
}

std::optional<ModelPoint> orbit_point(const EigenvalueTriple& lambda, double z1, double z2) {
  const PlanarPolygon poly = birkhoff_polygon(lambda);
  if (!poly.contains({z1, z2})) return std::nullopt;
  const double r = orbit_radius(lambda);
  return ModelPoint{z1, z2, std::sqrt(std::max(0.0, r * r - z1 * z1 - z2 * z2)), ModelVariant::Q1};
}

}  // namespace qutrit
