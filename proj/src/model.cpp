#include "qutrit/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qutrit {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt32 = std::sqrt(1.5);

// Weights this close to zero are treated as lying on the edge.
constexpr double kEdgeSnap = 1e-15;

// h^2 from the barycentric weights b of the base triangle. With k the largest
// weight, the corner cone at vertex k covers b_k >= 1/2 and has
// h^2 = 6 b_i b_j; the medial triangle carries the sphere of radius 1/sqrt(2),
// h^2 = 1/2 - |z|^2 = 6 (b0 b1 + b0 b2 + b1 b2) - 3/2. Both agree on b_k = 1/2.
// Boundary comparisons are done on squares so that near-zero heights do not
// amplify rounding through sqrt.
double envelope_squared(PlanePoint p) {
  auto b = base_triangle::barycentric(p);
  for (auto& x : b)
    if (x < kEdgeSnap) x = 0.0;
  const int k = static_cast<int>(std::max_element(b.begin(), b.end()) - b.begin());
  const double bi = b[(k + 1) % 3];
  const double bj = b[(k + 2) % 3];
  if (b[k] >= 0.5) return 6.0 * bi * bj;
  return std::max(0.0, 6.0 * (b[k] * (bi + bj) + bi * bj) - 1.5);
}

double upper_squared(PlanePoint p) { return std::max(0.0, 2.0 - (p.z1 * p.z1 + p.z2 * p.z2)); }

PlanePoint checked_plane_point(double z1, double z2) {
  return base_triangle::clamp({z1, z2});
}

}  // namespace

double ModelPoint::norm() const { return std::sqrt(z1 * z1 + z2 * z2 + w * w); }

namespace base_triangle {

PlanePoint vertex(int k) {
  switch (k) {
    case 0: return {kSqrt32, std::sqrt(0.5)};
    case 1: return {-kSqrt32, std::sqrt(0.5)};
    case 2: return {0.0, -kSqrt2};
    default: throw std::out_of_range("triangle vertex index must be 0, 1 or 2");
  }
}

PlanePoint edge_midpoint(int k) {
  const PlanePoint a = vertex((k + 1) % 3);
  const PlanePoint b = vertex((k + 2) % 3);
  return {(a.z1 + b.z1) / 2.0, (a.z2 + b.z2) / 2.0};
}

std::array<double, 3> barycentric(PlanePoint p) {
  const double p2 = (1.0 - kSqrt2 * p.z2) / 3.0;
  const double diff = p.z1 / kSqrt32;
  return {(1.0 - p2 + diff) / 2.0, (1.0 - p2 - diff) / 2.0, p2};
}

PlanePoint from_barycentric(const std::array<double, 3>& b) {
  return {kSqrt32 * (b[0] - b[1]), (b[0] + b[1] - 2.0 * b[2]) / kSqrt2};
}

bool contains(PlanePoint p, double tol) {
  const auto b = barycentric(p);
  return std::all_of(b.begin(), b.end(), [tol](double x) { return x >= -tol; });
}

PlanePoint clamp(PlanePoint p, double tol) {
  auto b = barycentric(p);
  if (std::all_of(b.begin(), b.end(), [](double x) { return x >= 0.0; })) return p;
  if (!std::all_of(b.begin(), b.end(), [tol](double x) { return x >= -tol; })) {
    std::ostringstream os;
    os << "point (" << p.z1 << ", " << p.z2 << ") lies outside the base triangle";
    throw DomainError(os.str());
  }
  for (auto& x : b) x = std::max(0.0, x);
  const double s = b[0] + b[1] + b[2];
  for (auto& x : b) x /= s;
  return from_barycentric(b);
}

}  // namespace base_triangle

double w_upper(double z1, double z2) { return std::sqrt(upper_squared(checked_plane_point(z1, z2))); }

double rank3_envelope(double z1, double z2) {
  return std::sqrt(envelope_squared(checked_plane_point(z1, z2)));
}

double w_lower(double z1, double z2) { return -rank3_envelope(z1, z2); }

bool contains(const ModelPoint& p) {
  if (!base_triangle::contains({p.z1, p.z2})) return false;
  const PlanePoint q = base_triangle::clamp({p.z1, p.z2});
  const double w2 = p.w * p.w;
  if (p.w >= 0.0) return w2 <= upper_squared(q) + kBoundaryTolerance;
  if (p.variant == ModelVariant::Q1) return p.w >= -kBoundaryTolerance;
  return w2 <= envelope_squared(q) + kBoundaryTolerance;
}

ModelPoint map_q1(const DensityMatrix& rho) {
  const BlochVector8 b = to_bloch(rho);
  return {b.z[0], b.z[1], b.offdiagonal_norm(), ModelVariant::Q1};
}

DensityMatrix witness_state(const ModelPoint& p) {
  ModelPoint q1 = p;
  q1.variant = ModelVariant::Q1;
  if (!contains(q1)) {
    std::ostringstream os;
    os << "point (" << p.z1 << ", " << p.z2 << ", " << p.w << ") is not in Q1";
    throw DomainError(os.str());
  }
  const PlanePoint q = base_triangle::clamp({p.z1, p.z2});
  auto d = base_triangle::barycentric(q);
  for (auto& x : d) x = std::max(0.0, x);
  const double top = std::sqrt(upper_squared(q));
  const double scale = top > 0.0 ? std::min(1.0, std::max(0.0, p.w) / top) : 0.0;
  ComplexMatrix3 m = ComplexMatrix3::diagonal(d[0], d[1], d[2]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) m(i, j) = scale * std::sqrt(d[i] * d[j]);
  return assume_state(m);
}

DensityMatrix state_inversion(const DensityMatrix& rho) {
  return assume_state((ComplexMatrix3::identity() - rho.matrix()) * 0.5);
}

double dual_pairing(const BlochVector8& xi, const BlochVector8& eta) { return xi.dot(eta); }

namespace {
void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "mixing parameter p = " << p << " is outside [0, 1]";
    throw std::out_of_range(os.str());
  }
}
}  // namespace

DensityMatrix rho_p(double p) {
  require_probability(p);
  ComplexMatrix3 m = ComplexMatrix3::diagonal(0.5, 0.5, 0.0);
  m(0, 1) = p / 2.0;
  m(1, 0) = p / 2.0;
  return assume_state(m);
}

DensityMatrix rho_p_dual(double p) {
  require_probability(p);
  const auto& h = gell_mann();
  const double denom = 1.0 + 3.0 * p;
  ComplexMatrix3 m = ComplexMatrix3::identity() - h[7] * (kSqrt2 / denom) - h[0] * (std::sqrt(6.0) * p / denom);
  return assume_state(m * (1.0 / 3.0));
}

std::optional<DensityMatrix> peel(const DensityMatrix& rho) {
  const double lmin = eigh3(rho.matrix()).eigenvalues[0];
  const double denom = 1.0 - 3.0 * lmin;
  if (denom < kPeelDegenerateLimit) return std::nullopt;
  return assume_state((rho.matrix() - ComplexMatrix3::identity() * lmin) * (1.0 / denom));
}

ModelPoint map_q2(const DensityMatrix& rho) {
  ModelPoint p = map_q1(rho);
  p.variant = ModelVariant::Q2;
  if (p.w == 0.0) return p;
  const auto peeled = peel(rho);
  if (!peeled) return {0.0, 0.0, 0.0, ModelVariant::Q2};
  const ModelPoint q = map_q1(*peeled);
  const double h = rank3_envelope(q.z1, q.z2);
  if (!(q.w > h + kSignRuleBand)) p.w = -p.w;
  return p;
}

ModelPoint map_to(ModelVariant variant, const DensityMatrix& rho) {
  return variant == ModelVariant::Q1 ? map_q1(rho) : map_q2(rho);
}

}  // namespace qutrit
