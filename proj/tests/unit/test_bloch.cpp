#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qutrit/bloch.hpp"

using namespace qutrit;

namespace {
const double kS2 = std::sqrt(2.0);
const double kS32 = std::sqrt(1.5);
}  // namespace

TEST_SUITE("bloch") {

TEST_CASE("basis matches the explicit matrices") {
  const auto& h = gell_mann();
  const Complex i(0.0, 1.0);
  ComplexMatrix3 x1, y3;
  x1(0, 1) = x1(1, 0) = kS32;
  y3(1, 2) = -i * kS32;
  y3(2, 1) = i * kS32;
  CHECK(max_abs_diff(h[0], x1) < 1e-15);
  CHECK(max_abs_diff(h[5], y3) < 1e-15);
  CHECK(max_abs_diff(h[6], ComplexMatrix3::diagonal(kS32, -kS32, 0.0)) < 1e-15);
  CHECK(max_abs_diff(h[7], ComplexMatrix3::diagonal(1 / kS2, 1 / kS2, -2 / kS2)) < 1e-15);
}

TEST_CASE("orthonormality Tr(h_i h_j) = 3 delta_ij") {
  const auto& h = gell_mann();
  for (int a = 0; a < 8; ++a) {
    CHECK(std::abs(h[a].trace()) < 1e-15);
    CHECK(h[a].hermiticity_error() == 0.0);
    for (int b = 0; b < 8; ++b) CHECK(std::abs((h[a] * h[b]).trace() - Complex(a == b ? 3.0 : 0.0)) < 1e-12);
  }
  CHECK(std::abs(trace_product(h[6], h[6]) - 3.0) < 1e-12);
  CHECK(std::abs(trace_product(h[6], h[7])) < 1e-12);
  CHECK(std::abs(h[0].trace()) == 0.0);
}

TEST_CASE("to_bloch examples") {
  const BlochVector8 b2 = to_bloch(DensityMatrix::basis(2));
  CHECK(std::abs(b2.z[0]) < 1e-15);
  CHECK(std::abs(b2.z[1] + kS2) < 1e-15);
  CHECK(b2.offdiagonal_norm() == 0.0);

  CHECK(to_bloch(DensityMatrix::maximally_mixed()).norm() < 1e-15);

  const BlochVector8 p = to_bloch(DensityMatrix::pure({1.0, 1.0, 0.0}));
  CHECK(std::abs(p.z[0]) < 1e-15);
  CHECK(std::abs(p.z[1] - 1 / kS2) < 1e-15);
  CHECK(std::abs(p.x[0] - kS32) < 1e-15);
  CHECK(std::abs(p.x[1]) + std::abs(p.x[2]) + std::abs(p.y[0]) + std::abs(p.y[1]) + std::abs(p.y[2]) < 1e-15);
}

TEST_CASE("to_bloch agrees with the entry formula") {
  for (int n = 0; n < 500; ++n) {
    const DensityMatrix rho = testing::random_state();
    const auto ref = oracle::bloch(rho.matrix());
    const auto got = to_bloch(rho).as_array();
    for (int k = 0; k < 8; ++k) CHECK(std::abs(got[k] - ref[k]) < 1e-14);
  }
}

TEST_CASE("from_bloch examples") {
  const BlochDecoding zero = from_bloch({});
  CHECK(zero.positive);
  CHECK(max_abs_diff(zero.matrix, ComplexMatrix3::identity() * (1.0 / 3.0)) < 1e-15);

  BlochVector8 b;
  b.z = {0.0, -kS2};
  const BlochDecoding d = from_bloch(b);
  CHECK(d.positive);
  CHECK(max_abs_diff(d.matrix, ComplexMatrix3::diagonal(0.0, 0.0, 1.0)) < 1e-15);

  b.z = {0.0, -2 * kS2};
  const BlochDecoding bad = from_bloch(b);
  CHECK_FALSE(bad.positive);
  CHECK(bad.min_eigenvalue < 0.0);
  CHECK(std::abs(bad.matrix.trace() - Complex(1.0)) < 1e-15);
  CHECK_THROWS_AS(bad.state(), ValidationError);
}

TEST_CASE("round trip and purity identity") {
  for (int n = 0; n < 1000; ++n) {
    const DensityMatrix rho = testing::random_state();
    const BlochVector8 b = to_bloch(rho);
    CHECK(max_abs_diff(from_bloch(b).matrix, rho.matrix()) <= 1e-12);
    const double nb = b.norm();
    CHECK(std::abs(3 * rho.purity() - 1 - nb * nb) <= 1e-10);
    CHECK(nb * nb <= 2 + 1e-10);
  }
  for (int n = 0; n < 200; ++n) CHECK(std::abs(to_bloch(testing::random_pure()).norm() - kS2) < 1e-12);
}

TEST_CASE("basis simplex") {
  double pts[3][2];
  for (int k = 0; k < 3; ++k) {
    const BlochVector8 b = to_bloch(DensityMatrix::basis(k));
    pts[k][0] = b.z[0];
    pts[k][1] = b.z[1];
    CHECK(std::abs(std::hypot(b.z[0], b.z[1]) - kS2) <= 1e-12);
  }
  for (int k = 0; k < 3; ++k) {
    const int j = (k + 1) % 3;
    const int m = (k + 2) % 3;
    CHECK(std::abs(std::hypot(pts[k][0] - pts[j][0], pts[k][1] - pts[j][1]) - std::sqrt(6.0)) <= 1e-12);
    // inradius: distance from the origin to the midpoint of edge (j, m)
    CHECK(std::abs(std::hypot((pts[j][0] + pts[m][0]) / 2, (pts[j][1] + pts[m][1]) / 2) - 1 / kS2) <= 1e-12);
  }
  CHECK(std::abs(pts[0][0] + pts[1][0] + pts[2][0]) < 1e-15);
  CHECK(std::abs(pts[0][1] + pts[1][1] + pts[2][1]) < 1e-15);
}

TEST_CASE("validation") {
  CHECK(validate_state(ComplexMatrix3::diagonal(0.2, 0.3, 0.5)).ok());
  const ValidationReport trace = validate_state(ComplexMatrix3::diagonal(0.3, 0.3, 0.3));
  CHECK_FALSE(trace.unit_trace);
  CHECK(trace.describe().find("trace") != std::string::npos);
  const ValidationReport neg = validate_state(ComplexMatrix3::diagonal(-0.1, 0.6, 0.5));
  CHECK_FALSE(neg.positive);
  CHECK(neg.describe().find("negative eigenvalue") != std::string::npos);
  ComplexMatrix3 asym = ComplexMatrix3::diagonal(0.2, 0.3, 0.5);
  asym(0, 1) = 0.1;
  CHECK_FALSE(validate_state(asym).hermitian);
  CHECK_THROWS_AS(DensityMatrix{asym}, ValidationError);
  // tolerances: trace within 1e-9, eigenvalue above -1e-10
  CHECK(validate_state(ComplexMatrix3::diagonal(0.2, 0.3, 0.5 + 5e-10)).ok());
  CHECK(validate_state(ComplexMatrix3::diagonal(-5e-11, 0.5, 0.5 + 5e-11)).ok());
  CHECK_FALSE(validate_state(ComplexMatrix3::diagonal(-5e-10, 0.5, 0.5 + 5e-10)).ok());
}

TEST_CASE("hs_distance") {
  const DensityMatrix rho = testing::random_state();
  CHECK(hs_distance(rho, rho) == 0.0);
  CHECK(std::abs(hs_distance(DensityMatrix::basis(2), DensityMatrix::maximally_mixed()) - kS2) < 1e-12);
  CHECK(std::abs(hs_distance(DensityMatrix::basis(0), DensityMatrix::basis(1)) - std::sqrt(6.0)) < 1e-12);
  for (int n = 0; n < 200; ++n) {
    const DensityMatrix a = testing::random_state();
    const DensityMatrix b = testing::random_state();
    CHECK(std::abs(hs_distance(a, b) - (to_bloch(a) - to_bloch(b)).norm()) <= 1e-12);
  }
}

TEST_CASE("bloch_norm") {
  CHECK(std::abs(bloch_norm(testing::random_pure()) - kS2) < 1e-12);
  CHECK(bloch_norm(DensityMatrix::maximally_mixed()) < 1e-15);
  CHECK(std::abs(bloch_norm(DensityMatrix(ComplexMatrix3::diagonal(0.6, 0.3, 0.1))) - std::sqrt(0.38)) < 1e-12);
}

}  // TEST_SUITE
