#pragma once

// Test-side random inputs. These use the standard library generator, not the
// library's sampler, so property tests do not depend on the code under test
// for their inputs.

#include <Eigen/QR>

#include <cmath>
#include <random>

#include "qutrit/bloch.hpp"
#include "../oracles.hpp"

namespace testing {

using qutrit::Complex;
using qutrit::ComplexMatrix3;
using qutrit::DensityMatrix;

inline std::mt19937_64& engine() {
  static std::mt19937_64 e(20240611);
  return e;
}

inline double normal() { return std::normal_distribution<double>()(engine()); }
inline double uniform() { return std::uniform_real_distribution<double>()(engine()); }
inline Complex cnormal() { return {normal(), normal()}; }

inline ComplexMatrix3 random_hermitian(double scale = 1.0) {
  ComplexMatrix3 h;
  for (int i = 0; i < 3; ++i) {
    h(i, i) = scale * normal();
    for (int j = i + 1; j < 3; ++j) {
      h(i, j) = scale * cnormal();
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

inline ComplexMatrix3 random_unitary() {
  Eigen::Matrix3cd g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = cnormal();
  Eigen::HouseholderQR<Eigen::Matrix3cd> qr(g);
  const Eigen::Matrix3cd q = qr.householderQ();
  const Eigen::Matrix3cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  ComplexMatrix3 u;
  for (int j = 0; j < 3; ++j) {
    const Complex phase = r(j, j) / std::abs(r(j, j));
    for (int i = 0; i < 3; ++i) u(i, j) = q(i, j) * phase;
  }
  return u;
}

inline DensityMatrix random_pure() {
  return DensityMatrix::pure({cnormal(), cnormal(), cnormal()});
}

/// Hilbert-Schmidt distributed mixed state.
inline DensityMatrix random_state() {
  ComplexMatrix3 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = cnormal();
  ComplexMatrix3 m = g * g.adjoint();
  m = m * (1.0 / m.trace().real());
  return DensityMatrix((m + m.adjoint()) * 0.5);
}

inline DensityMatrix random_rank2() {
  const ComplexMatrix3 u = random_unitary();
  const double p = uniform();
  ComplexMatrix3 m = u * ComplexMatrix3::diagonal(p, 1.0 - p, 0.0) * u.adjoint();
  return DensityMatrix((m + m.adjoint()) * 0.5);
}

inline double dist(const std::array<double, 3>& a, double z1, double z2, double w) {
  return std::hypot(a[0] - z1, a[1] - z2, a[2] - w);
}

}  // namespace testing
