#pragma once

// Kraus channels on a qutrit and their closed-form action in the Q1 model.

#include <string_view>
#include <vector>

#include "qutrit/model.hpp"

namespace qutrit {

inline constexpr double kCompletenessTolerance = 1e-12;

/// A CPTP map given by Kraus operators with sum K^dagger K = 1.
class KrausChannel {
 public:
  /// Throws ValidationError when the completeness relation fails.
  KrausChannel(std::vector<ComplexMatrix3> operators, double gamma);

  const std::vector<ComplexMatrix3>& operators() const { return ops_; }
  double gamma() const { return gamma_; }

  /// max |sum K^dagger K - 1|
  double completeness_error() const;

 private:
  std::vector<ComplexMatrix3> ops_;
  double gamma_;
};

/// Max elementwise deviation of sum K^dagger K from the identity.
double completeness_error(const std::vector<ComplexMatrix3>& operators);

/// sum K rho K^dagger
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

/// K0 = sqrt(1 - 8 gamma/9) 1, K_j = sqrt(gamma/9) h_j for the eight Gell-Mann
/// matrices. Acts as (1 - gamma) rho + (gamma/3) 1.
KrausChannel depolarizing(double gamma);

/// K0 = sqrt(1 - 2 gamma/3) 1, K1 = sqrt(gamma/3) Z1, K2 = sqrt(gamma/3) Z2.
/// Keeps the diagonal, scales every offdiagonal entry by (1 - gamma).
KrausChannel phase_damping(double gamma);

/// Decay of |1> and |2> into |0> at equal rate, no 1<->2 decay:
/// K0 = diag(1, sqrt(1-gamma), sqrt(1-gamma)), K1 = sqrt(gamma)|0><1|,
/// K2 = sqrt(gamma)|0><2|.
KrausChannel amplitude_damping(double gamma);

/// Affine image of the diagonal coordinates under amplitude damping; the
/// fixed point is |0> at (sqrt(3/2), 1/sqrt(2)).
PlanePoint ad_diagonal_map(double z1, double z2, double gamma);

/// Squared w after amplitude damping of the pure state whose diagonal
/// coordinates are (z1, z2).
double ad_pure_w2(double z1, double z2, double gamma);

enum class ChannelFamily { Depolarizing, Phase, Amplitude };

ChannelFamily parse_channel_family(std::string_view name);
KrausChannel make_channel(ChannelFamily family, double gamma);

/// Model images of apply(channel(gamma_k), rho) for gamma_k = k/(steps-1).
std::vector<ModelPoint> trajectory(ChannelFamily family, const DensityMatrix& rho, int steps,
                                   ModelVariant variant = ModelVariant::Q1);

}  // namespace qutrit
