#include "qutrit/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qutrit {

namespace {

void require_strength(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    std::ostringstream os;
    os << "channel strength gamma = " << gamma << " is outside [0, 1]";
    throw std::out_of_range(os.str());
  }
}

}  // namespace

double completeness_error(const std::vector<ComplexMatrix3>& operators) {
  ComplexMatrix3 sum;
  for (const auto& k : operators) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix3::identity());
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix3> operators, double gamma)
    : ops_(std::move(operators)), gamma_(gamma) {
  const double err = completeness_error();
  if (!(err <= kCompletenessTolerance)) {
    std::ostringstream os;
    os << "Kraus operators violate completeness: max |sum K^dagger K - 1| = " << err;
    throw ValidationError(os.str());
  }
}

double KrausChannel::completeness_error() const { return qutrit::completeness_error(ops_); }

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  ComplexMatrix3 out;
  for (const auto& k : channel.operators()) out += k * rho.matrix() * k.adjoint();
  return assume_state(out);
}

KrausChannel depolarizing(double gamma) {
  require_strength(gamma);
  std::vector<ComplexMatrix3> ops;
  ops.reserve(9);
  ops.push_back(ComplexMatrix3::identity() * std::sqrt(1.0 - 8.0 * gamma / 9.0));
  const double a = std::sqrt(gamma / 9.0);
  for (const auto& h : gell_mann()) ops.push_back(h * a);
  return {std::move(ops), gamma};
}

KrausChannel phase_damping(double gamma) {
  require_strength(gamma);
  const auto& h = gell_mann();
  const double a = std::sqrt(gamma / 3.0);
  return {{ComplexMatrix3::identity() * std::sqrt(1.0 - 2.0 * gamma / 3.0), h[6] * a, h[7] * a}, gamma};
}

KrausChannel amplitude_damping(double gamma) {
  require_strength(gamma);
  const double keep = std::sqrt(1.0 - gamma);
  const double decay = std::sqrt(gamma);
  ComplexMatrix3 k1;
  k1(0, 1) = decay;
  ComplexMatrix3 k2;
  k2(0, 2) = decay;
  return {{ComplexMatrix3::diagonal(1.0, keep, keep), k1, k2}, gamma};
}

PlanePoint ad_diagonal_map(double z1, double z2, double gamma) {
  const double fz1 = std::sqrt(1.5);
  const double fz2 = 1.0 / std::sqrt(2.0);
  return {fz1 + (z1 - fz1) * (1.0 - gamma), fz2 + (z2 - fz2) * (1.0 - gamma)};
}

double ad_pure_w2(double z1, double z2, double gamma) {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s23 = std::sqrt(2.0 / 3.0);
  const double g1 = 1.0 - gamma;
  const double quadratic =
      2.0 / 3.0 * (1.0 - z2 * z2 - z2 / s2) + z1 * (2.0 / s3 * z2 - s23);
  const double linear =
      4.0 / 3.0 - z1 * z1 + (s23 - 2.0 / s3 * z2) * z1 - z2 * z2 / 3.0 + s2 * z2 / 3.0;
  return g1 * g1 * quadratic + g1 * linear;
}

ChannelFamily parse_channel_family(std::string_view name) {
  if (name == "depolarizing") return ChannelFamily::Depolarizing;
  if (name == "phase") return ChannelFamily::Phase;
  if (name == "amplitude") return ChannelFamily::Amplitude;
  throw std::invalid_argument("unknown channel family '" + std::string(name) + "'");
}

KrausChannel make_channel(ChannelFamily family, double gamma) {
  switch (family) {
    case ChannelFamily::Depolarizing: return depolarizing(gamma);
    case ChannelFamily::Phase: return phase_damping(gamma);
    case ChannelFamily::Amplitude: return amplitude_damping(gamma);
  }
  throw std::invalid_argument("unknown channel family");
}

std::vector<ModelPoint> trajectory(ChannelFamily family, const DensityMatrix& rho, int steps,
                                   ModelVariant variant) {
  if (steps < 2) throw std::invalid_argument("a trajectory needs at least 2 steps");
  std::vector<ModelPoint> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double gamma = static_cast<double>(k) / static_cast<double>(steps - 1);
    out.push_back(map_to(variant, apply(make_channel(family, gamma), rho)));
  }
  return out;
}

}  // namespace qutrit
