#include "qutrit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace qutrit {

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  constexpr std::uint64_t kM0 = 0xD2511F53u;
  constexpr std::uint64_t kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    const std::uint64_t p0 = kM0 * ctr[0];
    const std::uint64_t p1 = kM1 * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint32_t tag, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      tag_(tag),
      stream_(stream) {}

std::uint32_t CounterRng::next_u32() {
  if (used_ == 4) {
    buffer_ = philox4x32_10({block_++, tag_, static_cast<std::uint32_t>(stream_),
                             static_cast<std::uint32_t>(stream_ >> 32)},
                            key_);
    used_ = 0;
  }
  return buffer_[used_++];
}

std::uint64_t CounterRng::next_u64() {
  const std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::gaussian() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex CounterRng::complex_gaussian() {
  const double re = gaussian();
  return {re, gaussian()};
}

Measure parse_measure(std::string_view name) {
  if (name == "haar-pure") return Measure::HaarPure;
  if (name == "hs" || name == "hilbert-schmidt") return Measure::HilbertSchmidt;
  if (name == "rank2") return Measure::Rank2;
  if (name == "haar-unitary") return Measure::HaarUnitary;
  throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::HaarPure: return "haar-pure";
    case Measure::HilbertSchmidt: return "hilbert-schmidt";
    case Measure::Rank2: return "rank2";
    case Measure::HaarUnitary: return "haar-unitary";
  }
  return "?";
}

DensityMatrix haar_pure_state(CounterRng& rng) {
  Vector3c v{};
  for (auto& c : v) c = rng.complex_gaussian();
  return DensityMatrix::pure(v);
}

DensityMatrix hilbert_schmidt_state(CounterRng& rng) {
  ComplexMatrix3 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = rng.complex_gaussian();
  ComplexMatrix3 m = g * g.adjoint();
  m *= 1.0 / m.trace().real();
  // Remove rounding asymmetry so the result is exactly Hermitian.
  m = (m + m.adjoint()) * 0.5;
  return assume_state(m);
}

ComplexMatrix3 haar_unitary(CounterRng& rng) {
  std::array<Vector3c, 3> cols{};
  for (auto& c : cols)
    for (auto& x : c) x = rng.complex_gaussian();
  // Modified Gram-Schmidt: Q of the QR factorization with positive R_kk.
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < k; ++j) {
      Complex proj = 0.0;
      for (int i = 0; i < 3; ++i) proj += std::conj(cols[j][i]) * cols[k][i];
      for (int i = 0; i < 3; ++i) cols[k][i] -= proj * cols[j][i];
    }
    double n = 0.0;
    for (const auto& x : cols[k]) n += std::norm(x);
    n = std::sqrt(n);
    for (auto& x : cols[k]) x /= n;
  }
  return ComplexMatrix3::from_columns(cols[0], cols[1], cols[2]);
}

DensityMatrix rank2_state(CounterRng& rng) {
  const ComplexMatrix3 u = haar_unitary(rng);
  const double p = rng.uniform();
  ComplexMatrix3 m = u * ComplexMatrix3::diagonal(p, 1.0 - p, 0.0) * u.adjoint();
  m = (m + m.adjoint()) * 0.5;
  return assume_state(m);
}

namespace {

template <typename T, typename Draw>
std::vector<T> generate(std::uint64_t seed, Measure tag, std::size_t n, unsigned threads, Draw draw) {
  std::vector<T> out;
  out.reserve(n);
  auto one = [&](std::size_t i) {
    CounterRng rng(seed, static_cast<std::uint32_t>(tag), i);
    return draw(rng);
  };
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2 * threads) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(one(i));
    return out;
  }
  // Each worker fills a contiguous index range; results are concatenated in
  // index order, so output does not depend on the thread count.
  std::vector<std::vector<T>> parts(threads);
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) parts[t].push_back(one(i));
      });
    }
  }
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::vector<DensityMatrix> sample_pure(const SamplerConfig& cfg, std::size_t n, unsigned threads) {
  return generate<DensityMatrix>(cfg.seed, Measure::HaarPure, n, threads, haar_pure_state);
}

std::vector<DensityMatrix> sample_mixed(const SamplerConfig& cfg, std::size_t n, unsigned threads) {
  return generate<DensityMatrix>(cfg.seed, Measure::HilbertSchmidt, n, threads, hilbert_schmidt_state);
}

std::vector<DensityMatrix> sample_rank2(const SamplerConfig& cfg, std::size_t n, unsigned threads) {
  return generate<DensityMatrix>(cfg.seed, Measure::Rank2, n, threads, rank2_state);
}

std::vector<ComplexMatrix3> sample_unitary(const SamplerConfig& cfg, std::size_t n, unsigned threads) {
  return generate<ComplexMatrix3>(cfg.seed, Measure::HaarUnitary, n, threads, haar_unitary);
}

std::vector<DensityMatrix> sample_states(const SamplerConfig& cfg, std::size_t n, unsigned threads) {
  switch (cfg.measure) {
    case Measure::HaarPure: return sample_pure(cfg, n, threads);
    case Measure::HilbertSchmidt: return sample_mixed(cfg, n, threads);
    case Measure::Rank2: return sample_rank2(cfg, n, threads);
    case Measure::HaarUnitary: break;
  }
  throw std::invalid_argument("haar-unitary draws unitaries, not states");
}

}  // namespace qutrit
