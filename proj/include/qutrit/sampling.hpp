#pragma once

// Reproducible random states and unitaries.
//
// All randomness comes from Philox4x32-10 (Salmon et al., Random123), a
// counter-based generator: the output block is a pure function of
// (key, counter). The key is the 64-bit seed; the counter packs
// (block index, measure tag, sample index). Sample i therefore depends only
// on (seed, measure, i), which makes the output independent of how the index
// range is split across threads. Gaussians use Box-Muller.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qutrit/bloch.hpp"

namespace qutrit {

/// One application of the Philox4x32-10 bijection.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint32_t tag, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal.
  double gaussian();
  /// Complex normal with independent standard normal parts.
  Complex complex_gaussian();

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint32_t tag_;
  std::uint64_t stream_;
  std::uint32_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

enum class Measure { HaarPure, HilbertSchmidt, Rank2, HaarUnitary };

Measure parse_measure(std::string_view name);
std::string_view measure_name(Measure m);

struct SamplerConfig {
  std::uint64_t seed = 0;
  Measure measure = Measure::HaarPure;
};

/// Single draws from an explicit stream.
DensityMatrix haar_pure_state(CounterRng& rng);
DensityMatrix hilbert_schmidt_state(CounterRng& rng);
DensityMatrix rank2_state(CounterRng& rng);
/// QR of a complex Ginibre matrix with R's diagonal made positive.
ComplexMatrix3 haar_unitary(CounterRng& rng);

/// Rank-1 projectors onto normalized complex Gaussian vectors.
std::vector<DensityMatrix> sample_pure(const SamplerConfig& cfg, std::size_t n, unsigned threads = 1);
/// G G^dagger / Tr(G G^dagger) for complex Ginibre G.
std::vector<DensityMatrix> sample_mixed(const SamplerConfig& cfg, std::size_t n, unsigned threads = 1);
/// U diag(p, 1-p, 0) U^dagger, p uniform, U Haar.
std::vector<DensityMatrix> sample_rank2(const SamplerConfig& cfg, std::size_t n, unsigned threads = 1);
std::vector<ComplexMatrix3> sample_unitary(const SamplerConfig& cfg, std::size_t n, unsigned threads = 1);

/// Dispatches on cfg.measure; HaarUnitary is rejected here.
std::vector<DensityMatrix> sample_states(const SamplerConfig& cfg, std::size_t n, unsigned threads = 1);

}  // namespace qutrit
