#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qutrit/model.hpp"
#include "qutrit/sampling.hpp"

using namespace qutrit;

TEST_SUITE("sampling") {

TEST_CASE("Philox4x32-10 known answers") {
  using A4 = std::array<std::uint32_t, 4>;
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("CounterRng streams") {
  CounterRng a(7, 1, 3), b(7, 1, 3), c(7, 1, 4), d(8, 1, 3);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u32();
    CHECK(x == b.next_u32());
    (void)c;
  }
  CHECK(CounterRng(7, 1, 3).next_u64() != CounterRng(7, 1, 4).next_u64());
  CHECK(CounterRng(7, 1, 3).next_u64() != d.next_u64());
  CHECK(CounterRng(7, 1, 3).next_u64() != CounterRng(7, 2, 3).next_u64());
  CounterRng r(1, 0, 0);
  double mean = 0, var = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    mean += u;
  }
  CHECK(std::abs(mean / n - 0.5) < 0.005);
  mean = 0;
  for (int i = 0; i < n; ++i) {
    const double g = r.gaussian();
    mean += g;
    var += g * g;
  }
  CHECK(std::abs(mean / n) < 0.01);
  CHECK(std::abs(var / n - 1) < 0.02);
}

TEST_CASE("measure names") {
  CHECK(parse_measure("haar-pure") == Measure::HaarPure);
  CHECK(parse_measure("hs") == Measure::HilbertSchmidt);
  CHECK(parse_measure("rank2") == Measure::Rank2);
  CHECK(measure_name(Measure::Rank2) == "rank2");
  CHECK_THROWS_AS(parse_measure("bures"), std::invalid_argument);
  CHECK_THROWS_AS(sample_states({0, Measure::HaarUnitary}, 3), std::invalid_argument);
}

TEST_CASE("determinism across runs and thread counts") {
  for (Measure m : {Measure::HaarPure, Measure::HilbertSchmidt, Measure::Rank2}) {
    const SamplerConfig cfg{42, m};
    const auto a = sample_states(cfg, 1000, 1);
    const auto b = sample_states(cfg, 1000, 1);
    const auto c = sample_states(cfg, 1000, 4);
    const auto d = sample_states(cfg, 1000, 7);
    REQUIRE(a.size() == 1000);
    bool same = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      same = same && max_abs_diff(a[i].matrix(), b[i].matrix()) == 0.0;
      same = same && max_abs_diff(a[i].matrix(), c[i].matrix()) == 0.0;
      same = same && max_abs_diff(a[i].matrix(), d[i].matrix()) == 0.0;
    }
    CHECK(same);
    // a prefix is a prefix
    const auto p = sample_states(cfg, 10, 3);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(max_abs_diff(a[i].matrix(), p[i].matrix()) == 0.0);
    const auto other = sample_states({43, m}, 10, 1);
    CHECK(max_abs_diff(a[0].matrix(), other[0].matrix()) > 0.0);
  }
  CHECK(sample_states({1, Measure::HaarPure}, 0).empty());
}

TEST_CASE("sample properties") {
  for (const auto& rho : sample_pure({3, Measure::HaarPure}, 1000)) {
    CHECK(std::abs(trace_product(rho.matrix(), rho.matrix()) - 1) <= 1e-12);
    CHECK(std::abs(map_q1(rho).norm() - std::sqrt(2.0)) <= 1e-12);
  }
  for (const auto& rho : sample_mixed({3, Measure::HilbertSchmidt}, 1000)) {
    CHECK(std::abs(rho.matrix().trace() - 1.0) <= 1e-12);
    CHECK(oracle::eigenvalues(rho.matrix())[0] >= -1e-12);
  }
  for (const auto& rho : sample_rank2({3, Measure::Rank2}, 1000)) {
    const auto l = oracle::eigenvalues(rho.matrix());
    CHECK(std::abs(l[0]) <= 1e-12);
    CHECK(l[1] > 1e-12);
  }
  for (const auto& u : sample_unitary({3, Measure::HaarUnitary}, 1000))
    CHECK(max_abs_diff(u * u.adjoint(), ComplexMatrix3::identity()) <= 1e-12);
}

TEST_CASE("Haar pure states have no preferred direction") {
  // Mean Bloch vector vanishes and E|<0|psi>|^2 = 1/3.
  const auto states = sample_pure({11, Measure::HaarPure}, 10000, 4);
  std::array<double, 8> mean{};
  double p0 = 0.0;
  for (const auto& rho : states) {
    const auto b = oracle::bloch(rho.matrix());
    for (int k = 0; k < 8; ++k) mean[k] += b[k] / states.size();
    p0 += rho.matrix()(0, 0).real() / states.size();
  }
  for (double m : mean) CHECK(std::abs(m) < 0.05);
  CHECK(std::abs(p0 - 1.0 / 3) < 0.01);
}

TEST_CASE("Haar unitary moments") {
  // E|U_ij|^2 = 1/3, E|U_ij|^4 = 1/6.
  const auto us = sample_unitary({5, Measure::HaarUnitary}, 20000, 2);
  double m2 = 0, m4 = 0;
  for (const auto& u : us) {
    const double a = std::norm(u(1, 2));
    m2 += a;
    m4 += a * a;
  }
  CHECK(std::abs(m2 / us.size() - 1.0 / 3) < 0.01);
  CHECK(std::abs(m4 / us.size() - 1.0 / 6) < 0.01);
}

TEST_CASE("Hilbert-Schmidt purity mean") {
  // For the induced measure on 3x3 with square Ginibre, E Tr rho^2 = 6/10.
  const auto states = sample_mixed({9, Measure::HilbertSchmidt}, 20000, 3);
  double s = 0;
  for (const auto& rho : states) s += trace_product(rho.matrix(), rho.matrix());
  CHECK(std::abs(s / states.size() - 0.6) < 0.01);
}

}  // TEST_SUITE
