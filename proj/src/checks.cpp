#include "qutrit/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qutrit/channels.hpp"
#include "qutrit/orbits.hpp"

namespace qutrit {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Tags above the measure enum keep check streams apart from `qutrit sample`.
constexpr std::uint32_t kCheckTagBase = 0x100;

struct Context {
  const CheckOptions& opts;
  std::uint32_t next_tag = kCheckTagBase;

  CounterRng rng(std::uint32_t tag, std::size_t i) const { return {opts.seed, tag, i}; }
};

// Accumulates one check. error() keeps the worst deviation seen.
class Check {
 public:
  Check(Context& ctx, std::string suite, std::string name, double tolerance)
      : ctx_(ctx), tag_(ctx.next_tag++) {
    r_.suite = std::move(suite);
    r_.name = std::move(name);
    r_.tolerance = tolerance * ctx.opts.tolerance_scale;
  }

  CounterRng rng(std::size_t i) const { return ctx_.rng(tag_, i); }
  std::size_t samples() const { return ctx_.opts.samples; }

  void error(double e) {
    ++r_.count;
    if (std::isnan(e)) nan_ = true;
    r_.max_error = std::max(r_.max_error, e);
  }

  CheckResult finish(bool gating = true) {
    r_.gating = gating;
    r_.passed = !nan_ && r_.count > 0 && r_.max_error <= r_.tolerance;
    return r_;
  }

 private:
  Context& ctx_;
  std::uint32_t tag_;
  CheckResult r_;
  bool nan_ = false;
};

double dist3(const ModelPoint& a, double z1, double z2, double w) {
  return std::hypot(a.z1 - z1, a.z2 - z2, a.w - w);
}

ComplexMatrix3 random_hermitian(CounterRng& rng) {
  ComplexMatrix3 h;
  for (int i = 0; i < 3; ++i) {
    h(i, i) = rng.gaussian();
    for (int j = i + 1; j < 3; ++j) {
      h(i, j) = rng.complex_gaussian();
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

EigenvalueTriple random_triple(CounterRng& rng) {
  double a = rng.uniform();
  double b = rng.uniform();
  if (a > b) std::swap(a, b);
  return {a, b - a, 1.0 - b};
}

DensityMatrix random_diagonal(CounterRng& rng) {
  const auto t = random_triple(rng).values();
  return assume_state(ComplexMatrix3::diagonal(t[0], t[1], t[2]));
}

DensityMatrix plus2() { return DensityMatrix::pure({1.0, 1.0, 0.0}); }

// ---- model ---------------------------------------------------------------

void model_suite(Context& ctx, std::vector<CheckResult>& out) {
  const std::string s = "model";
  {
    Check rec(ctx, s, "herm3-reconstruction", 1e-10);
    Check tr(ctx, s, "herm3-trace", 1e-12);
    Check det(ctx, s, "herm3-determinant", 1e-10);
    for (std::size_t i = 0; i < rec.samples(); ++i) {
      auto rng = rec.rng(i);
      const ComplexMatrix3 h = random_hermitian(rng);
      const Spectrum sp = eigh3(h);
      const auto& l = sp.eigenvalues;
      const ComplexMatrix3& v = sp.eigenvectors;
      rec.error(max_abs_diff(v * ComplexMatrix3::diagonal(l[0], l[1], l[2]) * v.adjoint(), h));
      tr.error(std::abs(h.trace().real() - (l[0] + l[1] + l[2])));
      det.error(std::abs(h.determinant() - Complex(l[0] * l[1] * l[2])));
    }
    out.push_back(rec.finish());
    out.push_back(tr.finish());
    out.push_back(det.finish());
  }
  {
    Check round(ctx, s, "bloch-roundtrip", 1e-12);
    Check purity(ctx, s, "bloch-purity-identity", 1e-10);
    for (std::size_t i = 0; i < round.samples(); ++i) {
      auto rng = round.rng(i);
      const DensityMatrix rho = hilbert_schmidt_state(rng);
      const BlochVector8 b = to_bloch(rho);
      round.error(max_abs_diff(from_bloch(b).matrix, rho.matrix()));
      const double n = b.norm();
      purity.error(std::abs(3.0 * rho.purity() - 1.0 - n * n));
    }
    out.push_back(round.finish());
    out.push_back(purity.finish());
  }
  {
    Check simplex(ctx, s, "basis-simplex", 1e-12);
    for (int k = 0; k < 3; ++k) {
      const ModelPoint a = map_q1(DensityMatrix::basis(k));
      const ModelPoint b = map_q1(DensityMatrix::basis((k + 1) % 3));
      simplex.error(std::abs(std::hypot(a.z1, a.z2) - kSqrt2));
      simplex.error(std::abs(std::hypot(a.z1 - b.z1, a.z2 - b.z2) - std::sqrt(6.0)));
      const PlanePoint m = base_triangle::edge_midpoint(k);
      simplex.error(std::abs(std::hypot(m.z1, m.z2) - 1.0 / kSqrt2));
    }
    out.push_back(simplex.finish());
  }
  {
    Check c(ctx, s, "q1-contains-images", 0.0);
    for (std::size_t i = 0; i < c.samples(); ++i) {
      auto rng = c.rng(i);
      c.error(contains(map_q1(hilbert_schmidt_state(rng))) ? 0.0 : 1.0);
      c.error(contains(map_q1(haar_pure_state(rng))) ? 0.0 : 1.0);
      c.error(contains(map_q1(rank2_state(rng))) ? 0.0 : 1.0);
    }
    out.push_back(c.finish());
  }
  {
    Check c(ctx, s, "q1-witness-roundtrip", 1e-10);
    for (std::size_t i = 0; i < c.samples(); ++i) {
      auto rng = c.rng(i);
      const ModelPoint p = uniform_q1_point(rng);
      const BlochDecoding d = from_bloch(to_bloch(witness_state(p)));
      if (!d.positive) {
        c.error(1.0);
        continue;
      }
      c.error(dist3(map_q1(d.state()), p.z1, p.z2, p.w));
    }
    out.push_back(c.finish());
  }
  {
    Check c(ctx, s, "pure-states-on-outer-sphere", 1e-10);
    for (std::size_t i = 0; i < c.samples(); ++i) {
      auto rng = c.rng(i);
      const DensityMatrix rho = haar_pure_state(rng);
      c.error(std::abs(map_q1(rho).norm() - kSqrt2));
      c.error(std::abs(map_q2(rho).norm() - kSqrt2));
    }
    out.push_back(c.finish());
  }
  {
    Check c(ctx, s, "q2-sign-ray-invariance", 0.0);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed();
    for (std::size_t i = 0; i < c.samples(); ++i) {
      auto rng = c.rng(i);
      const DensityMatrix rho = (i % 2 == 0) ? hilbert_schmidt_state(rng) : lower_boundary_state(rng);
      const double mu = 1.0 - rng.uniform();  // (0, 1]
      const DensityMatrix ray = assume_state(rho.matrix() * mu + mixed.matrix() * (1.0 - mu));
      const double a = map_q2(rho).w;
      const double b = map_q2(ray).w;
      if (a == 0.0 || b == 0.0) continue;
      c.error((a > 0.0) == (b > 0.0) ? 0.0 : 1.0);
    }
    out.push_back(c.finish());
  }
  {
    Check c(ctx, s, "q1-line-property", 1e-10);
    for (std::size_t i = 0; i < c.samples(); ++i) {
      auto rng = c.rng(i);
      const DensityMatrix sigma = hilbert_schmidt_state(rng);
      const DensityMatrix delta = random_diagonal(rng);
      const ModelPoint p0 = map_q1(delta);
      const ModelPoint p1 = map_q1(sigma);
      const double dz1 = p1.z1 - p0.z1, dz2 = p1.z2 - p0.z2, dw = p1.w - p0.w;
      const double len = std::hypot(dz1, dz2, dw);
      if (len < 1e-9) continue;
      for (double lambda : {0.25, 0.5, 0.75}) {
        const ModelPoint q =
            map_q1(assume_state(sigma.matrix() * lambda + delta.matrix() * (1.0 - lambda)));
        const double ez1 = q.z1 - p0.z1, ez2 = q.z2 - p0.z2, ew = q.w - p0.w;
        // distance from q to the line through p0 and p1
        const double cx = ez2 * dw - ew * dz2;
        const double cy = ew * dz1 - ez1 * dw;
        const double cz = ez1 * dz2 - ez2 * dz1;
        c.error(std::hypot(cx, cy, cz) / len);
      }
    }
    out.push_back(c.finish());
  }
  {
    Check c(ctx, s, "rank2-exclusion-zone", 1e-10);
    for (std::size_t i = 0; i < c.samples(); ++i) {
      auto rng = c.rng(i);
      const ModelPoint p = map_q1(rank2_state(rng));
      c.error(std::max(0.0, rank3_envelope(p.z1, p.z2) - p.w));
    }
    out.push_back(c.finish());
  }
  {
    Check c(ctx, s, "q2-lower-branch-on-boundary", 1e-9);
    for (std::size_t i = 0; i < c.samples(); ++i) {
      auto rng = c.rng(i);
      for (const DensityMatrix& rho : {rank2_state(rng), lower_boundary_state(rng)}) {
        const ModelPoint p = map_q2(rho);
        if (p.w < 0.0) c.error(std::abs(-p.w - rank3_envelope(p.z1, p.z2)));
      }
    }
    out.push_back(c.finish());
  }
  {
    Check c(ctx, s, "sampling-thread-independence", 0.0);
    const SamplerConfig cfg{ctx.opts.seed, Measure::HilbertSchmidt};
    const auto one = sample_mixed(cfg, c.samples(), 1);
    const auto four = sample_mixed(cfg, c.samples(), 4);
    for (std::size_t i = 0; i < one.size(); ++i) c.error(max_abs_diff(one[i].matrix(), four[i].matrix()));
    out.push_back(c.finish());
  }
}

// ---- duality ---------------------------------------------------------------

void duality_suite(Context& ctx, std::vector<CheckResult>& out) {
  const std::string s = "duality";
  {
    Check place(ctx, s, "basis-placement", 1e-12);
    const double pts[3][2] = {{std::sqrt(1.5), 1.0 / kSqrt2}, {-std::sqrt(1.5), 1.0 / kSqrt2}, {0.0, -kSqrt2}};
    for (int k = 0; k < 3; ++k)
      for (auto variant : {ModelVariant::Q1, ModelVariant::Q2})
        place.error(dist3(map_to(variant, DensityMatrix::basis(k)), pts[k][0], pts[k][1], 0.0));
    out.push_back(place.finish());
  }
  {
    Check pair(ctx, s, "pure-dual-pairing", 1e-12);
    Check inner(ctx, s, "pure-dual-on-inner-sphere", 1e-12);
    Check mixed(ctx, s, "mixed-dual-pairing", 1e-12);
    for (std::size_t i = 0; i < pair.samples(); ++i) {
      auto rng = pair.rng(i);
      const DensityMatrix pi = haar_pure_state(rng);
      const BlochVector8 dual = to_bloch(state_inversion(pi));
      pair.error(std::abs(1.0 + dual_pairing(to_bloch(pi), dual)));
      inner.error(std::abs(dual.norm() - 1.0 / kSqrt2));
      const DensityMatrix rho = hilbert_schmidt_state(rng);
      const double expected = -(3.0 * rho.purity() - 1.0) / 2.0;
      mixed.error(std::abs(dual_pairing(to_bloch(rho), to_bloch(state_inversion(rho))) - expected));
    }
    out.push_back(pair.finish());
    out.push_back(inner.finish());
    out.push_back(mixed.finish());
  }
  {
    // The dual contact state of rho(p) is its inversion carried to rank 2.
    Check peeled(ctx, s, "p-family-dual-is-peeled-inversion", 1e-12);
    Check contact(ctx, s, "p-family-dual-touches-plus2", 1e-12);
    Check closed(ctx, s, "p-family-pairing-closed-form", 1e-12);
    const BlochVector8 b_plus2 = to_bloch(plus2());
    for (int k = 0; k <= 100; ++k) {
      const double p = k / 100.0;
      const DensityMatrix dual = rho_p_dual(p);
      const auto pe = peel(state_inversion(rho_p(p)));
      peeled.error(pe ? max_abs_diff(pe->matrix(), dual.matrix()) : 1.0);
      contact.error(std::abs(1.0 + dual_pairing(b_plus2, to_bloch(dual))));
      const double expected = -(1.0 + 3.0 * p * p) / (1.0 + 3.0 * p);
      closed.error(std::abs(dual_pairing(to_bloch(rho_p(p)), to_bloch(dual)) - expected));
    }
    out.push_back(peeled.finish());
    out.push_back(contact.finish());
    out.push_back(closed.finish());
  }
  {
    Check corners(ctx, s, "tetrahedron-corners-north-pole", 1e-12);
    Check duals(ctx, s, "tetrahedron-duals-inner-pole", 1e-10);
    for (double a : {1.0, -1.0})
      for (double b : {1.0, -1.0}) {
        const DensityMatrix c = DensityMatrix::pure({1.0, a, b});
        corners.error(dist3(map_q2(c), 0.0, 0.0, kSqrt2));
        duals.error(dist3(map_q2(state_inversion(c)), 0.0, 0.0, -1.0 / kSqrt2));
      }
    out.push_back(corners.finish());
    out.push_back(duals.finish());
  }
}

// ---- channels --------------------------------------------------------------

void channels_suite(Context& ctx, std::vector<CheckResult>& out) {
  const std::string s = "channels";
  {
    Check c(ctx, s, "kraus-completeness", 1e-12);
    for (int k = 0; k <= 20; ++k)
      for (auto f : {ChannelFamily::Depolarizing, ChannelFamily::Phase, ChannelFamily::Amplitude})
        c.error(make_channel(f, k / 20.0).completeness_error());
    out.push_back(c.finish());
  }
  {
    Check depol(ctx, s, "depolarizing-action", 1e-12);
    Check phase(ctx, s, "phase-damping-model-action", 1e-12);
    Check diag(ctx, s, "amplitude-diagonal-map", 1e-12);
    Check pure(ctx, s, "amplitude-pure-w2", 1e-10);
    Check sq(ctx, s, "amplitude-mixed-w2-bracket", 1e-12);
    Check literal(ctx, s, "amplitude-mixed-w-bracket-literal", 1e-12);
    const ComplexMatrix3 id = ComplexMatrix3::identity();
    for (std::size_t i = 0; i < depol.samples(); ++i) {
      auto rng = depol.rng(i);
      const DensityMatrix rho = hilbert_schmidt_state(rng);
      const double g = rng.uniform();
      const ModelPoint p = map_q1(rho);

      const ComplexMatrix3 expected = rho.matrix() * (1.0 - g) + id * (g / 3.0);
      depol.error(max_abs_diff(apply(depolarizing(g), rho).matrix(), expected));

      phase.error(dist3(map_q1(apply(phase_damping(g), rho)), p.z1, p.z2, (1.0 - g) * p.w));

      const ModelPoint a = map_q1(apply(amplitude_damping(g), rho));
      const PlanePoint d = ad_diagonal_map(p.z1, p.z2, g);
      diag.error(std::hypot(a.z1 - d.z1, a.z2 - d.z2));

      const double g1 = 1.0 - g;
      const double w2 = p.w * p.w;
      const double a2 = a.w * a.w;
      sq.error(std::max({0.0, g1 * g1 * w2 - a2, a2 - g1 * w2}));
      literal.error(std::max({0.0, g1 * g1 * p.w - a.w, a.w - g1 * p.w}));

      const DensityMatrix psi = haar_pure_state(rng);
      const ModelPoint q = map_q1(psi);
      const ModelPoint qa = map_q1(apply(amplitude_damping(g), psi));
      pure.error(std::abs(qa.w * qa.w - ad_pure_w2(q.z1, q.z2, g)));
    }
    out.push_back(depol.finish());
    out.push_back(phase.finish());
    out.push_back(diag.finish());
    out.push_back(pure.finish());
    out.push_back(sq.finish());
    // The stated bracket on w itself does not hold (see README); kept visible.
    out.push_back(literal.finish(false));
  }
}

// ---- orbits ----------------------------------------------------------------

void orbits_suite(Context& ctx, std::vector<CheckResult>& out) {
  const std::string s = "orbits";
  {
    Check sphere(ctx, s, "orbit-on-sphere", 1e-10);
    Check inside(ctx, s, "orbit-inside-birkhoff-polygon", 0.0);
    const EigenvalueTriple lambda(0.6, 0.3, 0.1);
    const ComplexMatrix3 rho0 = ComplexMatrix3::diagonal(0.6, 0.3, 0.1);
    const double r = orbit_radius(lambda);
    const PlanarPolygon poly = birkhoff_polygon(lambda);
    for (std::size_t i = 0; i < sphere.samples(); ++i) {
      auto rng = sphere.rng(i);
      const ComplexMatrix3 u = haar_unitary(rng);
      const ModelPoint p = map_q1(assume_state(u * rho0 * u.adjoint()));
      sphere.error(std::abs(p.norm() - r));
      inside.error(poly.contains({p.z1, p.z2}, 1e-9) ? 0.0 : 1.0);
    }
    out.push_back(sphere.finish());
    out.push_back(inside.finish());
  }
  {
    Check c(ctx, s, "sphere-covers-polygon", 1e-12);
    for (std::size_t i = 0; i < c.samples(); ++i) {
      auto rng = c.rng(i);
      const EigenvalueTriple t = random_triple(rng);
      const double r = orbit_radius(t);
      for (const PlanePoint& v : birkhoff_polygon(t).vertices)
        c.error(std::max(0.0, -(r * r - v.z1 * v.z1 - v.z2 * v.z2)));
    }
    out.push_back(c.finish());
  }
  {
    Check c(ctx, s, "majorization-partial-order", 0.0);
    for (std::size_t i = 0; i < c.samples(); ++i) {
      auto rng = c.rng(i);
      const EigenvalueTriple a = random_triple(rng);
      const EigenvalueTriple b = random_triple(rng);
      const EigenvalueTriple cc = random_triple(rng);
      c.error(majorizes(a, a) ? 0.0 : 1.0);
      if (majorizes(a, b) && majorizes(b, a)) {
        const auto sa = a.sorted_descending();
        const auto sb = b.sorted_descending();
        double d = 0.0;
        for (int k = 0; k < 3; ++k) d = std::max(d, std::abs(sa[k] - sb[k]));
        c.error(d > 1e-12 ? 1.0 : 0.0);
      }
      if (majorizes(a, b) && majorizes(b, cc)) c.error(majorizes(a, cc) ? 0.0 : 1.0);
      // a majorizes its own doubly stochastic averages
      const auto v = a.values();
      const double t = rng.uniform();
      const EigenvalueTriple mixed(t * v[0] + (1 - t) * v[1], t * v[1] + (1 - t) * v[0], v[2]);
      c.error(majorizes(a, mixed) ? 0.0 : 1.0);
    }
    out.push_back(c.finish());
  }
}

}  // namespace

CheckSuite parse_check_suite(std::string_view name) {
  if (name == "all") return CheckSuite::All;
  if (name == "model") return CheckSuite::Model;
  if (name == "duality") return CheckSuite::Duality;
  if (name == "channels") return CheckSuite::Channels;
  if (name == "orbits") return CheckSuite::Orbits;
  throw std::invalid_argument("unknown check suite '" + std::string(name) + "'");
}

std::string_view suite_name(CheckSuite suite) {
  switch (suite) {
    case CheckSuite::All: return "all";
    case CheckSuite::Model: return "model";
    case CheckSuite::Duality: return "duality";
    case CheckSuite::Channels: return "channels";
    case CheckSuite::Orbits: return "orbits";
  }
  return "?";
}

std::vector<CheckResult> run_checks(CheckSuite suite, const CheckOptions& options) {
  std::vector<CheckResult> out;
  using Runner = void (*)(Context&, std::vector<CheckResult>&);
  const std::pair<CheckSuite, Runner> suites[] = {
      {CheckSuite::Model, model_suite},
      {CheckSuite::Duality, duality_suite},
      {CheckSuite::Channels, channels_suite},
      {CheckSuite::Orbits, orbits_suite},
  };
  for (std::size_t k = 0; k < std::size(suites); ++k) {
    if (suite != CheckSuite::All && suite != suites[k].first) continue;
    // Fixed tag block per suite: a suite's streams are the same alone or in "all".
    Context ctx{options, kCheckTagBase + 0x40 * static_cast<std::uint32_t>(k)};
    suites[k].second(ctx, out);
  }
  return out;
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
  char buf[64];
  for (const auto& r : results) {
    const char* status = r.passed ? "PASS" : (r.gating ? "FAIL" : "INFO");
    out << status << ' ' << r.suite << '/' << r.name << " n=" << r.count;
    std::snprintf(buf, sizeof buf, " max_err=%.3e tol=%.1e", r.max_error, r.tolerance);
    out << buf << '\n';
  }
  std::size_t failed = 0;
  for (const auto& r : results)
    if (r.gating && !r.passed) ++failed;
  out << (failed == 0 ? "OK" : "FAILED") << ' ' << results.size() << " checks, " << failed << " failed\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed || !r.gating; });
}

DensityMatrix lower_boundary_state(CounterRng& rng) {
  const double r = std::sqrt(rng.uniform());
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const int skip = static_cast<int>(rng.next_u32() % 3);
  const int i = (skip + 1) % 3;
  const int j = (skip + 2) % 3;
  ComplexMatrix3 sigma;
  const double x = r * std::cos(theta);
  const double z = r * std::sin(theta);
  sigma(i, i) = (1.0 + z) / 2.0;
  sigma(j, j) = (1.0 - z) / 2.0;
  sigma(i, j) = x / 2.0 * std::polar(1.0, -phi);
  sigma(j, i) = std::conj(sigma(i, j));
  const auto p = peel(state_inversion(assume_state(sigma)));
  return p ? *p : DensityMatrix::maximally_mixed();
}

ModelPoint uniform_q1_point(CounterRng& rng) {
  const double zmax = std::sqrt(1.5);
  for (;;) {
    ModelPoint p{(2.0 * rng.uniform() - 1.0) * zmax, -kSqrt2 + rng.uniform() * (kSqrt2 + 1.0 / kSqrt2),
                 rng.uniform() * kSqrt2, ModelVariant::Q1};
    if (contains(p)) return p;
  }
}

}  // namespace qutrit
