#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fns/constants.hpp"
#include "fns/exact.hpp"
#include "fns/fractional.hpp"

using namespace fns;

namespace {

SphereFunction constant_field(std::shared_ptr<const SphereGrid> g, double c) {
  SphereFunction f;
  f.grid = g;
  f.values.assign(g->node_count(), c);
  return f;
}

}  // namespace

TEST_CASE("spectral operator on constants and eigenfunctions") {
  for (int n : {2, 3, 4}) {
    for (double sigma : {0.25, 0.5, 0.75}) {
      auto g = SphereGrid::zonal(n, 24);
      auto c = make_constants(n, sigma);
      auto ones = constant_field(g, 1.0);
      auto p1 = apply_psigma_spectral(ones, sigma, 12);
      for (double v : p1.values) CHECK(v == doctest::Approx(c.c_n_sigma).epsilon(1e-12));

      // degree-1 zonal harmonic is an eigenfunction
      SpectralCoeffs e1;
      e1.n = n;
      e1.kind = GridKind::Zonal;
      e1.kmax = 4;
      e1.coeffs = {0.0, 1.0, 0.0, 0.0, 0.0};
      auto h1 = synthesize(e1, g);
      auto ph1 = apply_psigma_spectral(h1, sigma, 4);
      const double l1 = multiplier(1, n, sigma);
      for (std::size_t i = 0; i < h1.values.size(); ++i)
        CHECK(ph1.values[i] == doctest::Approx(l1 * h1.values[i]).epsilon(1e-11));
    }
  }
}

TEST_CASE("spectral operator is linear and self-adjoint") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> dist;
  auto g = SphereGrid::zonal(3, 32);
  SpectralCoeffs a, b;
  a.n = b.n = 3;
  a.kind = b.kind = GridKind::Zonal;
  a.kmax = b.kmax = 10;
  a.coeffs.resize(11);
  b.coeffs.resize(11);
  for (auto& x : a.coeffs) x = dist(rng);
  for (auto& x : b.coeffs) x = dist(rng);
  auto fa = synthesize(a, g), fb = synthesize(b, g);

  // linearity at the coefficient level
  SphereFunction combo;
  combo.grid = g;
  combo.values.resize(g->node_count());
  for (std::size_t i = 0; i < combo.values.size(); ++i)
    combo.values[i] = 2.0 * fa.values[i] - 3.0 * fb.values[i];
  auto pc = analyze(apply_psigma_spectral(combo, 0.5, 10), 10);
  auto pa = analyze(apply_psigma_spectral(fa, 0.5, 10), 10);
  auto pb = analyze(apply_psigma_spectral(fb, 0.5, 10), 10);
  for (int k = 0; k <= 10; ++k)
    CHECK(pc.coeffs[k] == doctest::Approx(2.0 * pa.coeffs[k] - 3.0 * pb.coeffs[k]).epsilon(1e-10));

  // self-adjointness in the quadrature inner product
  auto Pa = apply_psigma_spectral(fa, 0.5, 10);
  auto Pb = apply_psigma_spectral(fb, 0.5, 10);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < g->node_count(); ++i) {
    lhs += g->node_weight(i) * fb.values[i] * Pa.values[i];
    rhs += g->node_weight(i) * fa.values[i] * Pb.values[i];
  }
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("bubble residual: the exact solutions solve the critical equation") {
  // max relative residual of P_s v = c(n,s) v^{(n+2s)/(n-2s)} below 1e-6
  for (int n : {2, 3, 4}) {
    const int kmax = n == 2 ? 64 : 128;
    auto g = SphereGrid::for_kmax(n, GridKind::Zonal, kmax);
    for (double sigma : {0.25, 0.5, 0.75}) {
      auto c = make_constants(n, sigma);
      const double p = critical_exponent(n, sigma);
      for (double lambda : {1.0, 2.0, 5.0}) {
        auto v = sample_sphere_bubble(BubbleParams::sphere(n, sigma, south_pole(n), lambda), g);
        auto pv = apply_psigma_spectral(v, sigma, kmax);
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < v.values.size(); ++i) {
          const double rhs = c.c_n_sigma * std::pow(v.values[i], p);
          worst = std::max(worst, std::abs(pv.values[i] - rhs));
          scale = std::max(scale, std::abs(rhs));
        }
        CAPTURE(n);
        CAPTURE(sigma);
        CAPTURE(lambda);
        CHECK(worst / scale <= 1e-6);
      }
    }
  }
}

TEST_CASE("integral realization matches the spectral one") {
  // constants are exact
  for (int n : {2, 3, 4}) {
    auto g = SphereGrid::zonal(n, 24);
    auto ones = constant_field(g, 1.0);
    for (double sigma : {0.25, 0.5, 0.75}) {
      auto c = make_constants(n, sigma);
      const double got = apply_psigma_integral(ones, sigma, south_pole(n));
      CHECK(got == doctest::Approx(c.c_n_sigma).epsilon(1e-10));
    }
  }

  // degree-1 harmonic at assorted points
  auto g3 = SphereGrid::zonal(3, 32);
  SpectralCoeffs e1;
  e1.n = 3;
  e1.kind = GridKind::Zonal;
  e1.kmax = 4;
  e1.coeffs = {0.3, 1.0, 0.0, 0.0, 0.0};
  auto h1 = synthesize(e1, g3);
  BandEvaluator ev(e1);
  const double sigma = 0.5;
  for (double theta : {0.0, 0.7, 1.9}) {
    std::vector<double> xi{std::sin(theta), 0.0, 0.0, std::cos(theta)};
    const double spec = synth_at_point(apply_psigma_spectral(e1, sigma), xi);
    const double integ = apply_psigma_integral(ev, sigma, xi);
    CHECK(std::abs(integ - spec) / std::abs(spec) <= 1e-3);
  }

  // sphere bubble at several points, zonal and full transforms
  {
    const int n = 2;
    auto gz = SphereGrid::for_kmax(n, GridKind::Zonal, 64);
    auto v = sample_sphere_bubble(BubbleParams::sphere(n, 0.5, south_pole(n), 2.0), gz);
    BandEvaluator bv(analyze(v, 64));
    auto pv = apply_psigma_spectral(analyze(v, 64), 0.5);
    for (double theta : {0.2, 1.3, 2.8}) {
      std::vector<double> xi{std::sin(theta), 0.0, std::cos(theta)};
      const double spec = synth_at_point(pv, xi);
      const double integ = apply_psigma_integral(bv, 0.5, xi);
      CHECK(std::abs(integ - spec) / std::abs(spec) <= 1e-3);
    }
  }

  // off-sphere evaluation point rejected
  auto gz = SphereGrid::zonal(2, 16);
  auto ones = constant_field(gz, 1.0);
  CHECK_THROWS_AS(apply_psigma_integral(ones, 0.5, {0.0, 0.0, 1.1}), std::domain_error);
}

TEST_CASE("dual-implementation oracle on random band-limited fields") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> dist;
  auto g = SphereGrid::full2(18, 36);
  const double sigma = 0.6;
  for (int field = 0; field < 3; ++field) {
    SpectralCoeffs c;
    c.n = 2;
    c.kind = GridKind::Full2Sphere;
    c.kmax = 8;
    c.coeffs.resize(81);
    for (int k = 0; k <= 8; ++k)
      for (int m = -k; m <= k; ++m) c.coeffs[c.index(k, m)] = dist(rng) / (1.0 + k * k);
    BandEvaluator ev(c);
    auto pc = apply_psigma_spectral(c, sigma);
    std::uniform_real_distribution<double> uth(0.3, M_PI - 0.3), uph(0.0, 2.0 * M_PI);
    for (int s = 0; s < 4; ++s) {
      const double th = uth(rng), ph = uph(rng);
      std::vector<double> xi{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
      const double spec = synth_at(pc, th, ph);
      const double integ = apply_psigma_integral(ev, sigma, xi);
      CHECK(std::abs(integ - spec) / (std::abs(spec) + 1e-9) <= 1e-3);
    }
  }
}

TEST_CASE("stereographic push/pull round trip") {
  const int n = 2;
  const double sigma = 0.5;
  auto chart = StereoChart::canonical(n);
  auto p = BubbleParams::sphere(n, sigma, south_pole(n), 2.0);
  auto v = [&](const std::vector<double>& xi) { return sphere_bubble(p, xi); };
  auto u = [&](const std::vector<double>& x) { return stereo_push(v, chart, sigma, x); };
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ut(0.2, M_PI - 0.2);
  for (int s = 0; s < 10; ++s) {
    const double th = ut(rng);
    std::vector<double> xi{std::sin(th), 0.0, std::cos(th)};
    CHECK(stereo_pull(u, chart, sigma, xi) == doctest::Approx(v(xi)).epsilon(1e-12));
  }
  // v == 1 pushes to the standard decay profile
  auto one = [](const std::vector<double>&) { return 1.0; };
  for (double r : {0.0, 0.5, 2.0}) {
    std::vector<double> x{r, 0.0};
    CHECK(stereo_push(one, chart, sigma, x) ==
          doctest::Approx(std::pow(2.0 / (1.0 + r * r), 0.5 * (n - 2.0 * sigma))).epsilon(1e-13));
  }
}

TEST_CASE("conjugation identity against the flat kernel quadrature") {
  const int n = 2;
  // v == 1: both sides equal c(n,s) |J_F|^{(n+2s)/2n} analytically; the
  // discrepancy is the quadrature error of the flat side
  for (double sigma : {0.25, 0.5, 0.75}) {
    auto g = SphereGrid::zonal(n, 24);
    auto ones = constant_field(g, 1.0);
    const double d1 = verify_conjugation(ones, sigma, {{0.0, 0.0}, {0.7, 0.0}, {1.8, 0.0}});
    CAPTURE(sigma);
    CHECK(d1 <= 1e-2);
    // lambda = 1 bubble is the constant 1
    auto v1 = sample_sphere_bubble(BubbleParams::sphere(n, sigma, south_pole(n), 1.0), g);
    const double d2 = verify_conjugation(v1, sigma, {{0.3, 0.0}});
    CHECK(d2 <= 1e-2);
  }
  // degree-1 zonal harmonic
  {
    const double sigma = 0.5;
    auto g = SphereGrid::zonal(n, 24);
    SpectralCoeffs e1;
    e1.n = n;
    e1.kind = GridKind::Zonal;
    e1.kmax = 2;
    e1.coeffs = {1.0, 0.4, 0.0};
    auto h = synthesize(e1, g);
    const double d = verify_conjugation(h, sigma, {{0.0, 0.0}, {0.5, 0.0}, {1.2, 0.0}});
    CHECK(d <= 1e-2);
  }
}
