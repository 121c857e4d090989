#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fns/constants.hpp"
#include "fns/quadrature.hpp"

using namespace fns;

TEST_CASE("gamma at integers and half-integers") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  // sqrt(pi) to full precision
  CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160273).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-2.5), std::domain_error);
}

TEST_CASE("gamma recurrence property on [0.1, 50]") {
  for (double x = 0.1; x <= 50.0; x += 0.37) {
    const double lhs = gamma_fn(x + 1.0);
    const double rhs = x * gamma_fn(x);
    CHECK(std::abs(lhs - rhs) / lhs <= 1e-13);
  }
}

TEST_CASE("multiplier base cases") {
  CHECK(multiplier(0, 2, 0.5) == doctest::Approx(0.5).epsilon(1e-13));
  for (int n : {2, 3, 4, 5}) {
    for (double sigma : {0.25, 0.5, 0.75}) {
      const ConformalConstants c = make_constants(n, sigma);
      CHECK(multiplier(0, n, sigma) == doctest::Approx(c.c_n_sigma).epsilon(1e-14));
      // closed form of the degree-0 eigenvalue
      const double closed = gamma_fn(0.5 * n + sigma) / gamma_fn(0.5 * n - sigma);
      CHECK(c.c_n_sigma == doctest::Approx(closed).epsilon(1e-13));
    }
  }
}

TEST_CASE("multiplier at sigma = 1 matches the conformal-Laplacian spectrum") {
  for (int n : {2, 3, 4, 5})
    for (int k = 0; k <= 50; ++k) {
      const double expect = (k + 0.5 * n) * (k + 0.5 * n - 1.0);
      if (expect == 0.0)
        CHECK(multiplier(k, n, 1.0) == 0.0);
      else
        CHECK(std::abs(multiplier(k, n, 1.0) - expect) / expect <= 1e-12);
    }
}

TEST_CASE("multiplier monotone in degree and in sigma") {
  for (int n : {2, 3, 4}) {
    for (double sigma : {0.25, 0.5, 0.75}) {
      double prev = 0.0;
      for (int k = 0; k <= 80; ++k) {
        const double lk = multiplier(k, n, sigma);
        CHECK(lk > 0.0);
        CHECK(lk > prev);
        CHECK(lk >= multiplier(0, n, sigma) * (1.0 - 1e-15));
        prev = lk;
      }
    }
    // sigma-monotonicity holds whenever k + n/2 >= 2; the degree-0
    // eigenvalue on S^2 and S^3 is a genuine counterexample (it tends to 0
    // resp. 1 as sigma -> 1), so k = 0 is only checked for n >= 4.
    for (int k : {0, 1, 3, 17}) {
      if (k == 0 && n < 4) continue;
      double prev = 0.0;
      for (int i = 1; i <= 20; ++i) {
        const double lk = multiplier(k, n, 0.05 * i);
        CHECK(lk > prev);
        prev = lk;
      }
    }
  }
  // the documented exception, pinned by direct Gamma values
  CHECK(multiplier(0, 2, 0.9) < multiplier(0, 2, 0.5));
  CHECK(multiplier(0, 3, 0.75) < multiplier(0, 3, 0.25));
}

TEST_CASE("multiplier avoids overflow at large degree") {
  const double l = multiplier(100000, 3, 0.75);
  CHECK(std::isfinite(l));
  // lambda_k ~ k^{2 sigma}
  CHECK(l == doctest::Approx(std::pow(100000.0 + 1.5, 1.5)).epsilon(1e-3));
}

TEST_CASE("named constants") {
  CHECK_THROWS_AS(make_constants(2, 1.0), std::domain_error);
  CHECK_THROWS_AS(make_constants(2, 0.0), std::domain_error);
  CHECK_THROWS_AS(make_constants(1, 0.5), std::domain_error);

  const ConformalConstants c = make_constants(2, 0.5);
  CHECK(c.N_sigma == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.c_n_sigma == doctest::Approx(0.5).epsilon(1e-14));

  for (int n : {2, 3, 4}) {
    for (double sigma : {0.25, 0.5, 0.75}) {
      const ConformalConstants k = make_constants(n, sigma);
      CHECK(k.N_sigma == doctest::Approx(std::pow(2.0, 1.0 - 2.0 * sigma) * gamma_fn(1.0 - sigma) /
                                          gamma_fn(sigma))
                             .epsilon(1e-13));
      CHECK(k.c_n_neg_sigma ==
            doctest::Approx(std::pow(2.0, 2.0 * sigma) * sigma * gamma_fn(0.5 * (n + 2.0 * sigma)) /
                            (std::pow(M_PI, 0.5 * n) * gamma_fn(1.0 - sigma)))
                .epsilon(1e-13));
      CHECK(k.a_liouville ==
            doctest::Approx(std::pow(k.N_sigma * k.c_n_sigma * std::pow(2.0, 2.0 * sigma),
                                     (n - 2.0 * sigma) / (4.0 * sigma)))
                .epsilon(1e-13));
    }
  }
}

// beta(n, sigma) must normalize the Poisson kernel at t = 1:
// beta * int_{R^n} (1+|x|^2)^{-(n+2 sigma)/2} dx = 1.  The integral is done
// radially with the substitution r = tan(u), an independent quadrature oracle.
TEST_CASE("poisson normalization constant") {
  for (int n : {1, 2, 3, 4}) {
    for (double sigma : {0.25, 0.5, 0.75}) {
      // closed form used by the library (valid for n >= 1)
      const double beta = std::exp(log_gamma(0.5 * (n + 2.0 * sigma)) -
                                   0.5 * n * std::log(M_PI) - log_gamma(sigma));
      // inner part r in (0,1) is smooth; the r > 1 tail becomes, with
      // r = 1/s, the integral of s^{2 sigma - 1} (1+s^2)^{-(n+2 sigma)/2},
      // handled by a Gauss-Jacobi rule carrying the s^{2 sigma - 1} weight.
      const Rule1D inner = gauss_legendre(64).mapped_to(0.0, 1.0);
      double integral = 0.0;
      for (std::size_t i = 0; i < inner.nodes.size(); ++i) {
        const double r = inner.nodes[i];
        integral += inner.weights[i] * std::pow(r, n - 1) *
                    std::pow(1.0 + r * r, -0.5 * (n + 2.0 * sigma));
      }
      const Rule1D outer = gauss_jacobi(64, 0.0, 2.0 * sigma - 1.0);
      for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
        const double s = 0.5 * (1.0 + outer.nodes[i]);
        integral += outer.weights[i] * std::pow(0.5, 2.0 * sigma) *
                    std::pow(1.0 + s * s, -0.5 * (n + 2.0 * sigma));
      }
      integral *= fns::sphere_area(n - 1);
      CHECK(beta * integral == doctest::Approx(1.0).epsilon(1e-10));
      if (n == 1 && sigma == 0.5) CHECK(beta == doctest::Approx(1.0 / M_PI).epsilon(1e-13));
      if (n >= 2) CHECK(make_constants(n, sigma).beta_n_sigma == doctest::Approx(beta).epsilon(1e-14));
    }
  }
}

TEST_CASE("gauss-jacobi sanity") {
  // Legendre, 2 nodes
  const Rule1D gl = gauss_legendre(2);
  CHECK(gl.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(gl.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(gl.weights[0] == doctest::Approx(1.0).epsilon(1e-14));

  // weight sums equal the weight-function mass
  for (double alpha : {0.0, 0.5, 1.0}) {
    for (double beta : {-0.5, 0.0, 0.5, 1.5}) {
      const Rule1D r = gauss_jacobi(24, alpha, beta);
      double mass = 0.0;
      for (double w : r.weights) mass += w;
      const double expect = std::exp((alpha + beta + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) +
                                     log_gamma(beta + 1.0) - log_gamma(alpha + beta + 2.0));
      CHECK(mass == doctest::Approx(expect).epsilon(1e-12));
      // degree-3 polynomial integrated exactly
      double got = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        const double x = r.nodes[i];
        got += r.weights[i] * (x * x * x - 2.0 * x + 1.0);
      }
      const Rule1D fine = gauss_jacobi(64, alpha, beta);
      double want = 0.0;
      for (std::size_t i = 0; i < fine.nodes.size(); ++i) {
        const double x = fine.nodes[i];
        want += fine.weights[i] * (x * x * x - 2.0 * x + 1.0);
      }
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
  }
}
