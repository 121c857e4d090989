#pragma once

// Test-only oracle: the homogeneous H^sigma norm of the flat bubble via its
// radial Fourier transform.  For u1(x) = (1+|x|^2)^{-(n-2s)/2} the unitary
// transform is (2^{1-a}/Gamma(a)) |k|^{a-n/2} K_{n/2-a}(|k|) with
// a = (n-2s)/2, so
//   ||u1||^2 = |S^{n-1}| (2^{1-a}/Gamma(a))^2 int_0^inf k^{n-1} K_s(k)^2 dk,
// and the Mellin integral has the closed form
//   (sqrt(pi)/4) Gamma(n/2) Gamma(n/2+s) Gamma(n/2-s) / Gamma((n+1)/2).
// Scaling and translation leave the norm unchanged; amplitude enters
// quadratically.  Independent of every extension/energy code path.

#include <cmath>

#include "fns/constants.hpp"
#include "fns/quadrature.hpp"

namespace fns_test {

inline double bessel_k_integral_closed_form(int n, double sigma) {
  using fns::log_gamma;
  return 0.25 * std::sqrt(M_PI) *
         std::exp(log_gamma(0.5 * n) + log_gamma(0.5 * n + sigma) + log_gamma(0.5 * n - sigma) -
                  log_gamma(0.5 * (n + 1)));
}

inline double bessel_k_integral_quadrature(int n, double sigma) {
  // int_0^inf k^{n-1} K_sigma(k)^2 dk; K decays like e^{-k}, truncate at 40
  std::vector<double> edges{0.0};
  for (double w = 1e-4; edges.back() < 40.0; w *= 2.0) edges.push_back(std::min(40.0, edges.back() + w));
  const fns::Rule1D rule = fns::composite_legendre(edges, 24);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double k = rule.nodes[i];
    if (k == 0.0) continue;
    const double kv = std::cyl_bessel_k(sigma, k);
    acc += rule.weights[i] * std::pow(k, n - 1) * kv * kv;
  }
  return acc;
}

// ||u||^2_{Hdot^sigma} for u = amplitude (lambda/(1+lambda^2 |x-x0|^2))^{(n-2s)/2}
inline double hsigma_norm_sq_bubble(int n, double sigma, double amplitude) {
  using fns::log_gamma;
  const double a = 0.5 * (n - 2.0 * sigma);
  const double c = std::exp((1.0 - a) * std::log(2.0) - log_gamma(a));
  return amplitude * amplitude * fns::sphere_area(n - 1) * c * c *
         bessel_k_integral_closed_form(n, sigma);
}

}  // namespace fns_test
