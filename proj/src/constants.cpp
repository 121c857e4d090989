#include "fns/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fns {

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  return std::lgamma(x);
}

double sphere_area(int n) {
  return 2.0 * std::pow(M_PI, 0.5 * (n + 1)) / gamma_fn(0.5 * (n + 1));
}

double critical_exponent(int n, double sigma) {
  return (n + 2.0 * sigma) / (n - 2.0 * sigma);
}

double multiplier(int k, int n, double sigma) {
  if (k < 0) throw std::domain_error("multiplier: degree must be nonnegative");
  if (n < 2) throw std::domain_error("multiplier: n must be at least 2");
  if (!(sigma > 0.0 && sigma <= 1.0)) throw std::domain_error("multiplier: sigma must lie in (0,1]");
  const double half_n = 0.5 * n;
  // k + n/2 - sigma = 0 only for (k=0, n=2, sigma=1); 1/Gamma(0) = 0 there,
  // matching the zero bottom eigenvalue of the conformal Laplacian on S^2.
  if (k + half_n - sigma <= 0.0) return 0.0;
  return std::exp(log_gamma(k + half_n + sigma) - log_gamma(k + half_n - sigma));
}

ConformalConstants make_constants(int n, double sigma) {
  if (n < 2) throw std::domain_error("make_constants: n must be at least 2");
  if (!(sigma > 0.0 && sigma < 1.0))
    throw std::domain_error("make_constants: sigma must lie in (0,1), got " + std::to_string(sigma));
  ConformalConstants c;
  c.n = n;
  c.sigma = sigma;
  c.c_n_sigma = multiplier(0, n, sigma);
  c.c_n_neg_sigma = std::pow(2.0, 2.0 * sigma) * sigma *
                    std::exp(log_gamma(0.5 * (n + 2.0 * sigma)) - 0.5 * n * std::log(M_PI) -
                             log_gamma(1.0 - sigma));
  c.N_sigma = std::pow(2.0, 1.0 - 2.0 * sigma) * std::exp(log_gamma(1.0 - sigma) - log_gamma(sigma));
  c.beta_n_sigma = std::exp(log_gamma(0.5 * (n + 2.0 * sigma)) - 0.5 * n * std::log(M_PI) -
                            log_gamma(sigma));
  c.a_liouville = std::pow(c.N_sigma * c.c_n_sigma * std::pow(2.0, 2.0 * sigma),
                           (n - 2.0 * sigma) / (4.0 * sigma));
  return c;
}

}  // namespace fns
