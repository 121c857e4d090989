#pragma once

namespace fns {

// Gamma function for positive arguments.  Relative error <= 1e-13 on the
// range used by the toolkit (all arguments in scope are positive).
double gamma_fn(double x);

// log Gamma for positive arguments; used wherever ratios of large Gamma
// values would overflow in double precision.
double log_gamma(double x);

// Surface measure of the unit n-sphere, |S^n| = 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sphere_area(int n);

// Critical Sobolev-trace exponent (n+2*sigma)/(n-2*sigma).
double critical_exponent(int n, double sigma);

// Eigenvalue of the intertwining operator on degree-k spherical harmonics:
//   lambda_k = Gamma(k + n/2 + sigma) / Gamma(k + n/2 - sigma),
// computed in log space so large k never overflows.  sigma in (0,1]; the
// value sigma = 1 reproduces the conformal-Laplacian spectrum
// (k + n/2)(k + n/2 - 1).
double multiplier(int k, int n, double sigma);

// Every named constant of the operator family for a given (n, sigma).
struct ConformalConstants {
  int n = 0;
  double sigma = 0.0;
  double c_n_sigma = 0.0;      // P_sigma(1) = Gamma(n/2+sigma)/Gamma(n/2-sigma)
  double c_n_neg_sigma = 0.0;  // singular-integral constant
  double N_sigma = 0.0;        // extension normalization 2^{1-2s} Gamma(1-s)/Gamma(s)
  double beta_n_sigma = 0.0;   // Poisson-kernel normalization
  double a_liouville = 0.0;    // amplitude of the exact half-space solution
};

// Requires n >= 2 and sigma in (0,1).
ConformalConstants make_constants(int n, double sigma);

}  // namespace fns
