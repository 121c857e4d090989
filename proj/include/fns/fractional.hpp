#pragma once

#include <functional>
#include <vector>

#include "fns/constants.hpp"
#include "fns/sphere.hpp"

namespace fns {

// Stereographic chart F: R^n -> S^n \ {antipode of south_pole}, F(0) = south_pole.
struct StereoChart {
  int n = 2;
  std::vector<double> south_pole;

  static StereoChart canonical(int n);  // south pole -e_{n+1}
  static StereoChart at(std::vector<double> south_pole);

  std::vector<double> to_sphere(const std::vector<double>& x) const;
  std::vector<double> to_plane(const std::vector<double>& xi) const;
  double jacobian(const std::vector<double>& x) const;  // |J_F| = (2/(1+|x|^2))^n
};

// Multiplier realization: coefficients scaled degreewise by
// Gamma(k+n/2+sigma)/Gamma(k+n/2-sigma).
SpectralCoeffs apply_psigma_spectral(const SpectralCoeffs& c, double sigma);
SphereFunction apply_psigma_spectral(const SphereFunction& v, double sigma, int kmax);

// Singular-integral realization, evaluated pointwise:
//   P_sigma(v)(xi) = P_sigma(1) v(xi) + c_{n,-sigma} int (v(xi)-v(zeta)) / |xi-zeta|^{n+2s}.
// The kernel distance is chordal.  The integral is absolutely convergent for
// C^2 fields; the colatitude-polar quadrature splits a geodesic cap where
// the r^{1-2 sigma} radial behavior is carried by a Gauss-Jacobi weight.
struct IntegralOptions {
  double cap_radius = 0.1;
  int singular_nodes = 32;  // Jacobi nodes on the cap
  int radial_nodes = 24;    // per outer panel
  int angular_nodes = 64;
};

double apply_psigma_integral(const BandEvaluator& v, double sigma, const std::vector<double>& xi,
                             const IntegralOptions& opt = {});
double apply_psigma_integral(const SphereFunction& v, double sigma, const std::vector<double>& xi,
                             const IntegralOptions& opt = {});

// u(x) = (2/(1+|x|^2))^{(n-2 sigma)/2} v(F(x)).
double stereo_push(const BandEvaluator& v, const StereoChart& chart, double sigma,
                   const std::vector<double>& x);
double stereo_push(const std::function<double(const std::vector<double>&)>& v,
                   const StereoChart& chart, double sigma, const std::vector<double>& x);
// Inverse weighting: recovers v(xi) from the pushed field.
double stereo_pull(const std::function<double(const std::vector<double>&)>& u,
                   const StereoChart& chart, double sigma, const std::vector<double>& xi);

// Direct kernel quadrature for the flat fractional Laplacian in
// second-difference form, with radial truncation and an analytic tail
// estimate from the field's power decay.  Verification-quality path.
struct FlatLaplacianOptions {
  double truncation_radius = 50.0;
  double inner_radius = 0.05;
  int singular_nodes = 24;
  int radial_nodes = 16;
  int angular_nodes = 48;
  double tail_decay = -1.0;  // decay exponent d in g ~ A |y|^{-d}; < 0 means n-2 sigma
};

// Radial field g(|y|); valid for every n >= 1.
double flat_fractional_laplacian_radial(const std::function<double(double)>& g, int n, double sigma,
                                        double radius, const FlatLaplacianOptions& opt = {});
// General field, n <= 2.
double flat_fractional_laplacian(const std::function<double(const std::vector<double>&)>& g, int n,
                                 double sigma, const std::vector<double>& x,
                                 const FlatLaplacianOptions& opt = {});

// Max relative discrepancy between (P_sigma v) o F and
// |J_F|^{-(n+2s)/2n} (-Delta)^s (|J_F|^{(n-2s)/2n} (v o F)) over flat sample
// points; spectral on the left, kernel quadrature on the right.
double verify_conjugation(const SphereFunction& v, double sigma,
                          const std::vector<std::vector<double>>& sample_points,
                          const FlatLaplacianOptions& opt = {});

}  // namespace fns
