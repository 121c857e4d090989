#pragma once

#include <memory>
#include <vector>

#include "fns/quadrature.hpp"

namespace fns {

enum class GridKind { Full2Sphere, Zonal };

// Quadrature grid on S^n.  Zonal grids (any n >= 2) carry Gauss-Gegenbauer
// nodes in cos(colatitude); the full grid (n = 2 only) adds uniform
// longitudes.  Colatitude weights are scaled so that summing them (times
// the longitude factor for the full grid) gives |S^n| exactly up to
// rounding.
struct SphereGrid {
  int n = 2;
  GridKind kind = GridKind::Zonal;
  std::vector<double> colat_nodes;    // theta in (0, pi), strictly increasing
  std::vector<double> colat_weights;  // positive
  int lon_count = 0;                  // Full2Sphere only

  static std::shared_ptr<const SphereGrid> zonal(int n, int n_colat);
  static std::shared_ptr<const SphereGrid> full2(int n_colat, int lon_count);
  // Grid able to resolve degree kmax with quadrature headroom for products.
  static std::shared_ptr<const SphereGrid> for_kmax(int n, GridKind kind, int kmax);

  std::size_t node_count() const;
  int max_degree() const;  // largest kmax analyze() supports on this grid
  double node_weight(std::size_t flat_index) const;
  // Ambient coordinates in R^{n+1} of a grid node; zonal nodes sit on the
  // meridian phi = 0.  Axis convention: colatitude measured from the north
  // pole e_{n+1}.
  std::vector<double> node_point(std::size_t flat_index) const;
  double surface_measure() const;  // |S^n|
};

struct SphereFunction {
  std::shared_ptr<const SphereGrid> grid;
  std::vector<double> values;  // zonal: per colatitude; full: row-major [colat][lon]

  double integral() const;                                 // quadrature of f
  double integral_power(double p) const;                   // quadrature of f^p
  double mean() const;
  double max_abs() const;
  double max() const;
  double min() const;
};

// Spherical-harmonic (Full2Sphere) or Gegenbauer-zonal coefficients with
// unit-L2-normalized real basis functions.
struct SpectralCoeffs {
  int n = 2;
  GridKind kind = GridKind::Zonal;
  int kmax = 0;
  std::vector<double> coeffs;  // zonal: index k; full: k*k + (m+k)

  std::size_t index(int k, int m) const { return static_cast<std::size_t>(k) * k + (m + k); }
  // Per-degree energy sum_m c_{k,m}^2.
  std::vector<double> degree_energies() const;
};

// Gegenbauer polynomial C_k^nu(x) by the three-term recurrence.
double gegenbauer_eval(int k, double nu, double x);

// L2(S^n) norm of the zonal basis polynomial C_k^nu(cos theta), nu=(n-1)/2.
double zonal_basis_norm(int n, int k);

SpectralCoeffs analyze(const SphereFunction& f, int kmax);
SphereFunction synthesize(const SpectralCoeffs& c, std::shared_ptr<const SphereGrid> grid);

// Repeated band-limited point evaluation with cached normalizations and
// reusable scratch.  One instance per thread; not safe to share.
class BandEvaluator {
 public:
  explicit BandEvaluator(SpectralCoeffs coeffs);
  double at(double theta, double phi = 0.0) const;
  double at_point(const std::vector<double>& xi) const;
  const SpectralCoeffs& coeffs() const { return c_; }

 private:
  SpectralCoeffs c_;
  std::vector<double> zonal_scale_;      // coeff / basis norm per degree
  mutable std::vector<double> row_;      // associated-Legendre scratch
};

// Band-limited point evaluation.  theta = colatitude, phi = longitude
// (ignored for zonal coefficients).
double synth_at(const SpectralCoeffs& c, double theta, double phi = 0.0);
// Same, at an ambient unit vector.
double synth_at_point(const SpectralCoeffs& c, const std::vector<double>& xi);

// d/dtheta of the band-limited representation at (theta, phi).
double synth_dtheta(const SpectralCoeffs& c, double theta, double phi = 0.0);
// d/dphi (Full2Sphere only).
double synth_dphi(const SpectralCoeffs& c, double theta, double phi);

// Ambient representation of the tangential gradient of the band-limited
// field at a grid node (length n+1).
std::vector<double> tangential_gradient(const SpectralCoeffs& c, double theta, double phi);

// theta/phi coordinates of a flat node index on its grid.
void node_angles(const SphereGrid& grid, std::size_t flat_index, double& theta, double& phi);

}  // namespace fns
