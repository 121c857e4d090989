#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "fns/sphere.hpp"

namespace fns {

enum class Space { Sphere, Flat };

// Parameters of the closed-form extremal families.  Sphere centers are
// ambient unit vectors in R^{n+1}; flat centers live in R^n.
struct BubbleParams {
  Space space = Space::Sphere;
  int n = 2;
  double sigma = 0.5;
  std::vector<double> center;
  double lambda = 1.0;
  double amplitude = 1.0;

  static BubbleParams sphere(int n, double sigma, std::vector<double> center, double lambda,
                             double amplitude = 1.0);
  static BubbleParams flat(int n, double sigma, std::vector<double> center, double lambda,
                           double amplitude = 1.0);
};

std::vector<double> south_pole(int n);
std::vector<double> north_pole(int n);

// Geodesic distance on S^n with the inner product clamped to [-1,1].
double sphere_dist(const std::vector<double>& a, const std::vector<double>& b);

// v_{xi0,lambda}(xi) scaled by the amplitude.
double sphere_bubble(const BubbleParams& p, const std::vector<double>& xi);

// amplitude * (lambda / (1 + lambda^2 |x-x0|^2))^{(n-2 sigma)/2}.
double flat_bubble(const BubbleParams& p, const std::vector<double>& x);

SphereFunction sample_sphere_bubble(const BubbleParams& p, std::shared_ptr<const SphereGrid> grid);

// Mobius diffeomorphisms of S^n as lazy composition chains of primitives:
// sphere rotations plus chart-conjugated flat conformal maps (dilations,
// translations, the inversion) through the canonical stereographic chart
// with south pole -e_{n+1}.  |det d phi| is assembled by the chain rule
// from closed forms.
struct MobiusMap {
  struct Rotation {
    std::vector<double> matrix;  // (n+1)x(n+1), row-major, orthogonal
  };
  struct ChartDilate {
    double lambda;
  };
  struct ChartTranslate {
    std::vector<double> shift;
  };
  struct ChartInvert {};
  using Primitive = std::variant<Rotation, ChartDilate, ChartTranslate, ChartInvert>;

  int n = 2;
  std::vector<Primitive> chain;  // applied left to right

  static MobiusMap identity(int n);
  static MobiusMap dilation(int n, double lambda);
  static MobiusMap translation(int n, std::vector<double> shift);
  static MobiusMap inversion(int n);
  static MobiusMap rotation(int n, std::vector<double> matrix);

  // this map applied after `first`: (*this) o first.
  MobiusMap after(const MobiusMap& first) const;

  std::vector<double> apply(const std::vector<double>& xi) const;
  double log_det_jacobian(const std::vector<double>& xi) const;
};

using SphereEvaluator = std::function<double(const std::vector<double>&)>;

// T_phi v = (v o phi) |det d phi|^{(n-2 sigma)/2n} sampled on `grid`.
SphereFunction conformal_normalize(const SphereEvaluator& v, std::shared_ptr<const SphereGrid> grid,
                                   const MobiusMap& phi, double sigma);
// Same, with v band-limited from its samples at the grid's full resolution.
SphereFunction conformal_normalize(const SphereFunction& v, const MobiusMap& phi, double sigma);

// Fields on the closed half space; points are (x_1..x_n, t).
using HalfSpaceField = std::function<double(const std::vector<double>&)>;

// Kelvin transform about the boundary sphere of radius lambda centered at
// (xbar, 0).  Evaluating the returned field at the center throws.
HalfSpaceField kelvin(HalfSpaceField U, std::vector<double> xbar, double lambda, int n,
                      double sigma);

}  // namespace fns
