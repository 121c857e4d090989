#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "fns/constants.hpp"
#include "fns/exact.hpp"

namespace fns {

enum class HalfSpaceKind { Radial, Slice1D };

// Tensor grid on a half-space section: radial (any n, radially symmetric
// data) or a 1-D slice (n = 1).  The t-mesh is graded, t_j = T (j/J)^gamma,
// so the t^{2 sigma} boundary layer is resolved; gamma defaults to
// max(2, 1/sigma).
struct HalfSpaceGrid {
  int n = 2;
  HalfSpaceKind kind = HalfSpaceKind::Radial;
  std::vector<double> x_nodes;  // radial: 0 = r_0 < ... ; slice: ascending
  std::vector<double> t_nodes;  // strictly increasing, t_1 > 0
  double t_top = 1.0;
  double grading = 2.0;

  static HalfSpaceGrid radial(int n, double sigma, int nx, double xmax, int nt, double t_top,
                              double gamma = -1.0);
  static HalfSpaceGrid slice(double sigma, int nx, double xmax, int nt, double t_top,
                             double gamma = -1.0);
  std::size_t index(std::size_t i, std::size_t j) const { return i * t_nodes.size() + j; }
};

// Boundary datum with decay metadata for analytic tail corrections.
struct FlatField {
  int n = 1;
  bool radial = true;
  std::function<double(double)> f;  // radial: f(r), r >= 0; slice: f(x)
  double tail_exponent = 0.0;       // u ~ c |x|^{-e} beyond the quadrature box
  double scale = 1.0;               // smallest feature length

  static FlatField radial_profile(int n, std::function<double(double)> f, double tail_exponent,
                                  double scale = 1.0);
  static FlatField slice(std::function<double(double)> f, double tail_exponent, double scale = 1.0);
  static FlatField bubble(const BubbleParams& p);  // centered flat bubble
};

// Sampled extension U(x,t) plus its boundary trace row.
struct ExtensionField {
  HalfSpaceGrid grid;
  double sigma = 0.5;
  std::vector<double> values;  // [x][t], t = t_1..t_J
  std::vector<double> trace;   // values at t = 0

  double value_at(double x, double t) const;
  double dx_at(double x, double t) const;
  // the weighted derivative t^{1-2s} dU/dt, continuous up to t = 0
  double weighted_dt_at(double x, double t) const;
  double dt_at(double x, double t) const;
  void write_csv(std::ostream& os) const;
};

// P_sigma(x,t) = beta(n,s) t^{2s} / (|x|^2 + t^2)^{(n+2s)/2}; t > 0.
double poisson_kernel(const std::vector<double>& x, double t, const ConformalConstants& consts);

struct ExtendOptions {
  double quad_radius = 60.0;  // truncation of the convolution integral
  int rho_nodes = 16;         // per panel
  int angular_nodes = 32;
  int tail_nodes = 32;
};

// Single-point Poisson extension; x is a radius (radial data) or a
// coordinate (slice data).  Written in the cancellation-free form
// U = u(x) + beta t^{2s} * int [angular mean difference], so the t^{2s}
// boundary layer is produced to absolute accuracy.
double poisson_extend_at(const FlatField& u, const ConformalConstants& consts, double x, double t,
                         const ExtendOptions& opt = {});

ExtensionField poisson_extend(const FlatField& u, const HalfSpaceGrid& grid, double sigma,
                              const ExtendOptions& opt = {});

// -2s b(x) from the two-point fit U ~ u(x) + b(x) t^{2s} at the two smallest
// t-levels; equals -lim t^{1-2s} dU/dt.
std::vector<double> neumann_trace(const ExtensionField& U);

// int over {x in (x_lo,x_hi), t in (t_lo,t_hi)} of t^{1-2s} |grad U|^2, with
// the radial measure |S^{n-1}| r^{n-1} dr included for radial grids.
double weighted_energy(const ExtensionField& U, double x_lo, double x_hi, double t_lo, double t_hi);

struct FdOptions {
  double cg_tol = 1e-10;
  int cg_max_iter = 100000;
};

using BoundaryValues = std::function<double(double x, double t)>;

// Weighted 5-point finite-volume solve of div(t^{1-2s} grad U) = 0 with
// Dirichlet data on the side/top boundary.  The bottom condition is either
// a prescribed trace or the linear Neumann datum
// -lim t^{1-2s} dU/dt = a(x) U(x,0) + b(x).
ExtensionField fd_solve_dirichlet(const HalfSpaceGrid& grid, double sigma,
                                  const std::function<double(double)>& trace,
                                  const BoundaryValues& side_top, const FdOptions& opt = {});
ExtensionField fd_solve_neumann(const HalfSpaceGrid& grid, double sigma,
                                const std::function<double(double)>& a,
                                const std::function<double(double)>& b,
                                const BoundaryValues& side_top, const FdOptions& opt = {});

}  // namespace fns
