#include "fns/extension.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "fns/errors.hpp"
#include "fns/parallel.hpp"
#include "fns/quadrature.hpp"

namespace fns {

namespace {

double default_gamma(double sigma) { return std::max(2.0, 1.0 / sigma); }

std::vector<double> graded_t(int nt, double t_top, double gamma) {
  std::vector<double> t(nt);
  for (int j = 1; j <= nt; ++j) t[j - 1] = t_top * std::pow(static_cast<double>(j) / nt, gamma);
  return t;
}

// int_{a}^{b} t^{1-2s} dt
double weight_mass(double a, double b, double sigma) {
  const double p = 2.0 - 2.0 * sigma;
  return (std::pow(b, p) - std::pow(a, p)) / p;
}

// radial cell measure between r0 and r1 (without the |S^{n-1}| factor)
double radial_mass(double r0, double r1, int n) {
  return (std::pow(r1, n) - std::pow(r0, n)) / n;
}

}  // namespace

HalfSpaceGrid HalfSpaceGrid::radial(int n, double sigma, int nx, double xmax, int nt, double t_top,
                                    double gamma) {
  if (nx < 3 || nt < 2) throw std::domain_error("HalfSpaceGrid: too few nodes");
  HalfSpaceGrid g;
  g.n = n;
  g.kind = HalfSpaceKind::Radial;
  g.x_nodes.resize(nx);
  for (int i = 0; i < nx; ++i) g.x_nodes[i] = xmax * i / (nx - 1);
  g.grading = gamma > 0.0 ? gamma : default_gamma(sigma);
  g.t_top = t_top;
  g.t_nodes = graded_t(nt, t_top, g.grading);
  return g;
}

HalfSpaceGrid HalfSpaceGrid::slice(double sigma, int nx, double xmax, int nt, double t_top,
                                   double gamma) {
  if (nx < 3 || nt < 2) throw std::domain_error("HalfSpaceGrid: too few nodes");
  HalfSpaceGrid g;
  g.n = 1;
  g.kind = HalfSpaceKind::Slice1D;
  g.x_nodes.resize(nx);
  for (int i = 0; i < nx; ++i) g.x_nodes[i] = -xmax + 2.0 * xmax * i / (nx - 1);
  g.grading = gamma > 0.0 ? gamma : default_gamma(sigma);
  g.t_top = t_top;
  g.t_nodes = graded_t(nt, t_top, g.grading);
  return g;
}

FlatField FlatField::radial_profile(int n, std::function<double(double)> f, double tail_exponent,
                                    double scale) {
  FlatField u;
  u.n = n;
  u.radial = true;
  u.f = std::move(f);
  u.tail_exponent = tail_exponent;
  u.scale = scale;
  return u;
}

FlatField FlatField::slice(std::function<double(double)> f, double tail_exponent, double scale) {
  FlatField u;
  u.n = 1;
  u.radial = false;
  u.f = std::move(f);
  u.tail_exponent = tail_exponent;
  u.scale = scale;
  return u;
}

FlatField FlatField::bubble(const BubbleParams& p) {
  for (double c : p.center)
    if (c != 0.0) throw ShapeError("FlatField::bubble expects a centered bubble");
  BubbleParams copy = p;
  std::vector<double> pt(p.n, 0.0);
  return radial_profile(
      p.n,
      [copy, pt](double r) mutable {
        pt.assign(copy.n, 0.0);
        pt[0] = r;
        return flat_bubble(copy, pt);
      },
      p.n - 2.0 * p.sigma, std::min(1.0, 1.0 / p.lambda));
}

double poisson_kernel(const std::vector<double>& x, double t, const ConformalConstants& consts) {
  if (!(t > 0.0)) throw std::domain_error("poisson_kernel: t must be positive");
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  return consts.beta_n_sigma * std::pow(t, 2.0 * consts.sigma) *
         std::pow(r2 + t * t, -0.5 * (consts.n + 2.0 * consts.sigma));
}

namespace {

// mean over the unit sphere of directions of u(x + rho w)
struct AngularMean {
  Rule1D rule;  // Gegenbauer rule, radial data with n >= 2
  const FlatField* u = nullptr;
  double x = 0.0;

  double operator()(double rho) const {
    if (!u->radial) return 0.5 * (u->f(x - rho) + u->f(x + rho));
    if (u->n == 1) return 0.5 * (u->f(std::abs(x - rho)) + u->f(x + rho));
    double acc = 0.0, mass = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double c = rule.nodes[j];
      const double rr = std::sqrt(std::max(x * x + rho * rho + 2.0 * x * rho * c, 0.0));
      acc += rule.weights[j] * u->f(rr);
      mass += rule.weights[j];
    }
    return acc / mass;
  }
};

// panel edges for the rho integral: dyadic growth from the kernel scale t
// plus refinement where the datum has structure (|rho - x| < 2 scale)
std::vector<double> rho_edges(double t, double x, double scale, double S) {
  const double h0 = std::max(std::min(t, scale) / 4.0, S * 1e-12);
  std::vector<double> edges;
  double e = 0.0, w = h0;
  edges.push_back(0.0);
  while (e < S) {
    e = std::min(S, e + w);
    edges.push_back(e);
    w *= 2.0;
  }
  const double lo = std::max(h0, x - 2.0 * scale), hi = std::min(S, x + 2.0 * scale);
  for (double v = lo; v < hi; v += 0.5 * scale) edges.push_back(v);
  std::sort(edges.begin(), edges.end());
  std::vector<double> out;
  for (double v : edges)
    if (out.empty() || v - out.back() > h0 * 1e-3) out.push_back(v);
  if (out.back() < S) out.push_back(S);
  return out;
}

}  // namespace

double poisson_extend_at(const FlatField& u, const ConformalConstants& consts, double x, double t,
                         const ExtendOptions& opt) {
  const int n = u.n;
  const double sigma = consts.sigma;
  const double beta = std::exp(log_gamma(0.5 * (n + 2.0 * sigma)) - 0.5 * n * std::log(M_PI) -
                               log_gamma(sigma));
  const double ux = u.radial ? u.f(std::abs(x)) : u.f(x);
  if (t == 0.0) return ux;
  if (!(t > 0.0)) throw std::domain_error("poisson_extend_at: t must be nonnegative");

  AngularMean mean;
  mean.u = &u;
  mean.x = u.radial ? std::abs(x) : x;
  if (u.radial && n >= 2) mean.rule = gauss_jacobi(opt.angular_nodes, 0.5 * (n - 3), 0.5 * (n - 3));

  const double S = opt.quad_radius;
  const double area = sphere_area(n - 1);

  // U - u(x) = beta t^{2s} |S^{n-1}| int_0^S rho^{n-1} (rho^2+t^2)^{-(n+2s)/2}
  //            (mean(rho) - u(x)) d rho + tails; the kernel mass is exactly 1,
  // so the boundary layer comes out to absolute accuracy.
  const std::vector<double> edges = rho_edges(t, mean.x, u.scale, S);
  const Rule1D rule = composite_legendre(edges, opt.rho_nodes);
  double integral = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = rule.nodes[i];
    integral += rule.weights[i] * std::pow(rho, n - 1) *
                std::pow(rho * rho + t * t, -0.5 * (n + 2.0 * sigma)) * (mean(rho) - ux);
  }

  // J(e) = int_S^inf rho^{n-1-e} (rho^2+t^2)^{-(n+2s)/2} d rho via rho = S/tau,
  // with the tau^{2s+e-1} endpoint carried by a Jacobi weight
  auto tail_j = [&](double e) {
    const Rule1D jr = gauss_jacobi(opt.tail_nodes, 0.0, 2.0 * sigma + e - 1.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < jr.nodes.size(); ++i) {
      const double tau = 0.5 * (1.0 + jr.nodes[i]);
      acc += jr.weights[i] * std::pow(0.5, 2.0 * sigma + e) *
             std::pow(1.0 + (t * tau / S) * (t * tau / S), -0.5 * (n + 2.0 * sigma));
    }
    return acc * std::pow(S, -2.0 * sigma - e);
  };
  const double e = u.tail_exponent;
  const double c_tail = mean(S) * std::pow(S, e);
  integral += c_tail * tail_j(e) - ux * tail_j(0.0);

  return ux + beta * std::pow(t, 2.0 * sigma) * area * integral;
}

ExtensionField poisson_extend(const FlatField& u, const HalfSpaceGrid& grid, double sigma,
                              const ExtendOptions& opt) {
  if ((grid.kind == HalfSpaceKind::Radial) != u.radial)
    throw ShapeError("poisson_extend: grid and datum disagree about radial symmetry");
  ConformalConstants consts = make_constants(std::max(u.n, 2), sigma);
  consts.n = u.n;
  ExtensionField U;
  U.grid = grid;
  U.sigma = sigma;
  const std::size_t nx = grid.x_nodes.size(), nt = grid.t_nodes.size();
  U.values.assign(nx * nt, 0.0);
  U.trace.resize(nx);
  for (std::size_t i = 0; i < nx; ++i)
    U.trace[i] = u.radial ? u.f(std::abs(grid.x_nodes[i])) : u.f(grid.x_nodes[i]);
  parallel_for(nx * nt, [&](std::size_t idx) {
    const std::size_t i = idx / nt, j = idx % nt;
    U.values[idx] = poisson_extend_at(u, consts, grid.x_nodes[i], grid.t_nodes[j], opt);
  });
  return U;
}

double ExtensionField::value_at(double x, double t) const {
  const auto& xs = grid.x_nodes;
  const auto& ts = grid.t_nodes;
  if (x < xs.front() - 1e-12 || x > xs.back() + 1e-12 || t < -1e-15 || t > ts.back() + 1e-12)
    throw std::domain_error("ExtensionField::value_at: point outside the sampled box");
  const double dx = xs[1] - xs[0];
  std::size_t i = std::min(xs.size() - 2, static_cast<std::size_t>(std::max(0.0, (x - xs[0]) / dx)));
  const double ax = std::clamp((x - xs[i]) / dx, 0.0, 1.0);

  auto column = [&](std::size_t ii) -> double {
    if (t <= ts[0]) {
      // boundary layer: u + (U_1 - u)(t/t_1)^{2s}
      const double u0 = trace[ii];
      const double u1 = values[grid.index(ii, 0)];
      return u0 + (u1 - u0) * std::pow(std::max(t, 0.0) / ts[0], 2.0 * sigma);
    }
    const std::size_t j = std::min(
        ts.size() - 2,
        static_cast<std::size_t>(std::lower_bound(ts.begin(), ts.end(), t) - ts.begin()) == 0
            ? 0
            : static_cast<std::size_t>(std::lower_bound(ts.begin(), ts.end(), t) - ts.begin()) - 1);
    const double at = std::clamp((t - ts[j]) / (ts[j + 1] - ts[j]), 0.0, 1.0);
    return (1.0 - at) * values[grid.index(ii, j)] + at * values[grid.index(ii, j + 1)];
  };
  return (1.0 - ax) * column(i) + ax * column(i + 1);
}

double ExtensionField::dx_at(double x, double t) const {
  const double h = grid.x_nodes[1] - grid.x_nodes[0];
  const double lo = grid.x_nodes.front(), hi = grid.x_nodes.back();
  const double xm = std::max(lo, x - h), xp = std::min(hi, x + h);
  return (value_at(xp, t) - value_at(xm, t)) / (xp - xm);
}

double ExtensionField::weighted_dt_at(double x, double t) const {
  const auto& ts = grid.t_nodes;
  const double dx = grid.x_nodes[1] - grid.x_nodes[0];
  std::size_t i = std::min(grid.x_nodes.size() - 2,
                           static_cast<std::size_t>(std::max(0.0, (x - grid.x_nodes[0]) / dx)));
  const double ax = std::clamp((x - grid.x_nodes[i]) / dx, 0.0, 1.0);
  auto flux = [&](std::size_t ii) -> double {
    // exact transmissibility form: t^{1-2s} dU/dt = 2s dU / d(t^{2s})
    if (t <= ts[0]) {
      const double u0 = trace[ii], u1 = values[grid.index(ii, 0)];
      return 2.0 * sigma * (u1 - u0) / std::pow(ts[0], 2.0 * sigma);
    }
    std::size_t j =
        static_cast<std::size_t>(std::lower_bound(ts.begin(), ts.end(), t) - ts.begin());
    j = std::min(ts.size() - 2, j == 0 ? 0 : j - 1);
    const double num = values[grid.index(ii, j + 1)] - values[grid.index(ii, j)];
    return 2.0 * sigma * num / (std::pow(ts[j + 1], 2.0 * sigma) - std::pow(ts[j], 2.0 * sigma));
  };
  return (1.0 - ax) * flux(i) + ax * flux(i + 1);
}

double ExtensionField::dt_at(double x, double t) const {
  return weighted_dt_at(x, t) * std::pow(std::max(t, grid.t_nodes[0] * 1e-6), 2.0 * sigma - 1.0);
}

void ExtensionField::write_csv(std::ostream& os) const {
  char buf[128];
  os << (grid.kind == HalfSpaceKind::Radial ? "r" : "x") << ",t,value\n";
  for (std::size_t i = 0; i < grid.x_nodes.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,0,%.17g\n", grid.x_nodes[i], trace[i]);
    os << buf;
    for (std::size_t j = 0; j < grid.t_nodes.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid.x_nodes[i], grid.t_nodes[j],
                    values[grid.index(i, j)]);
      os << buf;
    }
  }
}

std::vector<double> neumann_trace(const ExtensionField& U) {
  const auto& ts = U.grid.t_nodes;
  if (ts.size() < 2) throw ShapeError("neumann_trace: need at least two t-levels");
  const double w1 = std::pow(ts[0], 2.0 * U.sigma), w2 = std::pow(ts[1], 2.0 * U.sigma);
  std::vector<double> out(U.grid.x_nodes.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double b = (U.values[U.grid.index(i, 1)] - U.values[U.grid.index(i, 0)]) / (w2 - w1);
    out[i] = -2.0 * U.sigma * b;
  }
  return out;
}

double weighted_energy(const ExtensionField& U, double x_lo, double x_hi, double t_lo,
                       double t_hi) {
  const auto& xs = U.grid.x_nodes;
  const auto& ts = U.grid.t_nodes;
  const double s = U.sigma;
  const bool radial = U.grid.kind == HalfSpaceKind::Radial;
  const double ang = radial ? sphere_area(U.grid.n - 1) : 1.0;

  auto value = [&](std::size_t i, int j) {
    return j < 0 ? U.trace[i] : U.values[U.grid.index(i, j)];
  };

  double energy = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] < x_lo - 1e-12 || xs[i + 1] > x_hi + 1e-12) continue;
    const double dxm = radial ? ang * radial_mass(xs[i], xs[i + 1], U.grid.n) : (xs[i + 1] - xs[i]);
    for (int j = -1; j + 1 < static_cast<int>(ts.size()); ++j) {
      const double ta = j < 0 ? 0.0 : ts[j];
      const double tb = ts[j + 1];
      if (ta < t_lo - 1e-12 || tb > t_hi + 1e-12) continue;
      const double wmass = weight_mass(ta, tb, s);
      // x-part: mean of the two edge difference quotients
      const double gx = 0.5 *
                        ((value(i + 1, j) - value(i, j)) + (value(i + 1, j + 1) - value(i, j + 1))) /
                        (xs[i + 1] - xs[i]);
      energy += dxm * wmass * gx * gx;
      // t-part in flux form: t^{1-2s}(dU/dt)^2 integrates to d^2 D(t^{2s})/(2s)
      const double dts = std::pow(tb, 2.0 * s) - std::pow(ta, 2.0 * s);
      const double d_left = 2.0 * s * (value(i, j + 1) - value(i, j)) / dts;
      const double d_right = 2.0 * s * (value(i + 1, j + 1) - value(i + 1, j)) / dts;
      const double d2 = 0.5 * (d_left * d_left + d_right * d_right);
      energy += dxm * d2 * dts / (2.0 * s);
    }
  }
  return energy;
}

namespace {

struct FvSystem {
  Eigen::SparseMatrix<double> A;
  Eigen::VectorXd rhs;
  std::vector<long> unknown_of_node;  // -1 when Dirichlet
  std::vector<double> fixed;          // Dirichlet values per node (incl. t=0 row)
};

// Node layout: j = 0 is the t = 0 row, j = 1..J the graded levels.
FvSystem assemble(const HalfSpaceGrid& grid, double sigma, bool dirichlet_bottom,
                  const std::function<double(double)>& trace_or_a,
                  const std::function<double(double)>& b, const BoundaryValues& side_top) {
  const auto& xs = grid.x_nodes;
  const std::size_t nx = xs.size();
  const std::size_t nt = grid.t_nodes.size() + 1;  // including t=0 row
  const bool radial = grid.kind == HalfSpaceKind::Radial;
  const int n = grid.n;

  auto tof = [&](std::size_t j) { return j == 0 ? 0.0 : grid.t_nodes[j - 1]; };
  auto node = [&](std::size_t i, std::size_t j) { return i * nt + j; };

  std::vector<double> fixed(nx * nt, 0.0);
  std::vector<char> is_fixed(nx * nt, 0);
  for (std::size_t i = 0; i < nx; ++i) {
    is_fixed[node(i, nt - 1)] = 1;  // top
    fixed[node(i, nt - 1)] = side_top(xs[i], tof(nt - 1));
  }
  for (std::size_t j = 0; j < nt; ++j) {
    if (!radial) {
      is_fixed[node(0, j)] = 1;
      fixed[node(0, j)] = side_top(xs[0], tof(j));
    }
    is_fixed[node(nx - 1, j)] = 1;
    fixed[node(nx - 1, j)] = side_top(xs[nx - 1], tof(j));
  }
  if (dirichlet_bottom) {
    for (std::size_t i = 0; i < nx; ++i) {
      if (!is_fixed[node(i, 0)]) {
        is_fixed[node(i, 0)] = 1;
        fixed[node(i, 0)] = trace_or_a(xs[i]);
      }
    }
  }

  std::vector<long> idx(nx * nt, -1);
  long count = 0;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nt; ++j)
      if (!is_fixed[node(i, j)]) idx[node(i, j)] = count++;

  const double dx = xs[1] - xs[0];
  auto xmass = [&](std::size_t i) {  // dual-cell measure around x_i
    const double lo = i == 0 ? xs[0] : 0.5 * (xs[i - 1] + xs[i]);
    const double hi = i + 1 == nx ? xs[nx - 1] : 0.5 * (xs[i] + xs[i + 1]);
    return radial ? radial_mass(lo, hi, n) : hi - lo;
  };
  auto xface = [&](std::size_t i) {  // face measure between x_i and x_{i+1}
    const double m = 0.5 * (xs[i] + xs[i + 1]);
    return radial ? std::pow(m, n - 1) : 1.0;
  };
  auto tmass = [&](std::size_t j) {  // int t^{1-2s} over the dual cell at level j
    const double lo = j == 0 ? 0.0 : 0.5 * (tof(j - 1) + tof(j));
    const double hi = j + 1 == nt ? tof(nt - 1) : 0.5 * (tof(j) + tof(j + 1));
    return weight_mass(lo, hi, sigma);
  };
  auto t_trans = [&](std::size_t j) {  // exact 1-D transmissibility between j, j+1
    return 2.0 * sigma / (std::pow(tof(j + 1), 2.0 * sigma) - std::pow(tof(j), 2.0 * sigma));
  };

  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(count);

  auto couple = [&](long row, std::size_t nb_node, double coeff) {
    if (idx[nb_node] >= 0)
      trip.emplace_back(row, idx[nb_node], -coeff);
    else
      rhs[row] += coeff * fixed[nb_node];
  };

  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const long row = idx[node(i, j)];
      if (row < 0) continue;
      double diag = 0.0;
      if (i + 1 < nx) {
        const double T = xface(i) * tmass(j) / dx;
        couple(row, node(i + 1, j), T);
        diag += T;
      }
      if (i > 0) {
        const double T = xface(i - 1) * tmass(j) / dx;
        couple(row, node(i - 1, j), T);
        diag += T;
      }
      if (j + 1 < nt) {
        const double T = xmass(i) * t_trans(j);
        couple(row, node(i, j + 1), T);
        diag += T;
      }
      if (j > 0) {
        const double T = xmass(i) * t_trans(j - 1);
        couple(row, node(i, j - 1), T);
        diag += T;
      }
      if (j == 0 && !dirichlet_bottom) {
        // weighted Neumann inflow: -lim t^{1-2s} dU/dt = a U + b
        diag -= xmass(i) * trace_or_a(xs[i]);
        rhs[row] += xmass(i) * b(xs[i]);
      }
      trip.emplace_back(row, row, diag);
    }
  }

  FvSystem sys;
  sys.A.resize(count, count);
  sys.A.setFromTriplets(trip.begin(), trip.end());
  sys.rhs = rhs;
  sys.unknown_of_node = idx;
  sys.fixed = fixed;
  return sys;
}

ExtensionField fd_solve_impl(const HalfSpaceGrid& grid, double sigma, bool dirichlet_bottom,
                             const std::function<double(double)>& trace_or_a,
                             const std::function<double(double)>& b,
                             const BoundaryValues& side_top, const FdOptions& opt) {
  FvSystem sys = assemble(grid, sigma, dirichlet_bottom, trace_or_a, b, side_top);
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                           Eigen::DiagonalPreconditioner<double>>
      cg;
  cg.setTolerance(opt.cg_tol);
  cg.setMaxIterations(opt.cg_max_iter);
  cg.compute(sys.A);
  Eigen::VectorXd sol = cg.solve(sys.rhs);
  const double scale = sys.rhs.norm();
  const double relres =
      scale > 0.0 ? (sys.A * sol - sys.rhs).norm() / scale : (sys.A * sol).norm();
  if (cg.info() != Eigen::Success || !(relres <= 10.0 * opt.cg_tol) || !sol.allFinite()) {
    // mirrors the smallness condition on a^+: report its L^{n/2s} norm
    double anorm = 0.0;
    if (!dirichlet_bottom) {
      const double p = grid.n / (2.0 * sigma);
      const auto& xs = grid.x_nodes;
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double ap = std::max(trace_or_a(0.5 * (xs[i] + xs[i + 1])), 0.0);
        const double meas = grid.kind == HalfSpaceKind::Radial
                                ? sphere_area(grid.n - 1) * radial_mass(xs[i], xs[i + 1], grid.n)
                                : xs[i + 1] - xs[i];
        anorm += std::pow(ap, p) * meas;
      }
      anorm = std::pow(anorm, 1.0 / p);
    }
    throw SolverFailure("fd_solve: conjugate gradients failed (indefinite operator or iteration "
                        "cap); ||a+||_{L^{n/2s}} = " +
                            std::to_string(anorm),
                        {relres}, anorm);
  }

  ExtensionField U;
  U.grid = grid;
  U.sigma = sigma;
  const std::size_t nx = grid.x_nodes.size();
  const std::size_t nt = grid.t_nodes.size() + 1;
  U.values.assign(nx * (nt - 1), 0.0);
  U.trace.assign(nx, 0.0);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const long k = sys.unknown_of_node[i * nt + j];
      const double v = k >= 0 ? sol[k] : sys.fixed[i * nt + j];
      if (j == 0)
        U.trace[i] = v;
      else
        U.values[U.grid.index(i, j - 1)] = v;
    }
  }
  return U;
}

}  // namespace

ExtensionField fd_solve_dirichlet(const HalfSpaceGrid& grid, double sigma,
                                  const std::function<double(double)>& trace,
                                  const BoundaryValues& side_top, const FdOptions& opt) {
  return fd_solve_impl(grid, sigma, true, trace, [](double) { return 0.0; }, side_top, opt);
}

ExtensionField fd_solve_neumann(const HalfSpaceGrid& grid, double sigma,
                                const std::function<double(double)>& a,
                                const std::function<double(double)>& b,
                                const BoundaryValues& side_top, const FdOptions& opt) {
  return fd_solve_impl(grid, sigma, false, a, b, side_top, opt);
}

}  // namespace fns
