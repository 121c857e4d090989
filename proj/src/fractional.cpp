#include "fns/fractional.hpp"

#include <cmath>
#include <stdexcept>

#include "fns/errors.hpp"
#include "fns/quadrature.hpp"

namespace fns {

namespace {

double sqnorm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

// Deterministic orthonormal tangent frame at a unit vector xi in R^{n+1}.
std::vector<std::vector<double>> tangent_frame(const std::vector<double>& xi) {
  const std::size_t dim = xi.size();
  std::vector<std::vector<double>> frame;
  for (std::size_t axis = 0; axis < dim && frame.size() < dim - 1; ++axis) {
    std::vector<double> v(dim, 0.0);
    v[axis] = 1.0;
    double d = 0.0;
    for (std::size_t i = 0; i < dim; ++i) d += v[i] * xi[i];
    for (std::size_t i = 0; i < dim; ++i) v[i] -= d * xi[i];
    for (const auto& e : frame) {
      double p = 0.0;
      for (std::size_t i = 0; i < dim; ++i) p += v[i] * e[i];
      for (std::size_t i = 0; i < dim; ++i) v[i] -= p * e[i];
    }
    const double nrm = std::sqrt(sqnorm(v));
    if (nrm < 1e-8) continue;
    for (double& x : v) x /= nrm;
    frame.push_back(std::move(v));
  }
  return frame;
}

// Householder reflection mapping -e_{n+1} to the given pole (an involution).
void reflect_from_canonical(const std::vector<double>& pole, std::vector<double>& v) {
  const std::size_t dim = pole.size();
  std::vector<double> u(dim);
  double uu = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    u[i] = pole[i] + (i + 1 == dim ? 1.0 : 0.0);
    uu += u[i] * u[i];
  }
  if (uu < 1e-24) return;  // pole already at -e_{n+1}
  double uv = 0.0;
  for (std::size_t i = 0; i < dim; ++i) uv += u[i] * v[i];
  const double c = 2.0 * uv / uu;
  for (std::size_t i = 0; i < dim; ++i) v[i] -= c * u[i];
}

// Kernel normalization of the flat fractional Laplacian; coincides with
// c_{n,-sigma} and is needed for n = 1 as well.
double kernel_constant(int n, double sigma) {
  return std::pow(2.0, 2.0 * sigma) * sigma *
         std::exp(log_gamma(0.5 * (n + 2.0 * sigma)) - 0.5 * n * std::log(M_PI) -
                  log_gamma(1.0 - sigma));
}

}  // namespace

StereoChart StereoChart::canonical(int n) {
  StereoChart c;
  c.n = n;
  c.south_pole.assign(n + 1, 0.0);
  c.south_pole[n] = -1.0;
  return c;
}

StereoChart StereoChart::at(std::vector<double> south_pole) {
  StereoChart c;
  c.n = static_cast<int>(south_pole.size()) - 1;
  const double nrm = std::sqrt(sqnorm(south_pole));
  if (std::abs(nrm - 1.0) > 1e-12) throw std::domain_error("chart pole must be a unit vector");
  c.south_pole = std::move(south_pole);
  return c;
}

std::vector<double> StereoChart::to_sphere(const std::vector<double>& x) const {
  const double s = sqnorm(x);
  std::vector<double> xi(n + 1);
  for (int i = 0; i < n; ++i) xi[i] = 2.0 * x[i] / (1.0 + s);
  xi[n] = (s - 1.0) / (s + 1.0);
  reflect_from_canonical(south_pole, xi);
  return xi;
}

std::vector<double> StereoChart::to_plane(const std::vector<double>& xi) const {
  std::vector<double> w = xi;
  reflect_from_canonical(south_pole, w);
  const double denom = 1.0 - w[n];
  if (denom <= 1e-300) throw SingularityError("stereographic chart evaluated at its north pole");
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = w[i] / denom;
  return x;
}

double StereoChart::jacobian(const std::vector<double>& x) const {
  return std::pow(2.0 / (1.0 + sqnorm(x)), n);
}

SpectralCoeffs apply_psigma_spectral(const SpectralCoeffs& c, double sigma) {
  SpectralCoeffs out = c;
  if (c.kind == GridKind::Zonal) {
    for (int k = 0; k <= c.kmax; ++k) out.coeffs[k] *= multiplier(k, c.n, sigma);
  } else {
    for (int k = 0; k <= c.kmax; ++k) {
      const double lk = multiplier(k, c.n, sigma);
      for (int m = -k; m <= k; ++m) out.coeffs[out.index(k, m)] *= lk;
    }
  }
  return out;
}

SphereFunction apply_psigma_spectral(const SphereFunction& v, double sigma, int kmax) {
  return synthesize(apply_psigma_spectral(analyze(v, kmax), sigma), v.grid);
}

double apply_psigma_integral(const BandEvaluator& v, double sigma, const std::vector<double>& xi,
                             const IntegralOptions& opt) {
  const SpectralCoeffs& c = v.coeffs();
  const int n = c.n;
  if (std::abs(std::sqrt(sqnorm(xi)) - 1.0) > 1e-12)
    throw std::domain_error("apply_psigma_integral: evaluation point must lie on the sphere");
  const ConformalConstants cc = make_constants(n, sigma);
  const double v_xi = v.at_point(xi);
  const double theta_xi = std::acos(std::clamp(xi[n], -1.0, 1.0));

  // Angular average of v(xi) - v(zeta) over the geodesic circle of radius r.
  Rule1D ang;
  std::vector<std::vector<double>> frame;
  if (c.kind == GridKind::Zonal) {
    ang = gauss_jacobi(opt.angular_nodes, 0.5 * (n - 3), 0.5 * (n - 3));
  } else {
    frame = tangent_frame(xi);
  }
  auto ang_diff = [&](double r) -> double {
    const double cr = std::cos(r), sr = std::sin(r);
    double acc = 0.0;
    if (c.kind == GridKind::Zonal) {
      // colatitude of zeta depends on one angle; the remaining S^{n-2}
      // directions contribute the Gegenbauer weight absorbed in `ang`
      for (std::size_t j = 0; j < ang.nodes.size(); ++j) {
        const double ct = std::clamp(
            cr * std::cos(theta_xi) + sr * std::sin(theta_xi) * ang.nodes[j], -1.0, 1.0);
        acc += ang.weights[j] * (v_xi - v.at(std::acos(ct)));
      }
      return sphere_area(n - 2) * acc;
    }
    std::vector<double> zeta(n + 1);
    const int M = opt.angular_nodes;
    for (int j = 0; j < M; ++j) {
      const double w = 2.0 * M_PI * j / M;
      for (int i = 0; i <= n; ++i)
        zeta[i] = cr * xi[i] + sr * (std::cos(w) * frame[0][i] + std::sin(w) * frame[1][i]);
      acc += v_xi - v.at_point(zeta);
    }
    return acc * (2.0 * M_PI / M);
  };

  // full radial integrand; chordal distance |xi - zeta| = 2 sin(r/2)
  auto radial = [&](double r) {
    return std::pow(std::sin(r), n - 1) * std::pow(2.0 * std::sin(0.5 * r), -(n + 2.0 * sigma)) *
           ang_diff(r);
  };

  // cap (0, delta): integrand ~ r^{1-2s}, carried by a Gauss-Jacobi weight
  const double delta = opt.cap_radius;
  const Rule1D cap = gauss_jacobi(opt.singular_nodes, 0.0, 1.0 - 2.0 * sigma);
  double integral = 0.0;
  const double cap_scale = std::pow(0.5 * delta, 2.0 - 2.0 * sigma);
  for (std::size_t i = 0; i < cap.nodes.size(); ++i) {
    const double r = 0.5 * delta * (1.0 + cap.nodes[i]);
    integral += cap.weights[i] * cap_scale * std::pow(r, 2.0 * sigma - 1.0) * radial(r);
  }
  // complement: smooth, geometric panels up to the antipode
  const std::vector<double> edges = geometric_edges(delta, M_PI, delta, M_PI / 8.0);
  const Rule1D outer = composite_legendre(edges, opt.radial_nodes);
  for (std::size_t i = 0; i < outer.nodes.size(); ++i)
    integral += outer.weights[i] * radial(outer.nodes[i]);

  return cc.c_n_sigma * v_xi + cc.c_n_neg_sigma * integral;
}

double apply_psigma_integral(const SphereFunction& v, double sigma, const std::vector<double>& xi,
                             const IntegralOptions& opt) {
  BandEvaluator ev(analyze(v, v.grid->max_degree()));
  return apply_psigma_integral(ev, sigma, xi, opt);
}

double stereo_push(const BandEvaluator& v, const StereoChart& chart, double sigma,
                   const std::vector<double>& x) {
  const int n = chart.n;
  return std::pow(2.0 / (1.0 + sqnorm(x)), 0.5 * (n - 2.0 * sigma)) *
         v.at_point(chart.to_sphere(x));
}

double stereo_push(const std::function<double(const std::vector<double>&)>& v,
                   const StereoChart& chart, double sigma, const std::vector<double>& x) {
  const int n = chart.n;
  return std::pow(2.0 / (1.0 + sqnorm(x)), 0.5 * (n - 2.0 * sigma)) * v(chart.to_sphere(x));
}

double stereo_pull(const std::function<double(const std::vector<double>&)>& u,
                   const StereoChart& chart, double sigma, const std::vector<double>& xi) {
  const std::vector<double> x = chart.to_plane(xi);
  const int n = chart.n;
  return std::pow(2.0 / (1.0 + sqnorm(x)), -0.5 * (n - 2.0 * sigma)) * u(x);
}

namespace {

// Integrates rho^{-1-2s} S(rho) over (0,R) with a Jacobi cap and dyadic
// panels, then adds the truncation tail from the power-decay model of g.
// S is the spherical second-difference integral at radius rho.
double frac_lap_assemble(const std::function<double(double)>& second_diff, int n, double sigma,
                         double g_x, double far_value, const FlatLaplacianOptions& opt) {
  const double C = kernel_constant(n, sigma);
  const double R = opt.truncation_radius;
  const double rho0 = opt.inner_radius;

  auto radial = [&](double rho) { return std::pow(rho, -1.0 - 2.0 * sigma) * second_diff(rho); };

  double integral = 0.0;
  const Rule1D cap = gauss_jacobi(opt.singular_nodes, 0.0, 1.0 - 2.0 * sigma);
  const double cap_scale = std::pow(0.5 * rho0, 2.0 - 2.0 * sigma);
  for (std::size_t i = 0; i < cap.nodes.size(); ++i) {
    const double rho = 0.5 * rho0 * (1.0 + cap.nodes[i]);
    integral += cap.weights[i] * cap_scale * std::pow(rho, 2.0 * sigma - 1.0) * radial(rho);
  }
  const std::vector<double> edges = geometric_edges(rho0, R, rho0, R);
  const Rule1D outer = composite_legendre(edges, opt.radial_nodes);
  for (std::size_t i = 0; i < outer.nodes.size(); ++i)
    integral += outer.weights[i] * radial(outer.nodes[i]);

  double value = -0.5 * C * integral;

  // truncation tail: the -2 g(x) part is exact; the g(x+z)+g(x-z) part uses
  // g ~ A |y|^{-d} calibrated at the truncation sphere
  const double area = sphere_area(n - 1);
  const double d = opt.tail_decay >= 0.0 ? opt.tail_decay : n - 2.0 * sigma;
  value += C * g_x * area * std::pow(R, -2.0 * sigma) / (2.0 * sigma);
  const double A = far_value * std::pow(R, d);
  value -= C * A * area * std::pow(R, -d - 2.0 * sigma) / (d + 2.0 * sigma);
  return value;
}

}  // namespace

double flat_fractional_laplacian_radial(const std::function<double(double)>& g, int n, double sigma,
                                        double radius, const FlatLaplacianOptions& opt) {
  const double gx = g(radius);
  Rule1D ang;
  if (n >= 2) ang = gauss_jacobi(opt.angular_nodes, 0.5 * (n - 3), 0.5 * (n - 3));
  auto second_diff = [&](double rho) {
    // S(rho) = int_{S^{n-1}} [g(x+rho w) + g(x-rho w) - 2 g(x)] dw
    if (n == 1) return 2.0 * (g(std::abs(radius + rho)) + g(std::abs(radius - rho)) - 2.0 * gx);
    // |x + rho w| over the sphere |w| = 1: the c = cos(angle) reduction
    // already covers both signs of z as c runs over (-1,1)
    double acc = 0.0;
    for (std::size_t j = 0; j < ang.nodes.size(); ++j) {
      const double c = ang.nodes[j];
      const double rr = std::sqrt(std::max(radius * radius + rho * rho + 2.0 * radius * rho * c, 0.0));
      acc += ang.weights[j] * (g(rr) - gx);
    }
    return 2.0 * sphere_area(n - 2) * acc;
  };
  const double far = g(opt.truncation_radius);
  FlatLaplacianOptions o = opt;
  if (o.tail_decay < 0.0) o.tail_decay = n - 2.0 * sigma;
  return frac_lap_assemble(second_diff, n, sigma, gx, far, o);
}

double flat_fractional_laplacian(const std::function<double(const std::vector<double>&)>& g, int n,
                                 double sigma, const std::vector<double>& x,
                                 const FlatLaplacianOptions& opt) {
  if (n > 2)
    throw std::domain_error("flat_fractional_laplacian: general fields supported for n <= 2 only");
  const double gx = g(x);
  auto second_diff = [&](double rho) {
    if (n == 1) {
      std::vector<double> p = x, m = x;
      p[0] += rho;
      m[0] -= rho;
      return 2.0 * (g(p) + g(m) - 2.0 * gx);
    }
    const int M = opt.angular_nodes;
    double acc = 0.0;
    std::vector<double> y(2);
    for (int j = 0; j < M; ++j) {
      const double w = 2.0 * M_PI * j / M;
      y[0] = x[0] + rho * std::cos(w);
      y[1] = x[1] + rho * std::sin(w);
      acc += g(y) - gx;
    }
    return 2.0 * acc * (2.0 * M_PI / M);
  };
  double far = 0.0;
  if (n == 1) {
    far = 0.5 * (g({opt.truncation_radius}) + g({-opt.truncation_radius}));
  } else {
    const int M = 16;
    std::vector<double> y(2);
    for (int j = 0; j < M; ++j) {
      const double w = 2.0 * M_PI * j / M;
      y[0] = opt.truncation_radius * std::cos(w);
      y[1] = opt.truncation_radius * std::sin(w);
      far += g(y) / M;
    }
  }
  FlatLaplacianOptions o = opt;
  if (o.tail_decay < 0.0) o.tail_decay = n - 2.0 * sigma;
  return frac_lap_assemble(second_diff, n, sigma, gx, far, o);
}

double verify_conjugation(const SphereFunction& v, double sigma,
                          const std::vector<std::vector<double>>& sample_points,
                          const FlatLaplacianOptions& opt) {
  const int n = v.grid->n;
  const SpectralCoeffs c = analyze(v, v.grid->max_degree());
  const BandEvaluator ev(c);
  const BandEvaluator pv(apply_psigma_spectral(c, sigma));
  const StereoChart chart = StereoChart::canonical(n);

  FlatLaplacianOptions o = opt;
  if (o.tail_decay < 0.0) o.tail_decay = n - 2.0 * sigma;

  double worst = 0.0;
  for (const auto& x : sample_points) {
    const double lhs = pv.at_point(chart.to_sphere(x));
    double lap;
    if (v.grid->kind == GridKind::Zonal) {
      // zonal fields push to radial flat fields
      auto g = [&](double r) {
        std::vector<double> y(n, 0.0);
        y[0] = r;
        return stereo_push(ev, chart, sigma, y);
      };
      lap = flat_fractional_laplacian_radial(g, n, sigma, std::sqrt(sqnorm(x)), o);
    } else {
      auto g = [&](const std::vector<double>& y) { return stereo_push(ev, chart, sigma, y); };
      lap = flat_fractional_laplacian(g, n, sigma, x, o);
    }
    const double rhs = std::pow(chart.jacobian(x), -(n + 2.0 * sigma) / (2.0 * n)) * lap;
    const double denom = std::max(std::abs(lhs), 1e-12);
    worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

}  // namespace fns
