#include "fns/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "fns/errors.hpp"

namespace fns {

namespace {

double sqnorm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

// Canonical chart: F(x) = (2x, |x|^2 - 1)/(1 + |x|^2), F(0) = -e_{n+1}.
std::vector<double> chart_to_sphere(const std::vector<double>& x) {
  const double s = sqnorm(x);
  std::vector<double> xi(x.size() + 1);
  for (std::size_t i = 0; i < x.size(); ++i) xi[i] = 2.0 * x[i] / (1.0 + s);
  xi[x.size()] = (s - 1.0) / (s + 1.0);
  return xi;
}

std::vector<double> sphere_to_chart(const std::vector<double>& xi) {
  const std::size_t n = xi.size() - 1;
  const double denom = 1.0 - xi[n];
  if (denom <= 0.0) throw SingularityError("chart evaluation at the north pole");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = xi[i] / denom;
  return x;
}

double log_jf(double xsq, int n) { return n * (std::log(2.0) - std::log1p(xsq)); }

}  // namespace

BubbleParams BubbleParams::sphere(int n, double sigma, std::vector<double> center, double lambda,
                                  double amplitude) {
  if (!(lambda > 0.0) || !(amplitude > 0.0))
    throw std::domain_error("bubble parameters must be positive");
  BubbleParams p;
  p.space = Space::Sphere;
  p.n = n;
  p.sigma = sigma;
  p.center = std::move(center);
  const double nrm = std::sqrt(sqnorm(p.center));
  if (std::abs(nrm - 1.0) > 1e-12) throw std::domain_error("sphere bubble center must be unit");
  p.lambda = lambda;
  p.amplitude = amplitude;
  return p;
}

BubbleParams BubbleParams::flat(int n, double sigma, std::vector<double> center, double lambda,
                                double amplitude) {
  if (!(lambda > 0.0) || !(amplitude > 0.0))
    throw std::domain_error("bubble parameters must be positive");
  BubbleParams p;
  p.space = Space::Flat;
  p.n = n;
  p.sigma = sigma;
  p.center = std::move(center);
  p.lambda = lambda;
  p.amplitude = amplitude;
  return p;
}

std::vector<double> south_pole(int n) {
  std::vector<double> p(n + 1, 0.0);
  p[n] = -1.0;
  return p;
}

std::vector<double> north_pole(int n) {
  std::vector<double> p(n + 1, 0.0);
  p[n] = 1.0;
  return p;
}

double sphere_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

double sphere_bubble(const BubbleParams& p, const std::vector<double>& xi) {
  if (p.space != Space::Sphere) throw ShapeError("sphere_bubble needs sphere parameters");
  const double d = sphere_dist(xi, p.center);
  const double denom = 2.0 + (p.lambda * p.lambda - 1.0) * (1.0 - std::cos(d));
  return p.amplitude * std::pow(2.0 * p.lambda / denom, 0.5 * (p.n - 2.0 * p.sigma));
}

double flat_bubble(const BubbleParams& p, const std::vector<double>& x) {
  if (p.space != Space::Flat) throw ShapeError("flat_bubble needs flat parameters");
  double r2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - p.center[i];
    r2 += d * d;
  }
  return p.amplitude *
         std::pow(p.lambda / (1.0 + p.lambda * p.lambda * r2), 0.5 * (p.n - 2.0 * p.sigma));
}

SphereFunction sample_sphere_bubble(const BubbleParams& p, std::shared_ptr<const SphereGrid> grid) {
  SphereFunction f;
  f.grid = grid;
  f.values.resize(grid->node_count());
  for (std::size_t i = 0; i < f.values.size(); ++i)
    f.values[i] = sphere_bubble(p, grid->node_point(i));
  return f;
}

MobiusMap MobiusMap::identity(int n) {
  MobiusMap m;
  m.n = n;
  return m;
}

MobiusMap MobiusMap::dilation(int n, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("dilation factor must be positive");
  MobiusMap m;
  m.n = n;
  m.chain.push_back(ChartDilate{lambda});
  return m;
}

MobiusMap MobiusMap::translation(int n, std::vector<double> shift) {
  MobiusMap m;
  m.n = n;
  m.chain.push_back(ChartTranslate{std::move(shift)});
  return m;
}

MobiusMap MobiusMap::inversion(int n) {
  MobiusMap m;
  m.n = n;
  m.chain.push_back(ChartInvert{});
  return m;
}

MobiusMap MobiusMap::rotation(int n, std::vector<double> matrix) {
  if (matrix.size() != static_cast<std::size_t>((n + 1) * (n + 1)))
    throw ShapeError("rotation matrix must be (n+1)x(n+1)");
  MobiusMap m;
  m.n = n;
  m.chain.push_back(Rotation{std::move(matrix)});
  return m;
}

MobiusMap MobiusMap::after(const MobiusMap& first) const {
  MobiusMap m;
  m.n = n;
  m.chain = first.chain;
  m.chain.insert(m.chain.end(), chain.begin(), chain.end());
  return m;
}

std::vector<double> MobiusMap::apply(const std::vector<double>& xi) const {
  std::vector<double> cur = xi;
  for (const auto& prim : chain) {
    if (std::holds_alternative<Rotation>(prim)) {
      const auto& rot = std::get<Rotation>(prim).matrix;
      std::vector<double> out(n + 1, 0.0);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) out[i] += rot[i * (n + 1) + j] * cur[j];
      cur = out;
    } else if (std::holds_alternative<ChartDilate>(prim)) {
      std::vector<double> x = sphere_to_chart(cur);
      for (double& v : x) v *= std::get<ChartDilate>(prim).lambda;
      cur = chart_to_sphere(x);
    } else if (std::holds_alternative<ChartTranslate>(prim)) {
      std::vector<double> x = sphere_to_chart(cur);
      const auto& b = std::get<ChartTranslate>(prim).shift;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += b[i];
      cur = chart_to_sphere(x);
    } else {
      std::vector<double> x = sphere_to_chart(cur);
      const double s = sqnorm(x);
      if (s == 0.0) throw SingularityError("inversion applied at the chart origin");
      for (double& v : x) v /= s;
      cur = chart_to_sphere(x);
    }
  }
  return cur;
}

double MobiusMap::log_det_jacobian(const std::vector<double>& xi) const {
  std::vector<double> cur = xi;
  double logdet = 0.0;
  for (const auto& prim : chain) {
    if (std::holds_alternative<Rotation>(prim)) {
      const auto& rot = std::get<Rotation>(prim).matrix;
      std::vector<double> out(n + 1, 0.0);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) out[i] += rot[i * (n + 1) + j] * cur[j];
      cur = out;
    } else {
      std::vector<double> x = sphere_to_chart(cur);
      const double s_in = sqnorm(x);
      if (std::holds_alternative<ChartDilate>(prim)) {
        const double lambda = std::get<ChartDilate>(prim).lambda;
        for (double& v : x) v *= lambda;
        logdet += n * std::log(lambda);
      } else if (std::holds_alternative<ChartTranslate>(prim)) {
        const auto& b = std::get<ChartTranslate>(prim).shift;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += b[i];
      } else {
        if (s_in == 0.0) throw SingularityError("inversion applied at the chart origin");
        for (double& v : x) v /= s_in;
        logdet += -n * std::log(s_in);  // |det d(x/|x|^2)| = |x|^{-2n}
      }
      const double s_out = sqnorm(x);
      logdet += log_jf(s_out, n) - log_jf(s_in, n);
      cur = chart_to_sphere(x);
    }
  }
  return logdet;
}

SphereFunction conformal_normalize(const SphereEvaluator& v, std::shared_ptr<const SphereGrid> grid,
                                   const MobiusMap& phi, double sigma) {
  SphereFunction out;
  out.grid = grid;
  out.values.resize(grid->node_count());
  const double e = (grid->n - 2.0 * sigma) / (2.0 * grid->n);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const std::vector<double> xi = grid->node_point(i);
    out.values[i] = v(phi.apply(xi)) * std::exp(e * phi.log_det_jacobian(xi));
  }
  return out;
}

SphereFunction conformal_normalize(const SphereFunction& v, const MobiusMap& phi, double sigma) {
  const SpectralCoeffs c = analyze(v, v.grid->max_degree());
  return conformal_normalize([&c](const std::vector<double>& xi) { return synth_at_point(c, xi); },
                             v.grid, phi, sigma);
}

HalfSpaceField kelvin(HalfSpaceField U, std::vector<double> xbar, double lambda, int n,
                      double sigma) {
  if (!(lambda > 0.0)) throw std::domain_error("kelvin: lambda must be positive");
  return [U = std::move(U), xbar = std::move(xbar), lambda, n, sigma](
             const std::vector<double>& X) -> double {
    double r2 = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
      const double c = i < xbar.size() ? xbar[i] : 0.0;
      const double d = X[i] - c;
      r2 += d * d;
    }
    if (r2 == 0.0) throw SingularityError("kelvin: evaluation at the inversion center");
    std::vector<double> Y(X.size());
    const double scale = lambda * lambda / r2;
    for (std::size_t i = 0; i < X.size(); ++i) {
      const double c = i < xbar.size() ? xbar[i] : 0.0;
      Y[i] = c + scale * (X[i] - c);
    }
    return std::pow(lambda / std::sqrt(r2), n - 2.0 * sigma) * U(Y);
  };
}

}  // namespace fns
