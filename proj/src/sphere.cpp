#include "fns/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fns/constants.hpp"
#include "fns/errors.hpp"

namespace fns {

namespace {

// Orthonormal associated Legendre values P^m_k(cos theta) for all k <= kmax
// at fixed order m, normalized so that int_0^pi P^2 sin(theta) d(theta) = 1.
// Stable forward recurrence in k after seeding the diagonal.
void assoc_legendre_row(int kmax, int m, double ct, double st, std::vector<double>& out) {
  out.assign(kmax + 1, 0.0);
  double pmm = std::sqrt(0.5);
  for (int j = 1; j <= m; ++j) pmm *= std::sqrt((2.0 * j + 1.0) / (2.0 * j)) * st;
  if (m <= kmax) out[m] = pmm;
  if (m + 1 <= kmax) out[m + 1] = std::sqrt(2.0 * m + 3.0) * ct * pmm;
  for (int k = m + 2; k <= kmax; ++k) {
    const double a = std::sqrt((4.0 * k * k - 1.0) / (static_cast<double>(k) * k - static_cast<double>(m) * m));
    const double b = std::sqrt((static_cast<double>(k - 1) * (k - 1) - static_cast<double>(m) * m) /
                               (4.0 * static_cast<double>(k - 1) * (k - 1) - 1.0));
    out[k] = a * (ct * out[k - 1] - b * out[k - 2]);
  }
}

void check_kind(const SpectralCoeffs& c, const SphereGrid& g) {
  if (c.kind != g.kind || c.n != g.n)
    throw ShapeError("spectral coefficients and grid have mismatched kind or dimension");
}

double gegenbauer_nu(int n) { return 0.5 * (n - 1); }

}  // namespace

std::shared_ptr<const SphereGrid> SphereGrid::zonal(int n, int n_colat) {
  if (n < 2) throw std::domain_error("SphereGrid::zonal: n must be at least 2");
  if (n_colat < 1) throw std::domain_error("SphereGrid::zonal: need at least one node");
  auto g = std::make_shared<SphereGrid>();
  g->n = n;
  g->kind = GridKind::Zonal;
  const double e = 0.5 * (n - 2);
  Rule1D rule = gauss_jacobi(n_colat, e, e);
  const double ring = sphere_area(n - 1);
  g->colat_nodes.resize(n_colat);
  g->colat_weights.resize(n_colat);
  for (int i = 0; i < n_colat; ++i) {
    // x = cos(theta) descending <-> theta ascending
    g->colat_nodes[i] = std::acos(rule.nodes[n_colat - 1 - i]);
    g->colat_weights[i] = ring * rule.weights[n_colat - 1 - i];
  }
  return g;
}

std::shared_ptr<const SphereGrid> SphereGrid::full2(int n_colat, int lon_count) {
  if (n_colat < 1 || lon_count < 1) throw std::domain_error("SphereGrid::full2: empty grid");
  auto g = std::make_shared<SphereGrid>();
  g->n = 2;
  g->kind = GridKind::Full2Sphere;
  g->lon_count = lon_count;
  Rule1D rule = gauss_legendre(n_colat);
  g->colat_nodes.resize(n_colat);
  g->colat_weights.resize(n_colat);
  for (int i = 0; i < n_colat; ++i) {
    g->colat_nodes[i] = std::acos(rule.nodes[n_colat - 1 - i]);
    g->colat_weights[i] = rule.weights[n_colat - 1 - i];
  }
  return g;
}

std::shared_ptr<const SphereGrid> SphereGrid::for_kmax(int n, GridKind kind, int kmax) {
  if (kind == GridKind::Zonal) return zonal(n, kmax + 2);
  if (n != 2) throw std::domain_error("full transform grids exist only for n = 2");
  return full2(kmax + 2, 2 * kmax + 4);
}

std::size_t SphereGrid::node_count() const {
  return kind == GridKind::Zonal ? colat_nodes.size() : colat_nodes.size() * lon_count;
}

int SphereGrid::max_degree() const {
  const int by_colat = static_cast<int>(colat_nodes.size()) - 1;
  if (kind == GridKind::Zonal) return by_colat;
  return std::min(by_colat, (lon_count - 1) / 2);
}

double SphereGrid::node_weight(std::size_t flat) const {
  if (kind == GridKind::Zonal) return colat_weights[flat];
  const std::size_t i = flat / lon_count;
  return colat_weights[i] * (2.0 * M_PI / lon_count);
}

std::vector<double> SphereGrid::node_point(std::size_t flat) const {
  double theta = 0.0, phi = 0.0;
  node_angles(*this, flat, theta, phi);
  std::vector<double> p(n + 1, 0.0);
  const double st = std::sin(theta);
  if (kind == GridKind::Zonal) {
    p[0] = st;
  } else {
    p[0] = st * std::cos(phi);
    p[1] = st * std::sin(phi);
  }
  p[n] = std::cos(theta);
  return p;
}

double SphereGrid::surface_measure() const { return sphere_area(n); }

void node_angles(const SphereGrid& grid, std::size_t flat, double& theta, double& phi) {
  if (grid.kind == GridKind::Zonal) {
    theta = grid.colat_nodes[flat];
    phi = 0.0;
  } else {
    theta = grid.colat_nodes[flat / grid.lon_count];
    phi = 2.0 * M_PI * (flat % grid.lon_count) / grid.lon_count;
  }
}

double SphereFunction::integral() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += grid->node_weight(i) * values[i];
  return s;
}

double SphereFunction::integral_power(double p) const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += grid->node_weight(i) * std::pow(values[i], p);
  return s;
}

double SphereFunction::mean() const { return integral() / grid->surface_measure(); }

double SphereFunction::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double SphereFunction::max() const {
  double m = values.empty() ? 0.0 : values[0];
  for (double v : values) m = std::max(m, v);
  return m;
}

double SphereFunction::min() const {
  double m = values.empty() ? 0.0 : values[0];
  for (double v : values) m = std::min(m, v);
  return m;
}

std::vector<double> SpectralCoeffs::degree_energies() const {
  std::vector<double> e(kmax + 1, 0.0);
  if (kind == GridKind::Zonal) {
    for (int k = 0; k <= kmax; ++k) e[k] = coeffs[k] * coeffs[k];
  } else {
    for (int k = 0; k <= kmax; ++k)
      for (int m = -k; m <= k; ++m) e[k] += coeffs[index(k, m)] * coeffs[index(k, m)];
  }
  return e;
}

double gegenbauer_eval(int k, double nu, double x) {
  if (!(nu > 0.0)) throw std::domain_error("gegenbauer_eval: nu must be positive");
  if (k == 0) return 1.0;
  double cm2 = 1.0;
  double cm1 = 2.0 * nu * x;
  if (k == 1) return cm1;
  double c = 0.0;
  for (int j = 2; j <= k; ++j) {
    c = (2.0 * x * (j + nu - 1.0) * cm1 - (j + 2.0 * nu - 2.0) * cm2) / j;
    cm2 = cm1;
    cm1 = c;
  }
  return c;
}

double zonal_basis_norm(int n, int k) {
  const double nu = gegenbauer_nu(n);
  // int_{-1}^1 C_k^nu(x)^2 (1-x^2)^{nu-1/2} dx, in log space
  const double log_h = std::log(M_PI) + (1.0 - 2.0 * nu) * std::log(2.0) + log_gamma(k + 2.0 * nu) -
                       std::log(k + nu) - 2.0 * log_gamma(nu) - log_gamma(k + 1.0);
  return std::sqrt(sphere_area(n - 1) * std::exp(log_h));
}

SpectralCoeffs analyze(const SphereFunction& f, int kmax) {
  const SphereGrid& g = *f.grid;
  if (kmax > g.max_degree())
    throw ResolutionError("analyze: kmax " + std::to_string(kmax) + " exceeds grid resolution " +
                          std::to_string(g.max_degree()));
  SpectralCoeffs c;
  c.n = g.n;
  c.kind = g.kind;
  c.kmax = kmax;
  if (g.kind == GridKind::Zonal) {
    c.coeffs.assign(kmax + 1, 0.0);
    const double nu = gegenbauer_nu(g.n);
    std::vector<double> norms(kmax + 1);
    for (int k = 0; k <= kmax; ++k) norms[k] = zonal_basis_norm(g.n, k);
    for (std::size_t i = 0; i < g.colat_nodes.size(); ++i) {
      const double x = std::cos(g.colat_nodes[i]);
      const double wf = g.colat_weights[i] * f.values[i];
      double cm2 = 1.0, cm1 = 2.0 * nu * x;
      for (int k = 0; k <= kmax; ++k) {
        double ck;
        if (k == 0)
          ck = 1.0;
        else if (k == 1)
          ck = cm1;
        else {
          ck = (2.0 * x * (k + nu - 1.0) * cm1 - (k + 2.0 * nu - 2.0) * cm2) / k;
          cm2 = cm1;
          cm1 = ck;
        }
        c.coeffs[k] += wf * ck / norms[k];
      }
    }
  } else {
    c.coeffs.assign(static_cast<std::size_t>(kmax + 1) * (kmax + 1), 0.0);
    const int L = g.lon_count;
    const std::size_t nth = g.colat_nodes.size();
    // Longitude sums per colatitude ring and order m.
    std::vector<double> fc((kmax + 1) * nth, 0.0), fs((kmax + 1) * nth, 0.0);
    for (std::size_t i = 0; i < nth; ++i) {
      for (int j = 0; j < L; ++j) {
        const double v = f.values[i * L + j];
        const double phi = 2.0 * M_PI * j / L;
        for (int m = 0; m <= kmax; ++m) {
          fc[m * nth + i] += v * std::cos(m * phi);
          fs[m * nth + i] += v * std::sin(m * phi);
        }
      }
    }
    const double dphi = 2.0 * M_PI / L;
    std::vector<double> row;
    for (std::size_t i = 0; i < nth; ++i) {
      const double ct = std::cos(g.colat_nodes[i]);
      const double st = std::sin(g.colat_nodes[i]);
      for (int m = 0; m <= kmax; ++m) {
        assoc_legendre_row(kmax, m, ct, st, row);
        for (int k = m; k <= kmax; ++k) {
          const double base = g.colat_weights[i] * dphi * row[k];
          if (m == 0) {
            c.coeffs[c.index(k, 0)] += base * fc[0 * nth + i] / std::sqrt(2.0 * M_PI);
          } else {
            c.coeffs[c.index(k, m)] += base * fc[m * nth + i] / std::sqrt(M_PI);
            c.coeffs[c.index(k, -m)] += base * fs[m * nth + i] / std::sqrt(M_PI);
          }
        }
      }
    }
  }
  return c;
}

SphereFunction synthesize(const SpectralCoeffs& c, std::shared_ptr<const SphereGrid> grid) {
  check_kind(c, *grid);
  SphereFunction f;
  f.grid = grid;
  const SphereGrid& g = *grid;
  if (g.kind == GridKind::Zonal) {
    f.values.assign(g.colat_nodes.size(), 0.0);
    const double nu = gegenbauer_nu(g.n);
    std::vector<double> norms(c.kmax + 1);
    for (int k = 0; k <= c.kmax; ++k) norms[k] = zonal_basis_norm(g.n, k);
    for (std::size_t i = 0; i < g.colat_nodes.size(); ++i) {
      const double x = std::cos(g.colat_nodes[i]);
      double cm2 = 1.0, cm1 = 2.0 * nu * x;
      double acc = 0.0;
      for (int k = 0; k <= c.kmax; ++k) {
        double ck;
        if (k == 0)
          ck = 1.0;
        else if (k == 1)
          ck = cm1;
        else {
          ck = (2.0 * x * (k + nu - 1.0) * cm1 - (k + 2.0 * nu - 2.0) * cm2) / k;
          cm2 = cm1;
          cm1 = ck;
        }
        acc += c.coeffs[k] * ck / norms[k];
      }
      f.values[i] = acc;
    }
  } else {
    const int L = g.lon_count;
    const std::size_t nth = g.colat_nodes.size();
    f.values.assign(nth * L, 0.0);
    std::vector<double> row;
    // Accumulate ring-wise Fourier coefficients, then expand in longitude.
    std::vector<double> ac(c.kmax + 1), as(c.kmax + 1);
    for (std::size_t i = 0; i < nth; ++i) {
      const double ct = std::cos(g.colat_nodes[i]);
      const double st = std::sin(g.colat_nodes[i]);
      std::fill(ac.begin(), ac.end(), 0.0);
      std::fill(as.begin(), as.end(), 0.0);
      for (int m = 0; m <= c.kmax; ++m) {
        assoc_legendre_row(c.kmax, m, ct, st, row);
        for (int k = m; k <= c.kmax; ++k) {
          if (m == 0) {
            ac[0] += c.coeffs[c.index(k, 0)] * row[k] / std::sqrt(2.0 * M_PI);
          } else {
            ac[m] += c.coeffs[c.index(k, m)] * row[k] / std::sqrt(M_PI);
            as[m] += c.coeffs[c.index(k, -m)] * row[k] / std::sqrt(M_PI);
          }
        }
      }
      for (int j = 0; j < L; ++j) {
        const double phi = 2.0 * M_PI * j / L;
        double acc = ac[0];
        for (int m = 1; m <= c.kmax; ++m)
          acc += ac[m] * std::cos(m * phi) + as[m] * std::sin(m * phi);
        f.values[i * L + j] = acc;
      }
    }
  }
  return f;
}

BandEvaluator::BandEvaluator(SpectralCoeffs coeffs) : c_(std::move(coeffs)) {
  if (c_.kind == GridKind::Zonal) {
    zonal_scale_.resize(c_.kmax + 1);
    for (int k = 0; k <= c_.kmax; ++k) zonal_scale_[k] = c_.coeffs[k] / zonal_basis_norm(c_.n, k);
  }
}

double BandEvaluator::at(double theta, double phi) const {
  const double x = std::cos(theta);
  if (c_.kind == GridKind::Zonal) {
    const double nu = gegenbauer_nu(c_.n);
    double acc = zonal_scale_[0];
    double cm2 = 1.0, cm1 = 2.0 * nu * x;
    for (int k = 1; k <= c_.kmax; ++k) {
      double ck;
      if (k == 1)
        ck = cm1;
      else {
        ck = (2.0 * x * (k + nu - 1.0) * cm1 - (k + 2.0 * nu - 2.0) * cm2) / k;
        cm2 = cm1;
        cm1 = ck;
      }
      acc += zonal_scale_[k] * ck;
    }
    return acc;
  }
  const double st = std::sin(theta);
  double acc = 0.0;
  for (int m = 0; m <= c_.kmax; ++m) {
    assoc_legendre_row(c_.kmax, m, x, st, row_);
    double ring = 0.0;
    for (int k = m; k <= c_.kmax; ++k) {
      if (m == 0)
        ring += c_.coeffs[c_.index(k, 0)] * row_[k] / std::sqrt(2.0 * M_PI);
      else
        ring += (c_.coeffs[c_.index(k, m)] * std::cos(m * phi) +
                 c_.coeffs[c_.index(k, -m)] * std::sin(m * phi)) *
                row_[k] / std::sqrt(M_PI);
    }
    acc += ring;
  }
  return acc;
}

double BandEvaluator::at_point(const std::vector<double>& xi) const {
  const int n = c_.n;
  const double ct = std::clamp(xi[n], -1.0, 1.0);
  double phi = 0.0;
  if (c_.kind == GridKind::Full2Sphere) phi = std::atan2(xi[1], xi[0]);
  return at(std::acos(ct), phi);
}

double synth_at(const SpectralCoeffs& c, double theta, double phi) {
  const double x = std::cos(theta);
  if (c.kind == GridKind::Zonal) {
    const double nu = gegenbauer_nu(c.n);
    double acc = 0.0;
    double cm2 = 1.0, cm1 = 2.0 * nu * x;
    for (int k = 0; k <= c.kmax; ++k) {
      double ck;
      if (k == 0)
        ck = 1.0;
      else if (k == 1)
        ck = cm1;
      else {
        ck = (2.0 * x * (k + nu - 1.0) * cm1 - (k + 2.0 * nu - 2.0) * cm2) / k;
        cm2 = cm1;
        cm1 = ck;
      }
      acc += c.coeffs[k] * ck / zonal_basis_norm(c.n, k);
    }
    return acc;
  }
  const double st = std::sin(theta);
  std::vector<double> row;
  double acc = 0.0;
  for (int m = 0; m <= c.kmax; ++m) {
    assoc_legendre_row(c.kmax, m, x, st, row);
    double ring = 0.0;
    for (int k = m; k <= c.kmax; ++k) {
      if (m == 0)
        ring += c.coeffs[c.index(k, 0)] * row[k] / std::sqrt(2.0 * M_PI);
      else
        ring += (c.coeffs[c.index(k, m)] * std::cos(m * phi) +
                 c.coeffs[c.index(k, -m)] * std::sin(m * phi)) *
                row[k] / std::sqrt(M_PI);
    }
    acc += ring;
  }
  return acc;
}

double synth_at_point(const SpectralCoeffs& c, const std::vector<double>& xi) {
  const int n = c.n;
  double ct = xi[n];
  ct = std::clamp(ct, -1.0, 1.0);
  const double theta = std::acos(ct);
  double phi = 0.0;
  if (c.kind == GridKind::Full2Sphere) phi = std::atan2(xi[1], xi[0]);
  return synth_at(c, theta, phi);
}

double synth_dtheta(const SpectralCoeffs& c, double theta, double phi) {
  const double x = std::cos(theta);
  const double st = std::sin(theta);
  if (c.kind == GridKind::Zonal) {
    const double nu = gegenbauer_nu(c.n);
    double acc = 0.0;
    for (int k = 1; k <= c.kmax; ++k) {
      // d/dtheta C_k^nu(cos theta) = -sin(theta) * 2 nu C_{k-1}^{nu+1}(cos theta)
      acc += c.coeffs[k] * (-st) * 2.0 * nu * gegenbauer_eval(k - 1, nu + 1.0, x) /
             zonal_basis_norm(c.n, k);
    }
    return acc;
  }
  std::vector<double> row, rowm1;
  double acc = 0.0;
  for (int m = 0; m <= c.kmax; ++m) {
    assoc_legendre_row(c.kmax, m, x, st, row);
    for (int k = std::max(m, 1); k <= c.kmax; ++k) {
      const double corr =
          (k - 1 >= m)
              ? std::sqrt((static_cast<double>(k) * k - static_cast<double>(m) * m) *
                          (2.0 * k + 1.0) / (2.0 * k - 1.0)) *
                    row[k - 1]
              : 0.0;
      const double dp = (k * x * row[k] - corr) / st;
      if (m == 0)
        acc += c.coeffs[c.index(k, 0)] * dp / std::sqrt(2.0 * M_PI);
      else
        acc += (c.coeffs[c.index(k, m)] * std::cos(m * phi) +
                c.coeffs[c.index(k, -m)] * std::sin(m * phi)) *
               dp / std::sqrt(M_PI);
    }
  }
  return acc;
}

double synth_dphi(const SpectralCoeffs& c, double theta, double phi) {
  if (c.kind != GridKind::Full2Sphere) return 0.0;
  const double x = std::cos(theta);
  const double st = std::sin(theta);
  std::vector<double> row;
  double acc = 0.0;
  for (int m = 1; m <= c.kmax; ++m) {
    assoc_legendre_row(c.kmax, m, x, st, row);
    for (int k = m; k <= c.kmax; ++k) {
      acc += (-c.coeffs[c.index(k, m)] * m * std::sin(m * phi) +
              c.coeffs[c.index(k, -m)] * m * std::cos(m * phi)) *
             row[k] / std::sqrt(M_PI);
    }
  }
  return acc;
}

std::vector<double> tangential_gradient(const SpectralCoeffs& c, double theta, double phi) {
  const int n = c.n;
  std::vector<double> g(n + 1, 0.0);
  const double st = std::sin(theta), ct = std::cos(theta);
  const double ft = synth_dtheta(c, theta, phi);
  if (c.kind == GridKind::Zonal) {
    // theta-hat on the phi = 0 meridian
    g[0] = ct * ft;
    g[n] = -st * ft;
    return g;
  }
  const double fp = synth_dphi(c, theta, phi) / st;
  const double cp = std::cos(phi), sp = std::sin(phi);
  g[0] = ct * cp * ft - sp * fp;
  g[1] = ct * sp * ft + cp * fp;
  g[2] = -st * ft;
  return g;
}

}  // namespace fns
