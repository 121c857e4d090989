#include "fns/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fns {

namespace {

struct JacobiRecurrence {
  // Orthonormal three-term recurrence for the Jacobi weight
  // (1-x)^alpha (1+x)^beta on (-1,1):
  //   x p_k = a_{k+1} p_{k+1} + b_k p_k + a_k p_{k-1},
  // with p_0 = 1/sqrt(mu0).
  std::vector<double> a;  // a[k], k = 1..K (off-diagonal)
  std::vector<double> b;  // b[k], k = 0..K-1 (diagonal)
  double mu0;
};

JacobiRecurrence jacobi_recurrence(int k, double alpha, double beta) {
  if (alpha <= -1.0 || beta <= -1.0) throw std::domain_error("jacobi weight exponents must exceed -1");
  JacobiRecurrence r;
  r.mu0 = std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                   std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
  r.b.resize(k);
  r.a.resize(k + 1);
  const double ab = alpha + beta;
  for (int j = 0; j < k; ++j) {
    if (j == 0) {
      r.b[j] = (beta - alpha) / (ab + 2.0);
    } else {
      const double d = 2.0 * j + ab;
      r.b[j] = (beta * beta - alpha * alpha) / (d * (d + 2.0));
    }
  }
  r.a[0] = 0.0;
  for (int j = 1; j <= k; ++j) {
    double c2;
    if (j == 1) {
      c2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      const double d = 2.0 * j + ab;
      c2 = 4.0 * j * (j + alpha) * (j + beta) * (j + ab) / (d * d * (d + 1.0) * (d - 1.0));
    }
    r.a[j] = std::sqrt(c2);
  }
  return r;
}

// Evaluates p_K and p_K' at x along with sum_{j<K} p_j(x)^2.
void eval_orthonormal(const JacobiRecurrence& r, int k, double x, double& pk, double& dpk,
                      double& sumsq) {
  double pm1 = 0.0, dpm1 = 0.0;
  double p = 1.0 / std::sqrt(r.mu0), dp = 0.0;
  sumsq = p * p;
  for (int j = 0; j < k; ++j) {
    const double pn = ((x - r.b[j]) * p - r.a[j] * pm1) / r.a[j + 1];
    const double dpn = (p + (x - r.b[j]) * dp - r.a[j] * dpm1) / r.a[j + 1];
    pm1 = p;
    dpm1 = dp;
    p = pn;
    dp = dpn;
    if (j + 1 < k) sumsq += p * p;
  }
  pk = p;
  dpk = dp;
}

}  // namespace

Rule1D Rule1D::mapped_to(double a, double b) const {
  Rule1D out;
  out.nodes.resize(nodes.size());
  out.weights.resize(weights.size());
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.nodes[i] = mid + half * nodes[i];
    out.weights[i] = half * weights[i];
  }
  return out;
}

Rule1D gauss_jacobi(int k, double alpha, double beta) {
  if (k < 1) throw std::domain_error("gauss_jacobi: need at least one node");
  const JacobiRecurrence rec = jacobi_recurrence(k, alpha, beta);

  // Seed nodes from the symmetric tridiagonal Jacobi matrix, then polish
  // each root of p_k by Newton to 1e-14 (cap 100 iterations).
  Eigen::VectorXd diag(k), sub(std::max(k - 1, 0));
  for (int j = 0; j < k; ++j) diag[j] = rec.b[j];
  for (int j = 0; j + 1 < k; ++j) sub[j] = rec.a[j + 1];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  Rule1D rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  for (int i = 0; i < k; ++i) {
    double x = es.eigenvalues()[i];
    double pk = 0.0, dpk = 0.0, sumsq = 0.0;
    for (int it = 0; it < 100; ++it) {
      eval_orthonormal(rec, k, x, pk, dpk, sumsq);
      const double dx = pk / dpk;
      x -= dx;
      if (std::abs(dx) < 1e-14) break;
    }
    eval_orthonormal(rec, k, x, pk, dpk, sumsq);
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / sumsq;
  }
  std::vector<std::size_t> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rule.nodes[a] < rule.nodes[b]; });
  Rule1D sorted;
  sorted.nodes.resize(k);
  sorted.weights.resize(k);
  for (int i = 0; i < k; ++i) {
    sorted.nodes[i] = rule.nodes[order[i]];
    sorted.weights[i] = rule.weights[order[i]];
  }
  return sorted;
}

Rule1D gauss_legendre(int k) { return gauss_jacobi(k, 0.0, 0.0); }

Rule1D composite_legendre(const std::vector<double>& edges, int nodes_per_panel) {
  if (edges.size() < 2) throw std::domain_error("composite_legendre: need at least one panel");
  const Rule1D base = gauss_legendre(nodes_per_panel);
  Rule1D out;
  out.nodes.reserve((edges.size() - 1) * nodes_per_panel);
  out.weights.reserve((edges.size() - 1) * nodes_per_panel);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const Rule1D panel = base.mapped_to(edges[p], edges[p + 1]);
    out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    out.weights.insert(out.weights.end(), panel.weights.begin(), panel.weights.end());
  }
  return out;
}

std::vector<double> geometric_edges(double a, double b, double first, double max_width) {
  std::vector<double> edges{a};
  double w = first;
  double x = a;
  while (x < b) {
    x = std::min(b, x + w);
    edges.push_back(x);
    w = std::min(2.0 * w, max_width);
  }
  return edges;
}

}  // namespace fns
