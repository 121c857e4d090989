#pragma once

#include <functional>
#include <vector>

namespace fns {

// A 1-D quadrature rule: sum_i weights[i] * f(nodes[i]).
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  // Affine image of a rule on (-1,1) onto (a,b); weights scale by (b-a)/2.
  Rule1D mapped_to(double a, double b) const;

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

// Gauss-Jacobi rule on (-1,1) for the weight (1-x)^alpha (1+x)^beta,
// alpha, beta > -1.  Exact for polynomials of degree <= 2k-1 against the
// weight.  Nodes are eigenvalue seeds polished by Newton iteration on the
// orthonormal recurrence to 1e-14, iteration cap 100.
Rule1D gauss_jacobi(int k, double alpha, double beta);

// Gauss-Legendre on (-1,1).
Rule1D gauss_legendre(int k);

// Composite rule: per-panel Gauss-Legendre with the given panel edges
// (ascending) and nodes per panel.
Rule1D composite_legendre(const std::vector<double>& edges, int nodes_per_panel);

// Geometric panel edges from `a` to `b` starting with width `first`,
// doubling until `max_width` is reached, then uniform.  a may be 0.
std::vector<double> geometric_edges(double a, double b, double first, double max_width);

}  // namespace fns
