#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fns {

// Thrown when an input shape does not match what an operation expects
// (mismatched grid kinds, too few t-levels, wrong vector lengths).
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a request exceeds what a grid can resolve (kmax too large,
// quadrature box too small for the stated tail tolerance, empty annulus).
struct ResolutionError : std::runtime_error {
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a point where the transform is singular.
struct SingularityError : std::runtime_error {
  explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed to converge; carries diagnostics.
struct SolverFailure : std::runtime_error {
  explicit SolverFailure(const std::string& what, std::vector<double> history = {},
                         double offending_norm = 0.0)
      : std::runtime_error(what),
        residual_history(std::move(history)),
        offending_norm(offending_norm) {}
  std::vector<double> residual_history;
  double offending_norm;
};

}  // namespace fns
