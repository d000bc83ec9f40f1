#pragma once

#include <functional>
#include <span>
#include <vector>

// Adaptive Gauss-Kronrod quadrature (7/15 pair) with QUADPACK-style error
// estimation. Deterministic: refinement order depends only on the integrand
// values, and the final reduction sums panels in position order.
namespace casimir::quad {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;   // estimated, conservative
  long evaluations = 0;
  bool converged = true;    // false when the subdivision budget ran out first
};

/// Single G7/K15 application on [a, b]. Returns the K15 value; *abs_error
/// receives the QUADPACK-sharpened |K15 - G7| estimate.
double gk15(const std::function<double(double)>& f, double a, double b,
            double* abs_error);

/// Adaptive integration of f over [a, b].
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_subdivisions);

/// Adaptive integration over the union of [edges[0], edges[1]], ... panels.
/// Edges must be strictly increasing. Useful when the caller knows where
/// sharp features sit and seeds panel boundaries around them.
Result integrate_segmented(const std::function<double(double)>& f,
                           std::span<const double> edges, double rel_tol,
                           double abs_tol, int max_subdivisions);

}  // namespace casimir::quad
