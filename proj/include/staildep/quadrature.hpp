#pragma once

#include <functional>
#include <vector>

namespace staildep {

// Gauss-Legendre rule on [0,1].
struct GLRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached rule of the given order (order >= 1). Thread-safe.
const GLRule& gl_rule(int order);

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

// Adaptive tensor Gauss-Legendre on [0,1]^2: each panel is evaluated with an
// order x order rule, the error is estimated against the half-order rule, and
// the worst panel is bisected in both directions until the summed estimate
// drops below abs_tol or the panel budget runs out.
QuadResult integrate2d(const std::function<double(double, double)>& f,
                       double abs_tol, int order = 24, int max_panels = 4096);

// Same scheme in one dimension, on [a,b].
QuadResult integrate1d(const std::function<double(double)>& f, double a,
                       double b, double abs_tol, int order = 24,
                       int max_panels = 4096);

// Non-adaptive tensor product over [0,1]^dim with the given per-axis order.
double tensor_integrate(int dim, int order,
                        const std::function<double(const double*)>& f);

}  // namespace staildep
