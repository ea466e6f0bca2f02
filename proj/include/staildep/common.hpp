#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace staildep {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Thrown when a computation fails for numerical reasons (singular matrix,
// quadrature non-convergence, degenerate geometry). Distinct from
// std::invalid_argument, which we reserve for caller contract violations.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline double clamp01(double t) { return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t); }

inline double sqr(double x) { return x * x; }

}  // namespace staildep
