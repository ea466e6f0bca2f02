#pragma once

#include "staildep/common.hpp"

namespace staildep {

double norm_pdf(double x);
double norm_cdf(double x);

// P(Z1 <= x, Z2 <= y) under standard bivariate normal with correlation rho.
// Absolute accuracy ~1e-15 (Drezner-Wesolowsky / Genz scheme), exact limits
// at rho = +-1.
double bvn_cdf(double x, double y, double rho);

// P(Z1 <= b1, Z2 <= b2, Z3 <= b3) with correlations r21, r31, r32.
// Plackett-path reduction to a smooth 1-D integral; absolute accuracy
// better than 1e-8 (typically ~1e-11). Degenerate correlations (|r| -> 1)
// are collapsed exactly.
double tvn_cdf(double b1, double b2, double b3, double r21, double r31,
               double r32);

// Validating wrapper: dim in {1,2,3}, corr symmetric with unit diagonal and
// off-diagonal entries in [-1,1]. Throws std::invalid_argument otherwise.
double mvn_cdf(const Vector& upper, const Matrix& corr);

}  // namespace staildep
