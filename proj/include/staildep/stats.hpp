#pragma once

#include <functional>
#include <vector>

namespace staildep {

// Upper regularized incomplete gamma Q(a, x).
double gamma_q(double a, double x);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi2_sf(double x, double df);

// Kolmogorov-Smirnov statistic of a sample against a continuous cdf.
double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf);

// Asymptotic KS critical value at the given significance level (supported:
// 0.01, 0.05, 0.10) for sample size n.
double ks_critical(double alpha, std::size_t n);

}  // namespace staildep
