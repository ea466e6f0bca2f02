#include "staildep/normal.hpp"

#include <algorithm>
#include <cmath>

#include "staildep/quadrature.hpp"

namespace staildep {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
// |r| beyond this is treated as perfect (anti)correlation.
constexpr double kDegenerate = 1.0 - 5e-13;

double phi2_density(double x, double y, double r) {
  double om = (1.0 - r) * (1.0 + r);
  if (om <= 0.0) return 0.0;
  double e = (x * x - 2.0 * r * x * y + y * y) / (2.0 * om);
  return std::exp(-e) / (kTwoPi * std::sqrt(om));
}

// Genz's BVND: P(X > h, Y > k) for standard bivariate normal, correlation r.
double bvnu(double h, double k, double r) {
  if (std::abs(r) >= 1.0) {
    if (r > 0.0) return norm_cdf(-std::max(h, k));
    double p = norm_cdf(-h) - norm_cdf(k);
    return p > 0.0 ? p : 0.0;
  }
  double hk = h * k;
  double bvn = 0.0;
  if (std::abs(r) < 0.925) {
    if (r != 0.0) {
      const GLRule& gl = gl_rule(20);
      double hs = (h * h + k * k) / 2.0;
      double asr = std::asin(r);
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        double sn = std::sin(asr * gl.nodes[i]);
        bvn += gl.weights[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
      }
      bvn *= asr / kTwoPi;
    }
    return bvn + norm_cdf(-h) * norm_cdf(-k);
  }
  // High-|r| branch: expansion around the degenerate limit.
  if (r < 0.0) {
    k = -k;
    hk = -hk;
  }
  double as = (1.0 - r) * (1.0 + r);
  double a = std::sqrt(as);
  double bs = (h - k) * (h - k);
  double c = (4.0 - hk) / 8.0;
  double d = (12.0 - hk) / 16.0;
  double asr = -(bs / as + hk) / 2.0;
  if (asr > -100.0)
    bvn = a * std::exp(asr) *
          (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
  if (-hk < 100.0) {
    double b = std::sqrt(bs);
    bvn -= std::exp(-hk / 2.0) * std::sqrt(kTwoPi) * norm_cdf(-b / a) * b *
           (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
  }
  const GLRule& gl = gl_rule(20);
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    double x = a * gl.nodes[i];
    double xs = x * x;
    double rs = std::sqrt(1.0 - xs);
    double asr2 = -(bs / xs + hk) / 2.0;
    if (asr2 > -100.0)
      bvn += a * gl.weights[i] * std::exp(asr2) *
             (std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs -
              (1.0 + c * xs * (1.0 + d * xs)));
  }
  bvn = -bvn / kTwoPi;
  if (r > 0.0) return bvn + norm_cdf(-std::max(h, k));
  bvn = -bvn;
  if (k > h) bvn += norm_cdf(k) - norm_cdf(h);
  return bvn > 0.0 ? bvn : 0.0;
}

struct Tvn {
  double b[3];
  double r21, r31, r32;
};

double tvn_eval(Tvn t);

// Collapse a perfectly (anti)correlated pair (2,3) to a bivariate problem.
double tvn_merge23(const Tvn& t) {
  if (t.r32 > 0.0) return bvn_cdf(t.b[0], std::min(t.b[1], t.b[2]), t.r21);
  // Z3 = -Z2: need -b3 <= Z2 <= b2 jointly with Z1 <= b1.
  if (t.b[1] <= -t.b[2]) return 0.0;
  return bvn_cdf(t.b[0], t.b[1], t.r21) - bvn_cdf(t.b[0], -t.b[2], t.r21);
}

Tvn tvn_permute(const Tvn& t, int p0, int p1, int p2) {
  double r[3][3] = {{1.0, t.r21, t.r31}, {t.r21, 1.0, t.r32}, {t.r31, t.r32, 1.0}};
  Tvn o;
  o.b[0] = t.b[p0];
  o.b[1] = t.b[p1];
  o.b[2] = t.b[p2];
  o.r21 = r[p0][p1];
  o.r31 = r[p0][p2];
  o.r32 = r[p1][p2];
  return o;
}

double tvn_eval(Tvn t) {
  for (double& bi : t.b) bi = std::clamp(bi, -40.0, 40.0);
  double a21 = std::abs(t.r21), a31 = std::abs(t.r31), a32 = std::abs(t.r32);
  // Degenerate pairs collapse exactly; route the degenerate pair to (2,3).
  if (a32 >= kDegenerate) return tvn_merge23(t);
  if (a21 >= kDegenerate) return tvn_merge23(tvn_permute(t, 2, 0, 1));
  if (a31 >= kDegenerate) return tvn_merge23(tvn_permute(t, 1, 0, 2));
  // Fix the smallest correlation as r32; variable 1 carries the two moved ones.
  if (a21 <= a31 && a21 <= a32)
    t = tvn_permute(t, 2, 0, 1);
  else if (a31 <= a21 && a31 <= a32)
    t = tvn_permute(t, 1, 0, 2);
  const double b1 = t.b[0], b2 = t.b[1], b3 = t.b[2];
  const double q21 = t.r21, q31 = t.r31, q32 = t.r32;
  double base = norm_cdf(b1) * bvn_cdf(b2, b3, q32);
  if (q21 == 0.0 && q31 == 0.0) return base;
  auto integrand = [&](double s) {
    double r12 = s * q21, r13 = s * q31;
    double total = 0.0;
    {
      double den = (1.0 - r12) * (1.0 + r12);
      double c1 = (r13 - q32 * r12) / den;
      double c2 = (q32 - r13 * r12) / den;
      double v = 1.0 - c1 * r13 - c2 * q32;
      double u = (b3 - c1 * b1 - c2 * b2) / std::sqrt(std::max(v, 1e-14));
      total += q21 * phi2_density(b1, b2, r12) * norm_cdf(u);
    }
    {
      double den = (1.0 - r13) * (1.0 + r13);
      double c1 = (r12 - q32 * r13) / den;
      double c2 = (q32 - r12 * r13) / den;
      double v = 1.0 - c1 * r12 - c2 * q32;
      double u = (b2 - c1 * b1 - c2 * b3) / std::sqrt(std::max(v, 1e-14));
      total += q31 * phi2_density(b1, b3, r13) * norm_cdf(u);
    }
    return total;
  };
  QuadResult q = integrate1d(integrand, 0.0, 1.0, 1e-11, 24, 512);
  double p = base + q.value;
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

double norm_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(kTwoPi); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double bvn_cdf(double x, double y, double rho) {
  x = std::clamp(x, -40.0, 40.0);
  y = std::clamp(y, -40.0, 40.0);
  if (std::abs(rho) >= kDegenerate) {
    if (rho > 0.0) return norm_cdf(std::min(x, y));
    double p = norm_cdf(x) + norm_cdf(y) - 1.0;
    return p > 0.0 ? p : 0.0;
  }
  return bvnu(-x, -y, rho);
}

double tvn_cdf(double b1, double b2, double b3, double r21, double r31,
               double r32) {
  Tvn t{{b1, b2, b3}, r21, r31, r32};
  return tvn_eval(t);
}

double mvn_cdf(const Vector& upper, const Matrix& corr) {
  const auto dim = upper.size();
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("mvn_cdf: dim must be 1, 2 or 3");
  if (corr.rows() != dim || corr.cols() != dim)
    throw std::invalid_argument("mvn_cdf: corr shape mismatch");
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (std::abs(corr(i, i) - 1.0) > 1e-12)
      throw std::invalid_argument("mvn_cdf: corr diagonal must be 1");
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(corr(i, j) - corr(j, i)) > 1e-12)
        throw std::invalid_argument("mvn_cdf: corr must be symmetric");
      if (std::abs(corr(i, j)) > 1.0 + 1e-12)
        throw std::invalid_argument("mvn_cdf: correlation out of [-1,1]");
    }
  }
  if (dim == 1) return norm_cdf(upper[0]);
  if (dim == 2) return bvn_cdf(upper[0], upper[1], corr(0, 1));
  return tvn_cdf(upper[0], upper[1], upper[2], corr(0, 1), corr(0, 2),
                 corr(1, 2));
}

}  // namespace staildep
