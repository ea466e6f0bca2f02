#include "staildep/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

namespace staildep {

namespace {

// Nodes by Newton iteration on P_n, Chebyshev initial guess.
GLRule compute_gl(int n) {
  GLRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    // map [-1,1] -> [0,1]
    r.nodes[i] = 0.5 * (1.0 - x);
    r.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    r.weights[i] = 0.5 * w;
    r.weights[n - 1 - i] = 0.5 * w;
  }
  return r;
}

struct Panel {
  double x0, x1, y0, y1;
  double value;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace

const GLRule& gl_rule(int order) {
  if (order < 1) throw std::invalid_argument("gl_rule: order must be >= 1");
  static std::map<int, GLRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
  return it->second;
}

QuadResult integrate2d(const std::function<double(double, double)>& f,
                       double abs_tol, int order, int max_panels) {
  const GLRule& hi = gl_rule(order);
  const GLRule& lo = gl_rule(std::max(2, order / 2));
  auto eval = [&](const GLRule& r, double x0, double x1, double y0, double y1) {
    double sx = x1 - x0, sy = y1 - y0;
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      double x = x0 + sx * r.nodes[i];
      double rowsum = 0.0;
      for (std::size_t j = 0; j < r.nodes.size(); ++j)
        rowsum += r.weights[j] * f(x, y0 + sy * r.nodes[j]);
      s += r.weights[i] * rowsum;
    }
    return s * sx * sy;
  };
  auto make_panel = [&](double x0, double x1, double y0, double y1) {
    Panel p{x0, x1, y0, y1, 0.0, 0.0};
    p.value = eval(hi, x0, x1, y0, y1);
    p.err = std::abs(p.value - eval(lo, x0, x1, y0, y1));
    return p;
  };
  std::priority_queue<Panel> q;
  q.push(make_panel(0.0, 1.0, 0.0, 1.0));
  double total_err = q.top().err;
  int n_panels = 1;
  while (total_err > abs_tol && n_panels + 3 <= max_panels) {
    Panel p = q.top();
    q.pop();
    total_err -= p.err;
    double xm = 0.5 * (p.x0 + p.x1), ym = 0.5 * (p.y0 + p.y1);
    Panel c[4] = {make_panel(p.x0, xm, p.y0, ym), make_panel(xm, p.x1, p.y0, ym),
                  make_panel(p.x0, xm, ym, p.y1), make_panel(xm, p.x1, ym, p.y1)};
    for (auto& ci : c) {
      total_err += ci.err;
      q.push(ci);
    }
    n_panels += 3;
  }
  QuadResult res;
  res.error_estimate = total_err;
  res.converged = total_err <= abs_tol;
  while (!q.empty()) {
    res.value += q.top().value;
    q.pop();
  }
  return res;
}

QuadResult integrate1d(const std::function<double(double)>& f, double a,
                       double b, double abs_tol, int order, int max_panels) {
  const GLRule& hi = gl_rule(order);
  const GLRule& lo = gl_rule(std::max(2, order / 2));
  auto eval = [&](const GLRule& r, double x0, double x1) {
    double s = 0.0, sx = x1 - x0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      s += r.weights[i] * f(x0 + sx * r.nodes[i]);
    return s * sx;
  };
  struct Seg {
    double x0, x1, value, err;
    bool operator<(const Seg& o) const { return err < o.err; }
  };
  auto make_seg = [&](double x0, double x1) {
    Seg s{x0, x1, eval(hi, x0, x1), 0.0};
    s.err = std::abs(s.value - eval(lo, x0, x1));
    return s;
  };
  std::priority_queue<Seg> q;
  q.push(make_seg(a, b));
  double total_err = q.top().err;
  int n = 1;
  while (total_err > abs_tol && n + 1 <= max_panels) {
    Seg s = q.top();
    q.pop();
    total_err -= s.err;
    double m = 0.5 * (s.x0 + s.x1);
    Seg l = make_seg(s.x0, m), r = make_seg(m, s.x1);
    total_err += l.err + r.err;
    q.push(l);
    q.push(r);
    ++n;
  }
  QuadResult res;
  res.error_estimate = total_err;
  res.converged = total_err <= abs_tol;
  while (!q.empty()) {
    res.value += q.top().value;
    q.pop();
  }
  return res;
}

double tensor_integrate(int dim, int order,
                        const std::function<double(const double*)>& f) {
  const GLRule& r = gl_rule(order);
  std::vector<int> idx(dim, 0);
  std::vector<double> x(dim);
  double total = 0.0;
  for (;;) {
    double w = 1.0;
    for (int k = 0; k < dim; ++k) {
      x[k] = r.nodes[idx[k]];
      w *= r.weights[idx[k]];
    }
    total += w * f(x.data());
    int k = 0;
    for (; k < dim; ++k) {
      if (++idx[k] < order) break;
      idx[k] = 0;
    }
    if (k == dim) break;
  }
  return total;
}

}  // namespace staildep
