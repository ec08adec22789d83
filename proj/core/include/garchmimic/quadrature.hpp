#pragma once

#include <functional>
#include <vector>

namespace garchmimic {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Returns a cached rule with n points (thread-safe).
const GaussLegendreRule& gauss_legendre(int n);

// Fixed-order Gauss-Legendre integral of f over [a, b].
template <typename F>
double gl_integrate(F&& f, double a, double b, const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);

// Adaptive Gauss-Kronrod 15(7) on a finite interval.  Bisects until the
// local error estimate is below max(abs_tol, rel_tol * |I|) or the depth
// limit is reached.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-10, double rel_tol = 1e-10, int max_depth = 30);

// Adaptive integral over the whole real line via the substitution x = tan(t).
double integrate_real_line(const std::function<double(double)>& f,
                           double abs_tol = 1e-10, double rel_tol = 1e-10);

// Adaptive integral over [a, +inf), substituting the tail beyond a + 1.
double integrate_right_tail(const std::function<double(double)>& f, double a,
                            double abs_tol = 1e-10, double rel_tol = 1e-10);

// Integral over (a, b) with dyadic panels shrinking geometrically toward
// both endpoints; robust to integrable endpoint singularities.
double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        int levels = 48, int gl_order = 16);

}  // namespace garchmimic
