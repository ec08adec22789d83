#include "garchmimic/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace garchmimic {

namespace {

// Newton iteration on the Legendre polynomial, exploiting node symmetry.
GaussLegendreRule compute_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    double z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::fabs(z - z1) > 1e-15);
    rule.nodes[i - 1] = -z;
    rule.nodes[n - i] = z;
    rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - i] = rule.weights[i - 1];
  }
  return rule;
}

std::mutex g_rule_mutex;
std::map<int, GaussLegendreRule> g_rules;

// Gauss-Kronrod 15(7) abscissae/weights (positive half; QUADPACK dqk15).
const double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
const double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
const double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GkResult {
  double integral;
  double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double result_k = kWgk[7] * fc;
  double result_g = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(mid - dx) + f(mid + dx);
    result_k += kWgk[j] * fsum;
    if (j % 2 == 1) result_g += kWg[j / 2] * fsum;
  }
  GkResult r;
  r.integral = result_k * half;
  r.error = std::fabs((result_k - result_g) * half);
  return r;
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             int depth, int max_depth) {
  const GkResult r = gk15(f, a, b);
  if (r.error <= tol || depth >= max_depth) return r.integral;
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  auto it = g_rules.find(n);
  if (it == g_rules.end()) it = g_rules.emplace(n, compute_rule(n)).first;
  return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
  return gl_integrate(f, a, b, gauss_legendre(n));
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  const GkResult first = gk15(f, a, b);
  const double tol = std::max(abs_tol, rel_tol * std::fabs(first.integral));
  if (first.error <= tol) return first.integral;
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, 1, max_depth) + adapt(f, mid, b, 0.5 * tol, 1, max_depth);
}

double integrate_real_line(const std::function<double(double)>& f, double abs_tol,
                           double rel_tol) {
  auto g = [&f](double t) {
    const double c = std::cos(t);
    const double x = std::tan(t);
    return f(x) / (c * c);
  };
  // Split at 0 so kinks of sign-split integrands land on a panel edge.
  return integrate_adaptive(g, -M_PI / 2 + 1e-14, 0.0, 0.5 * abs_tol, rel_tol) +
         integrate_adaptive(g, 0.0, M_PI / 2 - 1e-14, 0.5 * abs_tol, rel_tol);
}

double integrate_right_tail(const std::function<double(double)>& f, double a, double abs_tol,
                            double rel_tol) {
  // [a, a+1] directly, then t = 1/(x - a) for the remainder.
  auto g = [&f, a](double t) { return f(a + 1.0 / t) / (t * t); };
  return integrate_adaptive(f, a, a + 1.0, 0.5 * abs_tol, rel_tol) +
         integrate_adaptive(g, 1e-14, 1.0, 0.5 * abs_tol, rel_tol);
}

double integrate_graded(const std::function<double(double)>& f, double a, double b, int levels,
                        int gl_order) {
  const GaussLegendreRule& rule = gauss_legendre(gl_order);
  const double mid = 0.5 * (a + b);
  double total = 0.0;
  double left_hi = mid, right_lo = mid;
  for (int k = 0; k < levels; ++k) {
    const double half_width = (mid - a) * std::pow(0.5, k + 1);
    total += gl_integrate(f, a + half_width, left_hi, rule);
    total += gl_integrate(f, right_lo, b - half_width, rule);
    left_hi = a + half_width;
    right_lo = b - half_width;
  }
  return total;
}

}  // namespace garchmimic
