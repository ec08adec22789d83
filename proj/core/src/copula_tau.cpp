#include <cmath>
#include <stdexcept>
#include <vector>

#include "garchmimic/copula.hpp"
#include "garchmimic/quadrature.hpp"

namespace garchmimic {

namespace {

// Dyadic grading of (0, 0.5] toward zero; the t copula density has a corner
// asymptote at the origin, so panels shrink geometrically there.
std::vector<double> graded_edges(int levels) {
  std::vector<double> edges;
  double x = 0.5;
  edges.push_back(x);
  for (int k = 0; k < levels; ++k) {
    x *= 0.5;
    edges.push_back(x);
  }
  return edges;  // descending, last edge ~ 0.5 * 2^-levels
}

}  // namespace

// tau(nu) = 64 * I - 1 with I the integral of C^t c^t over [0,0.5]^2.
// Integration by parts in v turns it into
//   I = int_0^0.5 C(u,0.5) h1(u,0.5) du - int int h1(u,v) h2(u,v) du dv,
// which avoids quadrature of the corner-singular density c^t.
double kendall_tau_ast(double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("kendall_tau_ast: nu must be positive");
  const CopulaPtr cop = spherical_t_copula(nu);

  const double line = integrate_adaptive(
      [&](double u) { return cop->cdf(u, 0.5) * cop->h1(u, 0.5); }, 1e-10, 0.5, 1e-9, 1e-9);

  const std::vector<double> edges = graded_edges(26);
  const auto& rule = gauss_legendre(8);
  double area = 0.0;
  for (std::size_t pi = 0; pi + 1 < edges.size(); ++pi) {
    const double ua = edges[pi + 1], ub = edges[pi];
    std::vector<double> un(rule.nodes.size()), h1row;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      un[i] = 0.5 * (ua + ub) + 0.5 * (ub - ua) * rule.nodes[i];
    for (std::size_t pj = 0; pj + 1 < edges.size(); ++pj) {
      const double va = edges[pj + 1], vb = edges[pj];
      double panel = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
          const double v = 0.5 * (va + vb) + 0.5 * (vb - va) * rule.nodes[j];
          inner += rule.weights[j] * cop->h1(un[i], v) * cop->h2(un[i], v);
        }
        panel += rule.weights[i] * inner;
      }
      area += panel * 0.25 * (ub - ua) * (vb - va);
    }
  }
  return 64.0 * (line - area) - 1.0;
}

double kendall_tau_ast_inverse(double tau) {
  if (!(tau > 0.001 && tau < 0.999))
    throw std::domain_error("kendall_tau_ast_inverse: tau must lie in (0.001, 0.999)");
  double lo = std::log(1e-4), hi = std::log(1e7);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double t = kendall_tau_ast(std::exp(mid));
    if (std::fabs(t - tau) < 2e-4) return std::exp(mid);
    if (t > tau)  // tau decreases in nu
      lo = mid;
    else
      hi = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

double clayton_tau(double theta) { return theta / (theta + 2.0); }

double clayton_tau_inverse(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::domain_error("clayton_tau_inverse: tau outside (0,1)");
  return 2.0 * tau / (1.0 - tau);
}

double gumbel_tau(double theta) { return 1.0 - 1.0 / theta; }

double gumbel_tau_inverse(double tau) {
  if (!(tau >= 0.0 && tau < 1.0)) throw std::domain_error("gumbel_tau_inverse: tau outside [0,1)");
  return 1.0 / (1.0 - tau);
}

// tau = 1 + 4 int_0^1 phi/phi' via the generator phi(t) = -log(1-(1-t)^theta);
// after s = 1-t this is 1 + (4/theta) int_0^1 log(1-s^t)(1-s^t) s^{1-t} ds.
double joe_tau(double theta) {
  if (!(theta >= 1.0)) throw std::domain_error("joe_tau: theta must be >= 1");
  if (theta == 1.0) return 0.0;
  const double integral = integrate_adaptive(
      [theta](double s) {
        const double st = std::pow(s, theta);
        if (st >= 1.0) return 0.0;
        return std::log1p(-st) * (1.0 - st) * std::pow(s, 1.0 - theta);
      },
      1e-14, 1.0 - 1e-14, 1e-10, 1e-10);
  return 1.0 + 4.0 / theta * integral;
}

double joe_tau_inverse(double tau) {
  if (!(tau >= 0.0 && tau < joe_tau(100.0)))
    throw std::domain_error("joe_tau_inverse: tau outside the range of theta in [1,100]");
  double lo = 1.0, hi = 100.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (joe_tau(mid) < tau)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace garchmimic
