#include "garchmimic/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace garchmimic {

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> start, const NelderMeadOptions& opt) {
  const std::size_t n = start.size();
  NelderMeadResult result;
  if (n == 0) {
    result.x = start;
    result.value = f(start);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }

  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i)
    simplex[i + 1][i] += start[i] != 0.0 ? opt.initial_step * std::fabs(start[i]) : opt.initial_step;

  std::vector<double> fx(n + 1);
  int evals = 0;
  for (std::size_t i = 0; i <= n; ++i) fx[i] = (++evals, f(simplex[i]));

  const double alpha = 1.0, gamma = 2.0, rho = 0.5, shrink = 0.5;
  std::vector<std::size_t> order(n + 1);

  while (evals < opt.max_evaluations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&fx](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    const std::size_t best = order[0], worst = order[n], second = order[n - 1];

    double size = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        size = std::max(size, std::fabs(simplex[i][j] - simplex[best][j]));
    if (size < opt.tolerance) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;
    }

    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (centroid[j] - simplex[worst][j]);
      return p;
    };

    const std::vector<double> reflected = blend(alpha);
    const double fr = (++evals, f(reflected));
    if (fr < fx[best]) {
      const std::vector<double> expanded = blend(gamma);
      const double fe = (++evals, f(expanded));
      if (fe < fr) {
        simplex[worst] = expanded;
        fx[worst] = fe;
      } else {
        simplex[worst] = reflected;
        fx[worst] = fr;
      }
      continue;
    }
    if (fr < fx[second]) {
      simplex[worst] = reflected;
      fx[worst] = fr;
      continue;
    }
    const std::vector<double> contracted = blend(fr < fx[worst] ? rho : -rho);
    const double fc = (++evals, f(contracted));
    if (fc < std::min(fr, fx[worst])) {
      simplex[worst] = contracted;
      fx[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j)
        simplex[i][j] = simplex[best][j] + shrink * (simplex[i][j] - simplex[best][j]);
      fx[i] = (++evals, f(simplex[i]));
    }
  }

  const std::size_t best =
      std::min_element(fx.begin(), fx.end()) - fx.begin();
  result.x = simplex[best];
  result.value = fx[best];
  result.evaluations = evals;
  return result;
}

}  // namespace garchmimic
