#include "garchmimic/grid_density.hpp"

#include <cmath>
#include <stdexcept>

namespace garchmimic {

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    s += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
  return s;
}

GridDensity::GridDensity(std::vector<double> nodes, std::vector<double> pdf_values)
    : nodes_(std::move(nodes)), pdf_(std::move(pdf_values)) {
  const std::size_t n = nodes_.size();
  if (n < 3 || pdf_.size() != n) throw std::invalid_argument("GridDensity: bad grid");

  const double total = trapezoid(nodes_, pdf_);
  if (!(total > 0.0)) throw std::invalid_argument("GridDensity: density integrates to zero");
  for (double& v : pdf_) v /= total;

  cdf_.resize(n);
  cdf_[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    cdf_[i] = cdf_[i - 1] + 0.5 * (pdf_[i - 1] + pdf_[i]) * (nodes_[i] - nodes_[i - 1]);
  for (double& v : cdf_) v = std::min(v / cdf_[n - 1], 1.0);
  cdf_[n - 1] = 1.0;

  pdf_interp_ = MonotoneCubic(nodes_, pdf_);
  cdf_interp_ = MonotoneCubic(nodes_, cdf_);

  // Quantile knots need strictly increasing probabilities; the df can
  // saturate in the far tails, so collapse flat runs.
  std::vector<double> qp, qx;
  qp.reserve(n);
  qx.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!qp.empty() && cdf_[i] <= qp.back()) continue;
    qp.push_back(cdf_[i]);
    qx.push_back(nodes_[i]);
  }
  if (qp.size() < 2) throw std::invalid_argument("GridDensity: degenerate df");
  quantile_interp_ = MonotoneCubic(std::move(qp), std::move(qx));
}

double GridDensity::pdf(double x) const {
  if (x < nodes_.front() || x > nodes_.back()) return 0.0;
  return std::max(0.0, pdf_interp_(x));
}

double GridDensity::cdf(double x) const {
  if (x <= nodes_.front()) return 0.0;
  if (x >= nodes_.back()) return 1.0;
  return cdf_interp_(x);
}

double GridDensity::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("GridDensity::quantile: p outside [0,1]");
  return quantile_interp_(p);
}

double GridDensity::mean() const {
  std::vector<double> xf(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) xf[i] = nodes_[i] * pdf_[i];
  return trapezoid(nodes_, xf);
}

double GridDensity::variance() const {
  const double m = mean();
  std::vector<double> x2f(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double d = nodes_[i] - m;
    x2f[i] = d * d * pdf_[i];
  }
  return trapezoid(nodes_, x2f);
}

}  // namespace garchmimic
