#pragma once

#include <vector>

#include "garchmimic/interp.hpp"

namespace garchmimic {

// Tabulated marginal density on an ordered grid, with df and quantile
// interpolants built by cumulative trapezoid integration.
class GridDensity {
 public:
  GridDensity() = default;
  // pdf_values are renormalised so the trapezoid integral is exactly one.
  GridDensity(std::vector<double> nodes, std::vector<double> pdf_values);

  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;

  double mean() const;
  double variance() const;

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& pdf_values() const { return pdf_; }
  const std::vector<double>& cdf_values() const { return cdf_; }

 private:
  std::vector<double> nodes_, pdf_, cdf_;
  MonotoneCubic pdf_interp_, cdf_interp_, quantile_interp_;
};

// Trapezoid integral of tabulated values.
double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace garchmimic
