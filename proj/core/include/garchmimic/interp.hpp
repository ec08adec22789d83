#pragma once

#include <vector>

namespace garchmimic {

// Monotone cubic Hermite interpolant (Fritsch-Carlson slopes).
// Preserves monotonicity of the knot values; evaluation clamps to the
// knot range.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;

  bool empty() const { return x_.empty(); }
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::size_t find_interval(double x) const;

  std::vector<double> x_, y_, slope_;
};

}  // namespace garchmimic
