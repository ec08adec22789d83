#pragma once

#include <vector>

#include "garchmimic/interp.hpp"

namespace garchmimic {

enum class GeneratorKind { linear, power, custom };

// Uniformity-preserving v-shaped map on [0,1] with fulcrum delta and a
// generator df Psi.  V(0) = V(1) = 1, V(delta) = 0, strictly decreasing
// left of the fulcrum and strictly increasing right of it.  Values are
// immutable after construction and safe for concurrent reads.
class VTransform {
 public:
  static VTransform linear(double delta);
  static VTransform power(double delta, double kappa);
  // Generator supplied as samples (x_i, Psi(x_i)) of a continuous strictly
  // increasing df on [0,1]; evaluated by monotone cubic interpolation.
  static VTransform custom(double delta, std::vector<double> x, std::vector<double> psi);

  double eval(double u) const;

  // Left-branch solution of V(u) = y; the right-branch one is this value + y.
  double partial_inverse(double y) const;

  // Conditional left-branch probability -1/V'(V^{-1}(y)).
  double delta_fn(double y) const;

  // Left branch when coin <= delta_fn(y), right branch otherwise; the
  // fulcrum when y = 0.
  double stochastic_inverse(double y, double coin) const;

  double fulcrum() const { return delta_; }
  GeneratorKind generator() const { return kind_; }
  double kappa() const { return kappa_; }
  bool is_linear() const { return kind_ == GeneratorKind::linear; }
  bool is_symmetric_linear() const { return kind_ == GeneratorKind::linear && delta_ == 0.5; }

 private:
  VTransform(GeneratorKind kind, double delta, double kappa);

  double psi(double x) const;
  double psi_inverse(double y) const;

  GeneratorKind kind_;
  double delta_;
  double kappa_ = 1.0;
  MonotoneCubic psi_interp_;
};

}  // namespace garchmimic
