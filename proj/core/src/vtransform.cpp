#include "garchmimic/vtransform.hpp"

#include <cmath>
#include <stdexcept>

namespace garchmimic {

namespace {

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error(std::string(what) + " outside [0,1]");
}

}  // namespace

VTransform::VTransform(GeneratorKind kind, double delta, double kappa)
    : kind_(kind), delta_(delta), kappa_(kappa) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("VTransform: fulcrum must lie strictly inside (0,1)");
}

VTransform VTransform::linear(double delta) {
  return VTransform(GeneratorKind::linear, delta, 1.0);
}

VTransform VTransform::power(double delta, double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("VTransform: power exponent must be positive");
  return VTransform(GeneratorKind::power, delta, kappa);
}

VTransform VTransform::custom(double delta, std::vector<double> x, std::vector<double> psi) {
  if (x.size() < 2 || x.front() != 0.0 || x.back() != 1.0 || psi.front() != 0.0 ||
      psi.back() != 1.0)
    throw std::invalid_argument("VTransform: generator samples must span [0,1] with Psi(0)=0, Psi(1)=1");
  for (std::size_t i = 1; i < psi.size(); ++i)
    if (!(psi[i] > psi[i - 1]))
      throw std::invalid_argument("VTransform: generator df must be strictly increasing");
  VTransform vt(GeneratorKind::custom, delta, 1.0);
  vt.psi_interp_ = MonotoneCubic(std::move(x), std::move(psi));
  return vt;
}

double VTransform::psi(double x) const {
  switch (kind_) {
    case GeneratorKind::linear:
      return x;
    case GeneratorKind::power:
      return std::pow(x, kappa_);
    case GeneratorKind::custom:
      return psi_interp_(x);
  }
  return x;
}

double VTransform::psi_inverse(double y) const {
  switch (kind_) {
    case GeneratorKind::linear:
      return y;
    case GeneratorKind::power:
      return std::pow(y, 1.0 / kappa_);
    case GeneratorKind::custom: {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (psi_interp_(mid) < y)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
  return y;
}

double VTransform::eval(double u) const {
  check_unit(u, "VTransform::eval: u");
  if (u <= delta_) return (1.0 - u) - (1.0 - delta_) * psi(u / delta_);
  return u - delta_ * psi_inverse((1.0 - u) / (1.0 - delta_));
}

double VTransform::partial_inverse(double y) const {
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("VTransform::partial_inverse: y outside [0,1]");
  if (y == 0.0) return delta_;
  if (y == 1.0) return 0.0;
  if (kind_ == GeneratorKind::linear) return delta_ * (1.0 - y);

  // V is strictly decreasing from 1 to 0 on [0, delta]: bracketed bisection.
  double lo = 0.0, hi = delta_;
  for (int it = 0; it < 90; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) > y)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-16) break;
  }
  double u = 0.5 * (lo + hi);
  if (!(eval(lo) >= y && eval(hi) <= y))
    throw std::runtime_error("VTransform::partial_inverse: bracketing failed");
  return u;
}

double VTransform::delta_fn(double y) const {
  if (!(y > 0.0 && y <= 1.0)) throw std::domain_error("VTransform::delta_fn: y outside (0,1]");
  if (kind_ == GeneratorKind::linear) return delta_;
  const double u = partial_inverse(y);
  double slope;
  if (kind_ == GeneratorKind::power) {
    slope = -1.0 - (1.0 - delta_) * (kappa_ / delta_) * std::pow(u / delta_, kappa_ - 1.0);
  } else {
    const double h = 1e-7;
    const double a = std::max(0.0, u - h);
    const double b = std::min(delta_, u + h);
    slope = (eval(b) - eval(a)) / (b - a);
  }
  if (!(slope < 0.0)) throw std::runtime_error("VTransform::delta_fn: degenerate derivative");
  return -1.0 / slope;
}

double VTransform::stochastic_inverse(double y, double coin) const {
  check_unit(y, "VTransform::stochastic_inverse: y");
  check_unit(coin, "VTransform::stochastic_inverse: coin");
  if (y == 0.0) return delta_;
  const double left = partial_inverse(y);
  return coin <= delta_fn(y) ? left : left + y;
}

}  // namespace garchmimic
