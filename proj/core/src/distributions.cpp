#include "garchmimic/distributions.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <algorithm>
#include <cmath>

namespace garchmimic {

namespace {

// Skip boost's internal promotion to long double; double precision is plenty
// and the t quantile sits on the hot path of PML fitting.  Overflow is
// ignored rather than thrown: quantiles of tiny-nu t laws exceed double
// range in the far tails and are saturated below.
using fast_policy = boost::math::policies::policy<
    boost::math::policies::promote_double<false>,
    boost::math::policies::overflow_error<boost::math::policies::ignore_error>>;
using t_dist = boost::math::students_t_distribution<double, fast_policy>;
using normal_dist = boost::math::normal_distribution<double, fast_policy>;

// Saturation bound keeping squares within double range.
constexpr double kQuantileCap = 1e100;

const normal_dist g_normal(0.0, 1.0);

// E|T| for Student t with nu > 1 degrees of freedom.
double student_abs_mean(double nu) {
  return 2.0 * std::sqrt(nu) * std::exp(std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu)) /
         ((nu - 1.0) * std::sqrt(M_PI));
}

}  // namespace

double normal_pdf(double x) { return boost::math::pdf(g_normal, x); }
double normal_cdf(double x) { return boost::math::cdf(g_normal, x); }
double normal_quantile(double p) { return boost::math::quantile(g_normal, p); }

double student_t_pdf(double x, double nu) { return boost::math::pdf(t_dist(nu), x); }

double student_t_log_pdf(double x, double nu) {
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) - 0.5 * std::log(nu * M_PI) -
         0.5 * (nu + 1.0) * std::log1p(x * x / nu);
}

double student_t_cdf(double x, double nu) { return boost::math::cdf(t_dist(nu), x); }

double student_t_quantile(double p, double nu) {
  const double q = boost::math::quantile(t_dist(nu), p);
  return std::clamp(q, -kQuantileCap, kQuantileCap);
}

InnovationDist InnovationDist::gaussian() { return InnovationDist(InnovationLaw::gaussian, 0.0, 1.0); }

InnovationDist InnovationDist::student(double nu) {
  if (nu <= 2.0) throw std::invalid_argument("student innovations need nu > 2 for unit variance");
  return InnovationDist(InnovationLaw::student_t, nu, 1.0);
}

InnovationDist InnovationDist::skew_student(double nu, double lambda) {
  if (nu <= 2.0) throw std::invalid_argument("skew-t innovations need nu > 2 for unit variance");
  if (lambda <= 0.0) throw std::invalid_argument("skew-t asymmetry parameter must be positive");
  return InnovationDist(InnovationLaw::skew_t, nu, lambda);
}

InnovationDist::InnovationDist(InnovationLaw law, double nu, double lambda)
    : law_(law), nu_(nu), lambda_(lambda) {
  switch (law_) {
    case InnovationLaw::gaussian:
      break;
    case InnovationLaw::student_t:
      scale_ = std::sqrt(nu_ / (nu_ - 2.0));
      break;
    case InnovationLaw::skew_t: {
      const double g = lambda_;
      const double m1 = student_abs_mean(nu_);
      const double m2 = nu_ / (nu_ - 2.0);
      const double mean = m1 * (g - 1.0 / g);
      const double second = m2 * (g * g * g + 1.0 / (g * g * g)) / (g + 1.0 / g);
      shift_ = mean;
      scale_ = std::sqrt(second - mean * mean);
      break;
    }
  }
}

double InnovationDist::pdf(double x) const {
  switch (law_) {
    case InnovationLaw::gaussian:
      return normal_pdf(x);
    case InnovationLaw::student_t:
      return scale_ * student_t_pdf(scale_ * x, nu_);
    case InnovationLaw::skew_t: {
      const double xi = shift_ + scale_ * x;
      const double g = lambda_;
      const double c = 2.0 * g / (g * g + 1.0);
      const double base = xi < 0.0 ? student_t_pdf(g * xi, nu_) : student_t_pdf(xi / g, nu_);
      return scale_ * c * base;
    }
  }
  return 0.0;
}

double InnovationDist::log_pdf(double x) const {
  switch (law_) {
    case InnovationLaw::gaussian:
      return -0.5 * x * x - 0.5 * std::log(2.0 * M_PI);
    case InnovationLaw::student_t:
      return std::log(scale_) + student_t_log_pdf(scale_ * x, nu_);
    case InnovationLaw::skew_t: {
      const double xi = shift_ + scale_ * x;
      const double g = lambda_;
      const double base =
          xi < 0.0 ? student_t_log_pdf(g * xi, nu_) : student_t_log_pdf(xi / g, nu_);
      return std::log(scale_ * 2.0 * g / (g * g + 1.0)) + base;
    }
  }
  return -INFINITY;
}

double InnovationDist::cdf(double x) const {
  switch (law_) {
    case InnovationLaw::gaussian:
      return normal_cdf(x);
    case InnovationLaw::student_t:
      return student_t_cdf(scale_ * x, nu_);
    case InnovationLaw::skew_t: {
      const double xi = shift_ + scale_ * x;
      const double g = lambda_;
      const double g2 = g * g;
      if (xi < 0.0) return 2.0 / (g2 + 1.0) * student_t_cdf(g * xi, nu_);
      return 1.0 / (g2 + 1.0) +
             2.0 * g2 / (g2 + 1.0) * (student_t_cdf(xi / g, nu_) - 0.5);
    }
  }
  return 0.0;
}

double InnovationDist::quantile(double p) const {
  if (p <= 0.0 || p >= 1.0) throw std::domain_error("innovation quantile needs p in (0,1)");
  switch (law_) {
    case InnovationLaw::gaussian:
      return normal_quantile(p);
    case InnovationLaw::student_t:
      return student_t_quantile(p, nu_) / scale_;
    case InnovationLaw::skew_t: {
      const double g = lambda_;
      const double g2 = g * g;
      const double p0 = 1.0 / (g2 + 1.0);  // mass of the raw law below zero
      double xi;
      if (p < p0)
        xi = student_t_quantile(0.5 * p * (g2 + 1.0), nu_) / g;
      else
        xi = g * student_t_quantile(0.5 + (p - p0) * (g2 + 1.0) / (2.0 * g2), nu_);
      return (xi - shift_) / scale_;
    }
  }
  return 0.0;
}

std::string InnovationDist::name() const {
  switch (law_) {
    case InnovationLaw::gaussian:
      return "gauss";
    case InnovationLaw::student_t:
      return "t(" + std::to_string(nu_) + ")";
    case InnovationLaw::skew_t:
      return "skewt(" + std::to_string(nu_) + "," + std::to_string(lambda_) + ")";
  }
  return "?";
}

}  // namespace garchmimic
