#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "garchmimic/rng.hpp"

namespace garchmimic {

// Standard normal and Student t helpers (any real nu > 0).
double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double p);
double student_t_pdf(double x, double nu);
double student_t_log_pdf(double x, double nu);
double student_t_cdf(double x, double nu);
double student_t_quantile(double p, double nu);

enum class InnovationLaw { gaussian, student_t, skew_t };

// Innovation distribution standardised to mean zero and variance one.
// The skewed Student t uses the Fernandez-Steel construction with
// asymmetry parameter lambda (lambda < 1 skews to the left).
class InnovationDist {
 public:
  static InnovationDist gaussian();
  static InnovationDist student(double nu);
  static InnovationDist skew_student(double nu, double lambda);

  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;
  double sample(Rng& rng) const { return quantile(rng.uniform()); }

  InnovationLaw law() const { return law_; }
  double nu() const { return nu_; }
  double lambda() const { return lambda_; }
  bool symmetric() const { return law_ != InnovationLaw::skew_t; }
  std::string name() const;

 private:
  InnovationDist(InnovationLaw law, double nu, double lambda);

  InnovationLaw law_;
  double nu_ = 0.0;
  double lambda_ = 1.0;
  // Raw variate xi relates to the standardised one via xi = shift_ + scale_ * eps.
  double shift_ = 0.0;
  double scale_ = 1.0;
};

}  // namespace garchmimic
