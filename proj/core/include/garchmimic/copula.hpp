#pragma once

#include <memory>
#include <vector>

#include "garchmimic/copula_spec.hpp"
#include "garchmimic/rng.hpp"

namespace garchmimic {

// Log-densities are clamped at this value near corner asymptotes
// (exp of it is about 1e300).
inline constexpr double kLogDensityClamp = 690.7755;

struct SamplePairs {
  std::vector<double> u;
  std::vector<double> v;
};

// Bivariate copula interface.  h1 = dC/du is the conditional df of the
// second argument given the first, h2 = dC/dv the reverse.  All evaluations
// are reentrant; samplers take an explicit seeded generator.
class BivariateCopula {
 public:
  virtual ~BivariateCopula() = default;

  virtual double cdf(double u, double v) const = 0;
  virtual double log_pdf(double u, double v) const = 0;
  double pdf(double u, double v, bool* clamped = nullptr) const;

  virtual double h1(double u, double v) const = 0;
  virtual double h2(double u, double v) const = 0;
  // Solve h1(u, x) = p for x; default monotone bisection + Newton polish
  // with |h1(u, result) - p| < 1e-10.
  virtual double h1_inv(double u, double p) const;
  // Solve h2(x, v) = p for x.
  virtual double h2_inv(double p, double v) const;

  // i.i.d. pairs by the conditional-distribution method (u, then the
  // conditioning uniform, in a fixed interleaving order).
  virtual SamplePairs sample(std::size_t n, Rng& rng) const;

  // True when cdf and h-functions are closed-form (no quadrature); the
  // Khoudraji construction is restricted to such bases.
  virtual bool has_analytic_cdf() const { return true; }

  // Declarative description for serialisation.
  virtual CopulaSpec spec() const = 0;
};

using CopulaPtr = std::shared_ptr<const BivariateCopula>;

// Parametric families.
CopulaPtr independence_copula();
CopulaPtr gaussian_copula(double rho);
CopulaPtr student_t_copula(double rho, double nu, int cdf_nodes = 256);
CopulaPtr spherical_t_copula(double nu, int cdf_nodes = 256);
CopulaPtr abs_spherical_t_copula(double nu, int cdf_nodes = 256);
CopulaPtr clayton_copula(double theta);
CopulaPtr gumbel_copula(double theta);
CopulaPtr joe_copula(double theta);

// Structural constructions.
CopulaPtr rotate_copula(CopulaPtr base, int angle_degrees);  // 90, 180 or 270
CopulaPtr mixture_copula(std::vector<CopulaPtr> components, std::vector<double> weights);
// Khoudraji asymmetrisation against the independence copula:
// C(u,v) = C_base(u^{1-a1}, v^{1-a2}) u^{a1} v^{a2}.  Bases without
// closed-form cdf/h-functions (t family) are rejected.
CopulaPtr khoudraji_copula(CopulaPtr base, double a1, double a2);

// Equal-weight mixture of a copula and its 90/180/270-degree rotations.
CopulaPtr rotation_mixture(CopulaPtr base);

// Kendall's tau of the absolute spherical t copula as a function of nu,
// by quadrature (absolute error < 1e-4); strictly decreasing in nu.
double kendall_tau_ast(double nu);
// Numeric inverse on tau in (0.001, 0.999): |tau(nu_hat) - tau| < 1e-3.
double kendall_tau_ast_inverse(double tau);

// Archimedean tau maps used when building d-vines.
double clayton_tau(double theta);
double clayton_tau_inverse(double tau);
double gumbel_tau(double theta);
double gumbel_tau_inverse(double tau);
double joe_tau(double theta);
double joe_tau_inverse(double tau);

}  // namespace garchmimic
