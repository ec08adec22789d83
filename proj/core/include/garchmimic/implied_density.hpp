#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "garchmimic/garch.hpp"
#include "garchmimic/grid_density.hpp"

namespace garchmimic {

struct MarginalGridOptions {
  int nodes = 2001;
  double tail_mass = 1e-8;       // truncate the stretched grid at this tail mass
  double tolerance = 1e-12;      // power-iteration sup-norm tolerance
  int max_iterations = 10000;
};

struct MarginalSolveInfo {
  int iterations = 0;
  bool converged = true;
  double boundary_mass = 0.0;  // pdf mass beyond the outermost grid cells
  bool boundary_warning = false;
};

// Stationary marginal of an ARCH(1)-type spec (beta1 = 0): the fixed-point
// integral equation is discretised with trapezoid weights on a stretched
// grid and solved by power iteration.
GridDensity solve_arch_marginal(const GarchSpec& spec, const MarginalGridOptions& options = {},
                                MarginalSolveInfo* info = nullptr);

// Marginal density of the volatility process of a GARCH spec (beta1 > 0),
// estimated from a long simulated path by a log-domain kernel density with
// support sigma > sigma_min = sqrt(alpha0/(1-beta1)).
class SigmaDensity {
 public:
  SigmaDensity(const GarchSpec& spec, std::size_t n_sim, std::uint64_t seed);

  double sigma_min() const { return sigma_min_; }
  double pdf(double s) const;
  // Quadrature nodes and weights for integrals against f_sigma.
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  double sigma_min_;
  std::vector<double> z_grid_, z_pdf_;  // kernel estimate on z = log(s^2 - sigma_min^2)
  std::vector<double> nodes_, weights_;
  MonotoneCubic z_interp_;
};

// Square grid of copula-density values at the open grid u_i = (i-0.5)/m.
struct CopulaGrid {
  int resolution = 0;
  std::vector<double> values;  // row-major: values[i*m + j] = c(u_i, v_j)

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * resolution + j]; }
  double node(int i) const { return (i + 0.5) / resolution; }

  // Mean absolute deviation from the independence density.
  double independence_distance() const;
  // Worst row/column midpoint sum deviation from uniform margins.
  double margin_deviation() const;
};

struct SymmetryReport {
  double h_deviation;            // c(u,v) vs c(u,1-v)
  double v_deviation;            // c(u,v) vs c(1-u,v)
  double radial_deviation;       // c(u,v) vs c(1-u,1-v)
  double exchange_deviation;     // c(u,v) vs c(v,u)
};

SymmetryReport symmetry_report(const CopulaGrid& grid);

// Implied stationary, joint, copula and conditional-copula densities of a
// first-order GARCH-type process.  ARCH specs (beta1 = 0) go through the
// integral-equation solver; GARCH specs integrate the volatility out against
// the estimated sigma density.
class ImpliedDensity {
 public:
  // ARCH route (beta1 = 0).
  explicit ImpliedDensity(const GarchSpec& spec, const MarginalGridOptions& options = {},
                          MarginalSolveInfo* info = nullptr);
  // GARCH route (beta1 > 0); n_sim draws feed the sigma-density estimate.
  ImpliedDensity(const GarchSpec& spec, std::size_t n_sim, std::uint64_t seed,
                 const MarginalGridOptions& options = {});

  const GarchSpec& spec() const { return spec_; }
  const GridDensity& marginal() const { return marginal_; }
  const SigmaDensity* sigma_density() const { return sigma_.get(); }

  // Joint density of two successive observations.
  double joint_pdf(double x, double y) const;

  // First-order copula density and its grid.
  double copula_density(double u, double v) const;
  CopulaGrid copula_grid(int resolution = 200) const;

  // Lag-2 conditional copula density given the middle observation at
  // quantile level w; identically one for ARCH-type specs.
  double conditional_copula_density(double u, double v, double w) const;
  CopulaGrid conditional_copula_grid(int resolution, double w) const;
  static bool conditional_region_reliable(double w) { return w >= 0.05 && w <= 0.95; }

  // The v-transform implied by a leverage ARCH spec with symmetric
  // innovations, evaluated through the solved marginal.
  double implied_leverage_vtransform(double u) const;

 private:
  struct ConditionalSlice;
  ConditionalSlice conditional_slice(double w) const;

  GarchSpec spec_;
  GridDensity marginal_;
  std::shared_ptr<const SigmaDensity> sigma_;
};

}  // namespace garchmimic
