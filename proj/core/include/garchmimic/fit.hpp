#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "garchmimic/copula.hpp"

namespace garchmimic {

// Rank-transformed lagged pairs on the open unit square.
struct PseudoSample {
  std::vector<double> u, v;
  bool had_ties = false;
};

// Pairs (x_t, x_{t+lag}) with each margin mapped to rank/(n+1).
PseudoSample pseudo_observations(std::span<const double> series, std::size_t lag);

// Box-constraint transform for one free parameter.
class ParamTransform {
 public:
  static ParamTransform log_above(double floor);          // natural in (floor, inf)
  static ParamTransform logit(double lo, double hi);      // natural in (lo, hi)
  double to_natural(double z) const;
  double to_unconstrained(double x) const;

 private:
  enum class Kind { log_above, logit } kind_;
  double lo_ = 0.0, hi_ = 0.0;
};

// A named copula family with free parameters: builder from natural-space
// parameters plus the transforms and starting point used by the optimiser.
struct FitTemplate {
  std::string name;
  std::vector<ParamTransform> transforms;
  std::vector<double> start;  // natural space
  std::function<CopulaPtr(const std::vector<double>&)> build;

  std::size_t n_params() const { return transforms.size(); }
};

struct FitResult {
  std::string name;
  CopulaPtr copula;
  std::vector<double> params;
  double loglik = 0.0;
  double aic = 0.0;
  std::size_t n_params = 0;
  bool converged = false;
  int iterations = 0;
};

struct FitOptions {
  double tolerance = 1e-8;
  int max_evaluations = 2000;
  int starts = 3;
};

// Pseudo-maximum-likelihood fit: Nelder-Mead on transformed parameters,
// multi-start, best kept.
FitResult fit_pml(const PseudoSample& sample, const FitTemplate& tmpl,
                  const FitOptions& options = {});

struct ComparisonRow {
  std::string name;
  std::size_t n_params = 0;
  double loglik = 0.0;
  double aic = 0.0;
  double delta_aic = 0.0;
  std::vector<double> params;
  bool converged = false;
};

// Fits every template (concurrently) and reports AIC deltas from the best
// model; per-model failures are recorded in the row, not fatal.
std::vector<ComparisonRow> compare_models(const PseudoSample& sample,
                                          const std::vector<FitTemplate>& zoo,
                                          const FitOptions& options = {});

// The predefined model zoos: "table1" (jointly symmetric), "table2"
// (h-symmetric with asymmetric v-transforms), "table3" (fully asymmetric
// v-transform constructions).
std::vector<FitTemplate> table_zoo(const std::string& name);

// Look up one template by name across the three zoos.
std::optional<FitTemplate> find_template(const std::string& name);

}  // namespace garchmimic
