#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "garchmimic/copula.hpp"
#include "garchmimic/grid_density.hpp"
#include "garchmimic/vtransform.hpp"

namespace garchmimic {

// Stationary simplified d-vine: one pair copula per lag, independence
// beyond the truncation level.  Every pair copula must expose usable
// h-functions (copulas wrapped in non-linear v-transforms do not and are
// rejected at construction).
class DVineSpec {
 public:
  explicit DVineSpec(std::vector<CopulaPtr> pair_copulas);

  std::size_t truncation() const { return pair_copulas_.size(); }
  const CopulaPtr& pair_copula(std::size_t lag) const;  // lag in 1..truncation
  const std::vector<CopulaPtr>& pair_copulas() const { return pair_copulas_; }

 private:
  std::vector<CopulaPtr> pair_copulas_;
};

// Log-density of the d-vine copula at a vector in (0,1)^n via the
// interlaced forward/backward Rosenblatt recursions; O(n * truncation)
// pair-copula evaluations.
double dvine_log_density(const DVineSpec& spec, std::span<const double> u);

// The driving uniforms w_t = R_{min(p,t-1)}(u_t; past) recovered from a
// realisation; inverse of the simulation map.
std::vector<double> dvine_forward_rosenblatt(const DVineSpec& spec, std::span<const double> u);

// Sequential inverse-Rosenblatt sampling of one path.
std::vector<double> dvine_simulate(const DVineSpec& spec, std::size_t n, std::uint64_t seed);

// vt-d-vine density: apply one linear v-transform elementwise, then
// evaluate the plain d-vine of the base sequence at the transformed vector.
double vt_dvine_log_density(const std::vector<CopulaPtr>& base_sequence, const VTransform& vt,
                            std::span<const double> u);

// Kendall partial autocorrelations of a Gaussian ARMA(1,1): acf ->
// Levinson-Durbin pacf -> tau = (2/pi) asin(pacf).
std::vector<double> kpacf_arma11(double ar, double ma, std::size_t lags);

enum class MimicFamily { joe, clayton180, ast };

// Per-lag base copulas with the requested Kendall taus, wrapped as
// linear-vt copulas with fulcrums (delta1, delta2).  Taus below 1e-3 give
// independence pairs.
DVineSpec build_garch_mimic(const std::vector<double>& taus, MimicFamily family, double delta1,
                            double delta2);

// Canonical v-shaped data transform implied by a linear v-transform and a
// marginal df: gradient one above the fulcrum quantile.
double canonical_transform(const GridDensity& fx, double delta, double x);

std::string dvine_spec_to_json(const DVineSpec& spec);
DVineSpec dvine_spec_from_json(const std::string& text);

}  // namespace garchmimic
