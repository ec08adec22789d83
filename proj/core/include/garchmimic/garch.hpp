#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "garchmimic/distributions.hpp"

namespace garchmimic {

// First-order GARCH-type process X_t = phi X_{t-1} + sigma_t eps_t with
// volatility function sigma(x,s)^2 = alpha0 + (alpha1 + gamma1 1{x<0}) x^2
// + beta1 s^2 and standardised innovations.
struct GarchSpec {
  GarchSpec(double alpha0, double alpha1, double beta1, double gamma1, double phi,
            InnovationDist innovations);

  double alpha0;
  double alpha1;
  double beta1;
  double gamma1;
  double phi;
  InnovationDist innovations;

  double sigma2(double x, double s) const {
    return alpha0 + (alpha1 + (x < 0.0 ? gamma1 : 0.0)) * x * x + beta1 * s * s;
  }
  double sigma(double x, double s) const;
  bool is_arch() const { return beta1 == 0.0; }
  bool symmetric() const { return gamma1 == 0.0 && phi == 0.0 && innovations.symmetric(); }
};

struct SimulatedPath {
  std::vector<double> x;
  std::vector<double> sigma;
};

// Simulates n observations after discarding burn_in, starting the volatility
// recursion at the deterministic fixed point.  Throws on nonstationary
// specs and aborts on |X_t| > 1e150.
SimulatedPath simulate(const GarchSpec& spec, std::size_t n, std::size_t burn_in,
                       std::uint64_t seed);

struct StationarityReport {
  bool stationary;
  double drift;  // E ln((alpha1 + gamma1 1{eps<0}) eps^2 + beta1)
};

StationarityReport check_stationarity(const GarchSpec& spec);

// Tail index of the stationary distribution: the positive root of
// E[ ((alpha1 + gamma1 1{eps<0}) eps^2 + beta1)^{zeta/2} ] = 1.
double tail_index(const GarchSpec& spec);

std::string garch_spec_to_json(const GarchSpec& spec);
GarchSpec garch_spec_from_json(const std::string& text);

}  // namespace garchmimic
