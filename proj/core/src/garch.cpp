#include "garchmimic/garch.hpp"

#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "garchmimic/quadrature.hpp"

namespace garchmimic {

namespace {

// Quadrature table for expectations of functions of A(eps) =
// (alpha1 + gamma1 1{eps<0}) eps^2 + beta1, built once in probability space
// with dyadic grading toward the heavy tails and the kink at eps = 0.
struct MultiplierTable {
  std::vector<double> a;  // A(eps) at the nodes
  std::vector<double> w;  // probability weights
};

MultiplierTable multiplier_table(const GarchSpec& spec) {
  MultiplierTable table;
  const auto& rule = gauss_legendre(16);
  auto add = [&](double eps, double w) {
    const double mult = spec.alpha1 + (eps < 0.0 ? spec.gamma1 : 0.0);
    const double weight = w * spec.innovations.pdf(eps);
    if (weight > 0.0) {
      table.a.push_back(mult * eps * eps + spec.beta1);
      table.w.push_back(weight);
    }
  };
  auto panel = [&](double lo, double hi, auto&& node_fn) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      node_fn(c + h * rule.nodes[i], h * rule.weights[i]);
  };
  for (const double sign : {-1.0, 1.0}) {
    // |eps| in (0,1]: dyadic grading toward zero covers the log singularity
    // of ln A(eps) in the ARCH case.
    double hi = 1.0;
    for (int k = 0; k < 54; ++k) {
      panel(0.5 * hi, hi, [&](double e, double w) { add(sign * e, w); });
      hi *= 0.5;
    }
    // |eps| in (1, inf): substitute t = 1/eps so the power-law tail becomes
    // an endpoint singularity handled by the same grading.
    hi = 1.0;
    for (int k = 0; k < 150; ++k) {
      panel(0.5 * hi, hi, [&](double t, double w) { add(sign / t, w / (t * t)); });
      hi *= 0.5;
    }
  }
  return table;
}

}  // namespace

GarchSpec::GarchSpec(double a0, double a1, double b1, double g1, double ph,
                     InnovationDist innov)
    : alpha0(a0), alpha1(a1), beta1(b1), gamma1(g1), phi(ph), innovations(std::move(innov)) {
  if (!(alpha0 > 0.0)) throw std::invalid_argument("GarchSpec: alpha0 must be positive");
  if (alpha1 < 0.0 || beta1 < 0.0 || gamma1 < 0.0)
    throw std::invalid_argument("GarchSpec: alpha1, beta1, gamma1 must be nonnegative");
}

double GarchSpec::sigma(double x, double s) const { return std::sqrt(sigma2(x, s)); }

SimulatedPath simulate(const GarchSpec& spec, std::size_t n, std::size_t burn_in,
                       std::uint64_t seed) {
  if (!check_stationarity(spec).stationary)
    throw std::runtime_error("simulate: spec fails the strict-stationarity condition");
  Rng rng(seed);
  SimulatedPath path;
  path.x.reserve(n);
  path.sigma.reserve(n);

  const double persist = spec.alpha1 + spec.beta1;
  double s = persist < 1.0 ? std::sqrt(spec.alpha0 / (1.0 - persist)) : std::sqrt(spec.alpha0);
  double x = s * spec.innovations.sample(rng);
  for (std::size_t t = 0; t < burn_in + n; ++t) {
    s = spec.sigma(x, s);
    x = spec.phi * x + s * spec.innovations.sample(rng);
    if (std::fabs(x) > 1e150) throw std::runtime_error("simulate: overflow guard tripped");
    if (t >= burn_in) {
      path.x.push_back(x);
      path.sigma.push_back(s);
    }
  }
  return path;
}

StationarityReport check_stationarity(const GarchSpec& spec) {
  if (spec.alpha1 + spec.gamma1 == 0.0) {
    // A(eps) degenerates to beta1.
    const double drift = spec.beta1 > 0.0 ? std::log(spec.beta1) : -INFINITY;
    return {drift < 0.0, drift};
  }
  const MultiplierTable table = multiplier_table(spec);
  double drift = 0.0;
  for (std::size_t i = 0; i < table.a.size(); ++i) drift += table.w[i] * std::log(table.a[i]);
  return {drift < 0.0, drift};
}

double tail_index(const GarchSpec& spec) {
  if (!(spec.alpha1 > 0.0)) throw std::invalid_argument("tail_index: needs alpha1 > 0");
  if (!check_stationarity(spec).stationary)
    throw std::runtime_error("tail_index: spec is not strictly stationary");

  const MultiplierTable table = multiplier_table(spec);
  auto g = [&table](double zeta) {
    double m = 0.0;
    for (std::size_t i = 0; i < table.a.size(); ++i)
      m += table.w[i] * std::pow(table.a[i], 0.5 * zeta);
    return m - 1.0;
  };

  // g(0) = 0 and g dips negative under stationarity; bracket the positive root.
  double lo = 0.0, hi = 0.25;
  const double zeta_cap = 200.0;
  while (g(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > zeta_cap) throw std::runtime_error("tail_index: no sign change below zeta = 200");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double val = g(mid);
    if (std::fabs(val) < 1e-7 || hi - lo < 1e-12) return mid;
    if (val < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::string garch_spec_to_json(const GarchSpec& spec) {
  nlohmann::json j;
  j["schema"] = "garchmimic/1";
  j["alpha0"] = spec.alpha0;
  j["alpha1"] = spec.alpha1;
  j["beta1"] = spec.beta1;
  j["gamma1"] = spec.gamma1;
  j["phi"] = spec.phi;
  switch (spec.innovations.law()) {
    case InnovationLaw::gaussian:
      j["dist"] = "gauss";
      break;
    case InnovationLaw::student_t:
      j["dist"] = "t";
      j["nu"] = spec.innovations.nu();
      break;
    case InnovationLaw::skew_t:
      j["dist"] = "skewt";
      j["nu"] = spec.innovations.nu();
      j["lambda"] = spec.innovations.lambda();
      break;
  }
  return j.dump(2);
}

GarchSpec garch_spec_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const std::string dist = j.at("dist").get<std::string>();
  InnovationDist innov = InnovationDist::gaussian();
  if (dist == "t")
    innov = InnovationDist::student(j.at("nu").get<double>());
  else if (dist == "skewt")
    innov = InnovationDist::skew_student(j.at("nu").get<double>(), j.at("lambda").get<double>());
  else if (dist != "gauss")
    throw std::invalid_argument("garch spec: unknown innovation law " + dist);
  return GarchSpec(j.at("alpha0").get<double>(), j.value("alpha1", 0.0), j.value("beta1", 0.0),
                   j.value("gamma1", 0.0), j.value("phi", 0.0), std::move(innov));
}

}  // namespace garchmimic
