#include "garchmimic/dvine.hpp"

#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "garchmimic/copula_spec.hpp"
#include "garchmimic/rng.hpp"
#include "garchmimic/vt_copula.hpp"

namespace garchmimic {

DVineSpec::DVineSpec(std::vector<CopulaPtr> pair_copulas)
    : pair_copulas_(std::move(pair_copulas)) {
  if (pair_copulas_.empty()) throw std::invalid_argument("DVineSpec: needs truncation >= 1");
  for (const auto& c : pair_copulas_) {
    if (!c) throw std::invalid_argument("DVineSpec: null pair copula");
    try {
      (void)c->h1(0.5, 0.5);
      (void)c->h2(0.5, 0.5);
    } catch (const std::logic_error&) {
      throw std::invalid_argument(
          "DVineSpec: pair copulas must expose h-functions; copulas wrapped in "
          "non-linear v-transforms are not admissible");
    }
  }
}

const CopulaPtr& DVineSpec::pair_copula(std::size_t lag) const {
  if (lag < 1 || lag > pair_copulas_.size())
    throw std::out_of_range("DVineSpec::pair_copula: lag outside 1..truncation");
  return pair_copulas_[lag - 1];
}

namespace {

// Shared sweep state: fwd[k] = R_k of the newest value, bwd[k] = B_k of the
// value k steps back, both conditioned on the values in between.
struct RosenblattSweep {
  std::vector<double> fwd, bwd;
};

}  // namespace

double dvine_log_density(const DVineSpec& spec, std::span<const double> u) {
  const std::size_t n = u.size();
  if (n < 2) throw std::invalid_argument("dvine_log_density: needs at least two coordinates");
  for (double x : u)
    if (!(x > 0.0 && x < 1.0))
      throw std::domain_error("dvine_log_density: coordinates must lie inside (0,1)");

  const std::size_t p = spec.truncation();
  RosenblattSweep prev{{u[0]}, {u[0]}};
  double log_density = 0.0;
  for (std::size_t t = 1; t < n; ++t) {
    const std::size_t depth = std::min(p, t);
    RosenblattSweep cur;
    cur.fwd.resize(depth + 1);
    cur.bwd.resize(depth + 1);
    cur.fwd[0] = u[t];
    cur.bwd[0] = u[t];
    for (std::size_t k = 1; k <= depth; ++k) {
      const BivariateCopula& ck = *spec.pair_copula(k);
      const double a = prev.bwd[k - 1];
      const double b = cur.fwd[k - 1];
      log_density += ck.log_pdf(a, b);
      cur.fwd[k] = ck.h1(a, b);
      cur.bwd[k] = ck.h2(a, b);
    }
    prev = std::move(cur);
  }
  return log_density;
}

std::vector<double> dvine_forward_rosenblatt(const DVineSpec& spec, std::span<const double> u) {
  const std::size_t n = u.size();
  const std::size_t p = spec.truncation();
  std::vector<double> w(n);
  if (n == 0) return w;
  w[0] = u[0];
  RosenblattSweep prev{{u[0]}, {u[0]}};
  for (std::size_t t = 1; t < n; ++t) {
    const std::size_t depth = std::min(p, t);
    RosenblattSweep cur;
    cur.fwd.resize(depth + 1);
    cur.bwd.resize(depth + 1);
    cur.fwd[0] = u[t];
    cur.bwd[0] = u[t];
    for (std::size_t k = 1; k <= depth; ++k) {
      const BivariateCopula& ck = *spec.pair_copula(k);
      const double a = prev.bwd[k - 1];
      cur.fwd[k] = ck.h1(a, cur.fwd[k - 1]);
      cur.bwd[k] = ck.h2(a, cur.fwd[k - 1]);
    }
    w[t] = cur.fwd[depth];
    prev = std::move(cur);
  }
  return w;
}

std::vector<double> dvine_simulate(const DVineSpec& spec, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t p = spec.truncation();
  std::vector<double> u(n);
  if (n == 0) return u;
  u[0] = rng.uniform();
  RosenblattSweep prev{{u[0]}, {u[0]}};
  for (std::size_t t = 1; t < n; ++t) {
    const std::size_t depth = std::min(p, t);
    double x = rng.uniform();
    for (std::size_t k = depth; k >= 1; --k)
      x = spec.pair_copula(k)->h1_inv(prev.bwd[k - 1], x);
    u[t] = x;
    RosenblattSweep cur;
    cur.fwd.resize(depth + 1);
    cur.bwd.resize(depth + 1);
    cur.fwd[0] = x;
    cur.bwd[0] = x;
    for (std::size_t k = 1; k <= depth; ++k) {
      const BivariateCopula& ck = *spec.pair_copula(k);
      const double a = prev.bwd[k - 1];
      cur.fwd[k] = ck.h1(a, cur.fwd[k - 1]);
      cur.bwd[k] = ck.h2(a, cur.fwd[k - 1]);
    }
    prev = std::move(cur);
  }
  return u;
}

double vt_dvine_log_density(const std::vector<CopulaPtr>& base_sequence, const VTransform& vt,
                            std::span<const double> u) {
  if (!vt.is_linear())
    throw std::invalid_argument("vt_dvine_log_density: the v-transform must be linear");
  std::vector<double> transformed(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double y = vt.eval(u[i]);
    // keep transformed coordinates inside the open square
    transformed[i] = std::min(std::max(y, 1e-15), 1.0 - 1e-15);
  }
  return dvine_log_density(DVineSpec(base_sequence), transformed);
}

std::vector<double> kpacf_arma11(double ar, double ma, std::size_t lags) {
  if (!(std::fabs(ar) < 1.0) || !(std::fabs(ma) < 1.0))
    throw std::invalid_argument("kpacf_arma11: needs |ar| < 1 and |ma| < 1 ");
  if (lags == 0) return {};

  // acf of the ARMA(1,1) process
  std::vector<double> rho(lags + 1, 1.0);
  if (lags >= 1) {
    rho[1] = (1.0 + ar * ma) * (ar + ma) / (1.0 + 2.0 * ar * ma + ma * ma);
    for (std::size_t k = 2; k <= lags; ++k) rho[k] = ar * rho[k - 1];
  }

  // Levinson-Durbin for the partial autocorrelations
  std::vector<double> taus(lags);
  std::vector<double> phi(lags + 1, 0.0), prev(lags + 1, 0.0);
  double denominator = 1.0;
  for (std::size_t k = 1; k <= lags; ++k) {
    double numerator = rho[k];
    for (std::size_t j = 1; j < k; ++j) numerator -= prev[j] * rho[k - j];
    const double pacf = numerator / denominator;
    phi = prev;
    phi[k] = pacf;
    for (std::size_t j = 1; j < k; ++j) phi[j] = prev[j] - pacf * prev[k - j];
    denominator *= (1.0 - pacf * pacf);
    prev = phi;
    taus[k - 1] = 2.0 / M_PI * std::asin(pacf);
  }
  return taus;
}

DVineSpec build_garch_mimic(const std::vector<double>& taus, MimicFamily family, double delta1,
                            double delta2) {
  std::vector<CopulaPtr> pairs;
  pairs.reserve(taus.size());
  for (double tau : taus) {
    if (!(tau >= 0.0 && tau < 1.0))
      throw std::domain_error("build_garch_mimic: taus must lie in [0,1)");
    if (tau < 1e-3) {
      pairs.push_back(independence_copula());
      continue;
    }
    CopulaPtr base;
    switch (family) {
      case MimicFamily::joe:
        base = joe_copula(joe_tau_inverse(tau));
        break;
      case MimicFamily::clayton180:
        base = rotate_copula(clayton_copula(clayton_tau_inverse(tau)), 180);
        break;
      case MimicFamily::ast:
        base = abs_spherical_t_copula(kendall_tau_ast_inverse(tau));
        break;
    }
    pairs.push_back(linear_vt_copula(std::move(base), delta1, delta2));
  }
  return DVineSpec(std::move(pairs));
}

double canonical_transform(const GridDensity& fx, double delta, double x) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("canonical_transform: fulcrum outside (0,1)");
  const double mu = fx.quantile(delta);
  if (x > mu) return x - mu;
  const VTransform vt = VTransform::linear(delta);
  const double p = std::min(std::max(fx.cdf(x), 1e-15), delta);
  return fx.quantile(std::min(p + vt.eval(p), 1.0)) - mu;
}

std::string dvine_spec_to_json(const DVineSpec& spec) {
  nlohmann::json j;
  j["schema"] = "garchmimic/1";
  j["type"] = "dvine";
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& c : spec.pair_copulas())
    pairs.push_back(nlohmann::json::parse(copula_spec_to_json(c->spec(), false)));
  j["pair_copulas"] = pairs;
  return j.dump(2);
}

DVineSpec dvine_spec_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("type", "") != "dvine")
    throw std::invalid_argument("dvine spec: expected a document with type = dvine");
  std::vector<CopulaPtr> pairs;
  for (const auto& node : j.at("pair_copulas"))
    pairs.push_back(make_copula(copula_spec_from_json(node.dump())));
  return DVineSpec(std::move(pairs));
}

}  // namespace garchmimic
