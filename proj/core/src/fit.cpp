#include "garchmimic/fit.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "garchmimic/nelder_mead.hpp"
#include "garchmimic/parallel.hpp"
#include "garchmimic/stats.hpp"
#include "garchmimic/vt_copula.hpp"

namespace garchmimic {

PseudoSample pseudo_observations(std::span<const double> series, std::size_t lag) {
  if (series.size() < lag + 10)
    throw std::invalid_argument("pseudo_observations: series too short for the requested lag");
  const std::size_t n = series.size() - lag;
  std::vector<double> first(series.begin(), series.begin() + n);
  std::vector<double> second(series.begin() + lag, series.end());
  const std::vector<double> ru = average_ranks(first);
  const std::vector<double> rv = average_ranks(second);
  PseudoSample out;
  out.u.resize(n);
  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.u[i] = ru[i] / (n + 1.0);
    out.v[i] = rv[i] / (n + 1.0);
    if (ru[i] != std::floor(ru[i]) || rv[i] != std::floor(rv[i])) out.had_ties = true;
  }
  return out;
}

ParamTransform ParamTransform::log_above(double floor) {
  ParamTransform t;
  t.kind_ = Kind::log_above;
  t.lo_ = floor;
  return t;
}

ParamTransform ParamTransform::logit(double lo, double hi) {
  ParamTransform t;
  t.kind_ = Kind::logit;
  t.lo_ = lo;
  t.hi_ = hi;
  return t;
}

double ParamTransform::to_natural(double z) const {
  switch (kind_) {
    case Kind::log_above:
      return lo_ + std::exp(std::clamp(z, -700.0, 700.0));
    case Kind::logit:
      return lo_ + (hi_ - lo_) / (1.0 + std::exp(-std::clamp(z, -40.0, 40.0)));
  }
  return z;
}

double ParamTransform::to_unconstrained(double x) const {
  switch (kind_) {
    case Kind::log_above:
      return std::log(std::max(x - lo_, 1e-300));
    case Kind::logit: {
      const double t = std::clamp((x - lo_) / (hi_ - lo_), 1e-12, 1.0 - 1e-12);
      return std::log(t / (1.0 - t));
    }
  }
  return x;
}

namespace {

double log_likelihood(const PseudoSample& sample, const BivariateCopula& copula) {
  double total = 0.0;
  for (std::size_t i = 0; i < sample.u.size(); ++i) {
    const double lp = copula.log_pdf(sample.u[i], sample.v[i]);
    if (!std::isfinite(lp)) return -INFINITY;
    total += lp;
  }
  return total;
}

}  // namespace

FitResult fit_pml(const PseudoSample& sample, const FitTemplate& tmpl, const FitOptions& options) {
  FitResult result;
  result.name = tmpl.name;
  result.n_params = tmpl.n_params();

  if (tmpl.n_params() == 0) {
    result.copula = tmpl.build({});
    result.params = {};
    result.loglik = log_likelihood(sample, *result.copula);
    result.aic = -2.0 * result.loglik;
    result.converged = true;
    return result;
  }

  std::vector<double> z0(tmpl.n_params());
  for (std::size_t i = 0; i < z0.size(); ++i)
    z0[i] = tmpl.transforms[i].to_unconstrained(tmpl.start[i]);

  auto natural = [&tmpl](const std::vector<double>& z) {
    std::vector<double> x(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) x[i] = tmpl.transforms[i].to_natural(z[i]);
    return x;
  };

  auto objective = [&](const std::vector<double>& z) {
    try {
      const CopulaPtr copula = tmpl.build(natural(z));
      const double ll = log_likelihood(sample, *copula);
      return std::isfinite(ll) ? -ll : 1e12;
    } catch (const std::exception&) {
      return 1e12;
    }
  };

  NelderMeadOptions nm;
  nm.tolerance = options.tolerance;
  nm.max_evaluations = options.max_evaluations;

  double best_value = INFINITY;
  std::vector<double> best_z;
  bool any_converged = false;
  int evaluations = 0;
  for (int s = 0; s < options.starts; ++s) {
    std::vector<double> z = z0;
    const double shift = s == 0 ? 0.0 : (s % 2 == 1 ? 0.8 * s : -0.8 * s);
    for (double& zi : z) zi += shift;
    const NelderMeadResult nmr = nelder_mead_minimize(objective, z, nm);
    evaluations += nmr.evaluations;
    any_converged |= nmr.converged;
    if (nmr.value < best_value) {
      best_value = nmr.value;
      best_z = nmr.x;
    }
  }

  result.params = natural(best_z);
  result.copula = tmpl.build(result.params);
  result.loglik = -best_value;
  result.aic = 2.0 * static_cast<double>(result.n_params) - 2.0 * result.loglik;
  result.converged = any_converged && best_value < 1e11;
  result.iterations = evaluations;
  return result;
}

std::vector<ComparisonRow> compare_models(const PseudoSample& sample,
                                          const std::vector<FitTemplate>& zoo,
                                          const FitOptions& options) {
  if (zoo.size() < 2) throw std::invalid_argument("compare_models: needs at least two models");
  std::vector<ComparisonRow> rows(zoo.size());
  parallel_for(zoo.size(), [&](std::size_t i) {
    ComparisonRow& row = rows[i];
    row.name = zoo[i].name;
    row.n_params = zoo[i].n_params();
    try {
      const FitResult fit = fit_pml(sample, zoo[i], options);
      row.loglik = fit.loglik;
      row.aic = fit.aic;
      row.params = fit.params;
      row.converged = fit.converged;
    } catch (const std::exception&) {
      row.aic = INFINITY;
      row.converged = false;
    }
  });
  std::sort(rows.begin(), rows.end(),
            [](const ComparisonRow& a, const ComparisonRow& b) { return a.aic < b.aic; });
  const double best = rows.front().aic;
  for (ComparisonRow& row : rows) row.delta_aic = row.aic - best;
  return rows;
}

namespace {

const VTransform kSymVt = VTransform::linear(0.5);

enum class Base { ast, clayton180, clayton, gumbel, joe };

CopulaPtr base_copula(Base base, double par) {
  switch (base) {
    case Base::ast:
      return abs_spherical_t_copula(par);
    case Base::clayton180:
      return rotate_copula(clayton_copula(par), 180);
    case Base::clayton:
      return clayton_copula(par);
    case Base::gumbel:
      return gumbel_copula(par);
    case Base::joe:
      return joe_copula(par);
  }
  return nullptr;
}

ParamTransform base_transform(Base base) {
  switch (base) {
    case Base::ast:
    case Base::clayton180:
    case Base::clayton:
      return ParamTransform::log_above(0.0);
    case Base::gumbel:
    case Base::joe:
      return ParamTransform::log_above(1.0);
  }
  return ParamTransform::log_above(0.0);
}

double base_start(Base base) { return base == Base::ast ? 4.0 : 2.0; }

// iv-X: both margins through the symmetric linear v-transform.  The ast
// case is the spherical t copula itself.
FitTemplate iv_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base)};
  t.start = {base_start(base)};
  t.build = [base](const std::vector<double>& p) {
    if (base == Base::ast) return spherical_t_copula(p[0]);
    return linear_vt_copula(base_copula(base, p[0]), 0.5, 0.5);
  };
  return t;
}

// mix-X: equal mixture of the family and its three rotations.
FitTemplate mix_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base)};
  t.start = {base_start(base)};
  t.build = [base](const std::vector<double>& p) {
    return rotation_mixture(base_copula(base, p[0]));
  };
  return t;
}

// mix-t: equal mixture of t copulas with correlations +rho and -rho.
FitTemplate mix_t_template() {
  FitTemplate t;
  t.name = "mix-t";
  t.transforms = {ParamTransform::log_above(0.0), ParamTransform::logit(0.0, 0.99)};
  t.start = {4.0, 0.2};
  t.build = [](const std::vector<double>& p) {
    return mixture_copula({student_t_copula(p[1], p[0]), student_t_copula(-p[1], p[0])},
                          {0.5, 0.5});
  };
  return t;
}

// mix-K-X / iv-K-X: Khoudraji extension before mixing or v-transforming.
FitTemplate mix_k_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base), ParamTransform::logit(0.0, 1.0),
                  ParamTransform::logit(0.0, 1.0)};
  t.start = {base_start(base), 0.5, 0.5};
  t.build = [base](const std::vector<double>& p) {
    return rotation_mixture(khoudraji_copula(base_copula(base, p[0]), p[1], p[2]));
  };
  return t;
}

FitTemplate iv_k_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base), ParamTransform::logit(0.0, 1.0),
                  ParamTransform::logit(0.0, 1.0)};
  t.start = {base_start(base), 0.5, 0.5};
  t.build = [base](const std::vector<double>& p) {
    return linear_vt_copula(khoudraji_copula(base_copula(base, p[0]), p[1], p[2]), 0.5, 0.5);
  };
  return t;
}

// iva-X: asymmetric power v-transform (fulcrum 0.5, free kappa) on the
// first argument, symmetric linear on the second.
FitTemplate iva_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base), ParamTransform::log_above(0.0)};
  t.start = {base_start(base), 1.2};
  t.build = [base](const std::vector<double>& p) {
    return inverse_vt_copula(base_copula(base, p[0]), VTransform::power(0.5, p[1]), kSymVt);
  };
  return t;
}

FitTemplate iva_k_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base), ParamTransform::log_above(0.0),
                  ParamTransform::logit(0.0, 1.0), ParamTransform::logit(0.0, 1.0)};
  t.start = {base_start(base), 1.2, 0.5, 0.5};
  t.build = [base](const std::vector<double>& p) {
    return inverse_vt_copula(khoudraji_copula(base_copula(base, p[0]), p[2], p[3]),
                             VTransform::power(0.5, p[1]), kSymVt);
  };
  return t;
}

// ivl-ivl-X: two linear v-transforms with free fulcrums.
FitTemplate ivl_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base), ParamTransform::logit(0.01, 0.99),
                  ParamTransform::logit(0.01, 0.99)};
  t.start = {base_start(base), 0.45, 0.55};
  t.build = [base](const std::vector<double>& p) {
    return linear_vt_copula(base_copula(base, p[0]), p[1], p[2]);
  };
  return t;
}

FitTemplate ivl_k_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base), ParamTransform::logit(0.01, 0.99),
                  ParamTransform::logit(0.01, 0.99), ParamTransform::logit(0.0, 1.0),
                  ParamTransform::logit(0.0, 1.0)};
  t.start = {base_start(base), 0.45, 0.55, 0.5, 0.5};
  t.build = [base](const std::vector<double>& p) {
    return linear_vt_copula(khoudraji_copula(base_copula(base, p[0]), p[3], p[4]), p[1], p[2]);
  };
  return t;
}

// iv2-iv2-X: two free two-parameter v-transforms (delta, kappa) each.
FitTemplate iv2_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base), ParamTransform::logit(0.01, 0.99),
                  ParamTransform::log_above(0.0), ParamTransform::logit(0.01, 0.99),
                  ParamTransform::log_above(0.0)};
  t.start = {base_start(base), 0.45, 1.2, 0.55, 1.2};
  t.build = [base](const std::vector<double>& p) {
    return inverse_vt_copula(base_copula(base, p[0]), VTransform::power(p[1], p[2]),
                             VTransform::power(p[3], p[4]));
  };
  return t;
}

FitTemplate iv2_k_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base),          ParamTransform::logit(0.01, 0.99),
                  ParamTransform::log_above(0.0), ParamTransform::logit(0.01, 0.99),
                  ParamTransform::log_above(0.0), ParamTransform::logit(0.0, 1.0),
                  ParamTransform::logit(0.0, 1.0)};
  t.start = {base_start(base), 0.45, 1.2, 0.55, 1.2, 0.5, 0.5};
  t.build = [base](const std::vector<double>& p) {
    return inverse_vt_copula(khoudraji_copula(base_copula(base, p[0]), p[5], p[6]),
                             VTransform::power(p[1], p[2]), VTransform::power(p[3], p[4]));
  };
  return t;
}

FitTemplate independence_template() {
  FitTemplate t;
  t.name = "independence";
  t.build = [](const std::vector<double>&) { return independence_copula(); };
  return t;
}

FitTemplate plain_family_template(const std::string& name, Base base) {
  FitTemplate t;
  t.name = name;
  t.transforms = {base_transform(base)};
  t.start = {base_start(base)};
  t.build = [base](const std::vector<double>& p) { return base_copula(base, p[0]); };
  return t;
}

}  // namespace

std::vector<FitTemplate> table_zoo(const std::string& name) {
  if (name == "table1")
    return {iv_template("iv-ast", Base::ast),
            mix_t_template(),
            mix_template("mix-Clayton", Base::clayton),
            mix_template("mix-Gumbel", Base::gumbel),
            mix_template("mix-Joe", Base::joe),
            iv_template("iv-Clayton-180", Base::clayton180),
            iv_template("iv-Gumbel", Base::gumbel),
            iv_template("iv-Joe", Base::joe),
            mix_k_template("mix-K-Clayton", Base::clayton),
            mix_k_template("mix-K-Gumbel", Base::gumbel),
            mix_k_template("mix-K-Joe", Base::joe),
            iv_k_template("iv-K-Clayton-180", Base::clayton180),
            iv_k_template("iv-K-Gumbel", Base::gumbel),
            iv_k_template("iv-K-Joe", Base::joe)};
  if (name == "table2")
    return {iv_template("iv-ast", Base::ast),
            iv_template("iv-Clayton-180", Base::clayton180),
            iv_template("iv-Joe", Base::joe),
            iva_template("iva-ast", Base::ast),
            iva_template("iva-Clayton-180", Base::clayton180),
            iva_template("iva-Joe", Base::joe),
            iv_k_template("iv-K-Clayton-180", Base::clayton180),
            iv_k_template("iv-K-Joe", Base::joe),
            iva_k_template("iva-K-Clayton-180", Base::clayton180),
            iva_k_template("iva-K-Joe", Base::joe)};
  if (name == "table3")
    return {iv_template("iv-ast", Base::ast),
            iv_template("iv-Clayton-180", Base::clayton180),
            iv_template("iv-Joe", Base::joe),
            ivl_template("ivl-ivl-ast", Base::ast),
            ivl_template("ivl-ivl-Clayton-180", Base::clayton180),
            ivl_template("ivl-ivl-Joe", Base::joe),
            ivl_k_template("ivl-ivl-K-Clayton-180", Base::clayton180),
            ivl_k_template("ivl-ivl-K-Joe", Base::joe),
            iv2_template("iv2-iv2-ast", Base::ast),
            iv2_template("iv2-iv2-Clayton-180", Base::clayton180),
            iv2_template("iv2-iv2-Joe", Base::joe),
            iv2_k_template("iv2-iv2-K-Clayton-180", Base::clayton180),
            iv2_k_template("iv2-iv2-K-Joe", Base::joe)};
  throw std::invalid_argument("table_zoo: unknown zoo " + name);
}

std::optional<FitTemplate> find_template(const std::string& name) {
  if (name == "independence") return independence_template();
  if (name == "gumbel") return plain_family_template("gumbel", Base::gumbel);
  if (name == "clayton") return plain_family_template("clayton", Base::clayton);
  if (name == "joe") return plain_family_template("joe", Base::joe);
  for (const char* zoo : {"table1", "table2", "table3"})
    for (const FitTemplate& t : table_zoo(zoo))
      if (t.name == name) return t;
  return std::nullopt;
}

}  // namespace garchmimic
