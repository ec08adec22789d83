#include "garchmimic/copula.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "garchmimic/distributions.hpp"
#include "garchmimic/quadrature.hpp"

namespace garchmimic {

namespace {

constexpr double kEdge = 1e-14;

double clip01(double x) { return std::min(1.0 - kEdge, std::max(kEdge, x)); }

double logsumexp2(double a, double b) {
  const double m = std::max(a, b);
  if (m == -INFINITY) return m;
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace

double CopulaSpec::param(const std::string& name) const {
  for (const auto& [key, value] : params)
    if (key == name) return value;
  throw std::invalid_argument("CopulaSpec: missing parameter " + name);
}

bool CopulaSpec::has_param(const std::string& name) const {
  for (const auto& [key, value] : params)
    if (key == name) return true;
  return false;
}

double BivariateCopula::pdf(double u, double v, bool* clamped) const {
  double lp = log_pdf(u, v);
  const bool hit = !(lp < kLogDensityClamp);
  if (hit) lp = kLogDensityClamp;
  if (clamped) *clamped = hit;
  return std::exp(lp);
}

double BivariateCopula::h1_inv(double u, double p) const {
  double lo = kEdge, hi = 1.0 - kEdge;
  if (h1(u, lo) >= p) return lo;
  if (h1(u, hi) <= p) return hi;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (h1(u, mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  double v = 0.5 * (lo + hi);
  for (int it = 0; it < 12; ++it) {
    const double f = h1(u, v) - p;
    if (std::fabs(f) < 1e-11) break;
    const double d = std::exp(log_pdf(u, v));
    if (!(d > 0.0)) break;
    v = std::clamp(v - f / d, lo, hi);
  }
  return v;
}

double BivariateCopula::h2_inv(double p, double v) const {
  double lo = kEdge, hi = 1.0 - kEdge;
  if (h2(lo, v) >= p) return lo;
  if (h2(hi, v) <= p) return hi;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (h2(mid, v) < p)
      lo = mid;
    else
      hi = mid;
  }
  double u = 0.5 * (lo + hi);
  for (int it = 0; it < 12; ++it) {
    const double f = h2(u, v) - p;
    if (std::fabs(f) < 1e-11) break;
    const double d = std::exp(log_pdf(u, v));
    if (!(d > 0.0)) break;
    u = std::clamp(u - f / d, lo, hi);
  }
  return u;
}

SamplePairs BivariateCopula::sample(std::size_t n, Rng& rng) const {
  SamplePairs out;
  out.u.resize(n);
  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    const double w = rng.uniform();
    out.u[i] = u;
    out.v[i] = h1_inv(u, w);
  }
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Families

class IndependenceCopula final : public BivariateCopula {
 public:
  double cdf(double u, double v) const override { return u * v; }
  double log_pdf(double, double) const override { return 0.0; }
  double h1(double, double v) const override { return v; }
  double h2(double u, double) const override { return u; }
  double h1_inv(double, double p) const override { return p; }
  double h2_inv(double p, double) const override { return p; }
  CopulaSpec spec() const override { return {"independence", {}, {}, {}}; }
};

class GaussianCopula final : public BivariateCopula {
 public:
  explicit GaussianCopula(double rho) : rho_(rho) {
    if (!(rho > -1.0 && rho < 1.0))
      throw std::invalid_argument("gaussian copula: rho must lie in (-1,1)");
    s_ = std::sqrt(1.0 - rho_ * rho_);
  }

  double cdf(double u, double v) const override {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    const double y = normal_quantile(v);
    const auto& rule = gauss_legendre(256);
    return gl_integrate(
        [&](double w) { return normal_cdf((y - rho_ * normal_quantile(clip01(w))) / s_); }, 0.0,
        u, rule);
  }

  double log_pdf(double u, double v) const override {
    const double x = normal_quantile(clip01(u));
    const double y = normal_quantile(clip01(v));
    return -std::log(s_) -
           (rho_ * rho_ * (x * x + y * y) - 2.0 * rho_ * x * y) / (2.0 * s_ * s_);
  }

  double h1(double u, double v) const override {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double x = normal_quantile(clip01(u));
    const double y = normal_quantile(clip01(v));
    return normal_cdf((y - rho_ * x) / s_);
  }
  double h2(double u, double v) const override { return h1(v, u); }
  double h1_inv(double u, double p) const override {
    const double x = normal_quantile(clip01(u));
    return normal_cdf(s_ * normal_quantile(clip01(p)) + rho_ * x);
  }
  double h2_inv(double p, double v) const override { return h1_inv(v, p); }
  bool has_analytic_cdf() const override { return false; }
  CopulaSpec spec() const override { return {"gaussian", {{"rho", rho_}}, {}, {}}; }

 private:
  double rho_, s_;
};

class StudentTCopula final : public BivariateCopula {
 public:
  StudentTCopula(double rho, double nu, int cdf_nodes)
      : rho_(rho), nu_(nu), cdf_nodes_(cdf_nodes) {
    if (!(rho > -1.0 && rho < 1.0))
      throw std::invalid_argument("t copula: rho must lie in (-1,1)");
    if (!(nu > 0.0)) throw std::invalid_argument("t copula: nu must be positive");
    s2_ = 1.0 - rho_ * rho_;
    log_norm_ = std::lgamma(0.5 * (nu_ + 2.0)) - std::lgamma(0.5 * nu_) -
                std::log(nu_ * M_PI) - 0.5 * std::log(s2_);
  }

  // Given T1 = x, T2 is scaled t with nu+1 degrees of freedom; the cdf is a
  // one-dimensional Gauss-Legendre integral of that conditional law.
  double cdf(double u, double v) const override {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    const double y = student_t_quantile(v, nu_);
    const auto& rule = gauss_legendre(cdf_nodes_);
    return gl_integrate([&](double w) { return cond_cdf(student_t_quantile(clip01(w), nu_), y); },
                        0.0, u, rule);
  }

  double log_pdf(double u, double v) const override {
    const double x = student_t_quantile(clip01(u), nu_);
    const double y = student_t_quantile(clip01(v), nu_);
    const double q = (x * x - 2.0 * rho_ * x * y + y * y) / s2_;
    return log_norm_ - 0.5 * (nu_ + 2.0) * std::log1p(q / nu_) - student_t_log_pdf(x, nu_) -
           student_t_log_pdf(y, nu_);
  }

  double h1(double u, double v) const override {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double x = student_t_quantile(clip01(u), nu_);
    const double y = student_t_quantile(clip01(v), nu_);
    return cond_cdf(x, y);
  }
  double h2(double u, double v) const override { return h1(v, u); }

  double h1_inv(double u, double p) const override {
    const double x = student_t_quantile(clip01(u), nu_);
    const double y = rho_ * x + cond_scale(x) * student_t_quantile(clip01(p), nu_ + 1.0);
    return student_t_cdf(y, nu_);
  }
  double h2_inv(double p, double v) const override { return h1_inv(v, p); }
  bool has_analytic_cdf() const override { return false; }
  CopulaSpec spec() const override {
    return {"student_t", {{"rho", rho_}, {"nu", nu_}}, {}, {}};
  }

 private:
  double cond_scale(double x) const { return std::sqrt((nu_ + x * x) * s2_ / (nu_ + 1.0)); }
  double cond_cdf(double x, double y) const {
    return student_t_cdf((y - rho_ * x) / cond_scale(x), nu_ + 1.0);
  }

  double rho_, nu_;
  int cdf_nodes_;
  double s2_, log_norm_;
};

// Copula of componentwise absolute values of a spherical t vector:
// C(u,v) = 4 C^t((1+u)/2, (1+v)/2) - u - v - 1.
class AbsSphericalTCopula final : public BivariateCopula {
 public:
  AbsSphericalTCopula(double nu, int cdf_nodes) : base_(0.0, nu, cdf_nodes), nu_(nu) {}

  double cdf(double u, double v) const override {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    return 4.0 * base_.cdf(0.5 * (1.0 + u), 0.5 * (1.0 + v)) - u - v - 1.0;
  }
  double log_pdf(double u, double v) const override {
    return base_.log_pdf(0.5 * (1.0 + u), 0.5 * (1.0 + v));
  }
  double h1(double u, double v) const override {
    return 2.0 * base_.h1(0.5 * (1.0 + u), 0.5 * (1.0 + v)) - 1.0;
  }
  double h2(double u, double v) const override { return h1(v, u); }
  double h1_inv(double u, double p) const override {
    return 2.0 * base_.h1_inv(0.5 * (1.0 + u), 0.5 * (1.0 + p)) - 1.0;
  }
  double h2_inv(double p, double v) const override { return h1_inv(v, p); }
  bool has_analytic_cdf() const override { return false; }
  CopulaSpec spec() const override { return {"abs_spherical_t", {{"nu", nu_}}, {}, {}}; }

 private:
  StudentTCopula base_;
  double nu_;
};

class ClaytonCopula final : public BivariateCopula {
 public:
  explicit ClaytonCopula(double theta) : theta_(theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("clayton copula: theta must be positive");
  }

  double cdf(double u, double v) const override {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    return std::exp(-std::log1p(std::expm1(-theta_ * std::log(u)) +
                                std::expm1(-theta_ * std::log(v))) /
                    theta_);
  }

  double log_pdf(double u, double v) const override {
    const double lu = std::log(clip01(u)), lv = std::log(clip01(v));
    return std::log1p(theta_) - (theta_ + 1.0) * (lu + lv) -
           (2.0 + 1.0 / theta_) * log_a(lu, lv);
  }

  double h1(double u, double v) const override {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double lu = std::log(clip01(u)), lv = std::log(clip01(v));
    return std::exp(-(theta_ + 1.0) * lu - (1.0 + 1.0 / theta_) * log_a(lu, lv));
  }
  double h2(double u, double v) const override { return h1(v, u); }

  double h1_inv(double u, double p) const override {
    const double uu = clip01(u), pp = clip01(p);
    const double w = std::exp(-theta_ / (theta_ + 1.0) * std::log(pp)) - 1.0 +
                     std::exp(theta_ * std::log(uu));
    return clip01(uu * std::exp(-std::log(w) / theta_));
  }
  double h2_inv(double p, double v) const override { return h1_inv(v, p); }
  CopulaSpec spec() const override { return {"clayton", {{"theta", theta_}}, {}, {}}; }

 private:
  // log(u^-t + v^-t - 1) from log u, log v, stable for large theta.
  double log_a(double lu, double lv) const {
    const double a = -theta_ * lu, b = -theta_ * lv;
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m) - std::exp(-m));
  }

  double theta_;
};

class GumbelCopula final : public BivariateCopula {
 public:
  explicit GumbelCopula(double theta) : theta_(theta) {
    if (!(theta >= 1.0)) throw std::invalid_argument("gumbel copula: theta must be >= 1");
  }

  double cdf(double u, double v) const override {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    return std::exp(-std::exp(log_s(u, v) / theta_));
  }

  double log_pdf(double u, double v) const override {
    const double uu = clip01(u), vv = clip01(v);
    const double ls = log_s(uu, vv);
    const double s = std::exp(ls / theta_);
    return -s + (theta_ - 1.0) * (std::log(-std::log(uu)) + std::log(-std::log(vv))) -
           std::log(uu) - std::log(vv) + (2.0 / theta_ - 2.0) * ls + std::log1p((theta_ - 1.0) / s);
  }

  double h1(double u, double v) const override {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double uu = clip01(u);
    const double ls = log_s(uu, v);
    const double s = std::exp(ls / theta_);
    return std::exp(-s + (1.0 / theta_ - 1.0) * ls + (theta_ - 1.0) * std::log(-std::log(uu)) -
                    std::log(uu));
  }
  double h2(double u, double v) const override { return h1(v, u); }
  double h2_inv(double p, double v) const override { return h1_inv(v, p); }
  CopulaSpec spec() const override { return {"gumbel", {{"theta", theta_}}, {}, {}}; }

 private:
  // log((-log u)^theta + (-log v)^theta)
  double log_s(double u, double v) const {
    return logsumexp2(theta_ * std::log(-std::log(u)), theta_ * std::log(-std::log(v)));
  }

  double theta_;
};

class JoeCopula final : public BivariateCopula {
 public:
  explicit JoeCopula(double theta) : theta_(theta) {
    if (!(theta >= 1.0)) throw std::invalid_argument("joe copula: theta must be >= 1");
  }

  double cdf(double u, double v) const override {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    return 1.0 - std::exp(std::log(a_of(1.0 - u, 1.0 - v)) / theta_);
  }

  double log_pdf(double u, double v) const override {
    const double x = 1.0 - clip01(u), y = 1.0 - clip01(v);
    const double a = a_of(x, y);
    return (1.0 / theta_ - 2.0) * std::log(a) + (theta_ - 1.0) * (std::log(x) + std::log(y)) +
           std::log(theta_ - 1.0 + a);
  }

  double h1(double u, double v) const override {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double x = 1.0 - clip01(u), y = 1.0 - clip01(v);
    const double a = a_of(x, y);
    return std::exp((1.0 / theta_ - 1.0) * std::log(a) + (theta_ - 1.0) * std::log(x)) *
           (1.0 - std::pow(y, theta_));
  }
  double h2(double u, double v) const override { return h1(v, u); }
  double h2_inv(double p, double v) const override { return h1_inv(v, p); }
  CopulaSpec spec() const override { return {"joe", {{"theta", theta_}}, {}, {}}; }

 private:
  // A = x^t + y^t - x^t y^t = 1 - (1-x^t)(1-y^t), inside (0,1].
  double a_of(double x, double y) const {
    const double xt = std::pow(x, theta_), yt = std::pow(y, theta_);
    return xt + yt - xt * yt;
  }

  double theta_;
};

// ---------------------------------------------------------------------------
// Structural constructions

class RotatedCopula final : public BivariateCopula {
 public:
  RotatedCopula(CopulaPtr base, int angle) : base_(std::move(base)), angle_(angle) {
    if (angle_ != 90 && angle_ != 180 && angle_ != 270)
      throw std::invalid_argument("rotate_copula: angle must be 90, 180 or 270");
  }

  double cdf(double u, double v) const override {
    switch (angle_) {
      case 90:
        return v - base_->cdf(1.0 - u, v);
      case 180:
        return u + v - 1.0 + base_->cdf(1.0 - u, 1.0 - v);
      default:
        return u - base_->cdf(u, 1.0 - v);
    }
  }

  double log_pdf(double u, double v) const override {
    switch (angle_) {
      case 90:
        return base_->log_pdf(1.0 - u, v);
      case 180:
        return base_->log_pdf(1.0 - u, 1.0 - v);
      default:
        return base_->log_pdf(u, 1.0 - v);
    }
  }

  double h1(double u, double v) const override {
    switch (angle_) {
      case 90:
        return base_->h1(1.0 - u, v);
      case 180:
        return 1.0 - base_->h1(1.0 - u, 1.0 - v);
      default:
        return 1.0 - base_->h1(u, 1.0 - v);
    }
  }

  double h2(double u, double v) const override {
    switch (angle_) {
      case 90:
        return 1.0 - base_->h2(1.0 - u, v);
      case 180:
        return 1.0 - base_->h2(1.0 - u, 1.0 - v);
      default:
        return base_->h2(u, 1.0 - v);
    }
  }

  double h1_inv(double u, double p) const override {
    switch (angle_) {
      case 90:
        return base_->h1_inv(1.0 - u, p);
      case 180:
        return 1.0 - base_->h1_inv(1.0 - u, 1.0 - p);
      default:
        return 1.0 - base_->h1_inv(u, 1.0 - p);
    }
  }

  double h2_inv(double p, double v) const override {
    switch (angle_) {
      case 90:
        return 1.0 - base_->h2_inv(1.0 - p, v);
      case 180:
        return 1.0 - base_->h2_inv(1.0 - p, 1.0 - v);
      default:
        return base_->h2_inv(p, 1.0 - v);
    }
  }

  SamplePairs sample(std::size_t n, Rng& rng) const override {
    SamplePairs out = base_->sample(n, rng);
    for (std::size_t i = 0; i < n; ++i) {
      if (angle_ == 90 || angle_ == 180) out.u[i] = 1.0 - out.u[i];
      if (angle_ == 270 || angle_ == 180) out.v[i] = 1.0 - out.v[i];
    }
    return out;
  }

  bool has_analytic_cdf() const override { return base_->has_analytic_cdf(); }
  CopulaSpec spec() const override {
    return {"rotation", {{"angle", static_cast<double>(angle_)}}, {base_->spec()}, {}};
  }

 private:
  CopulaPtr base_;
  int angle_;
};

class MixtureCopula final : public BivariateCopula {
 public:
  MixtureCopula(std::vector<CopulaPtr> components, std::vector<double> weights)
      : components_(std::move(components)), weights_(std::move(weights)) {
    if (components_.empty() || components_.size() != weights_.size())
      throw std::invalid_argument("mixture_copula: components/weights mismatch");
    double total = 0.0;
    for (double w : weights_) {
      if (w < 0.0) throw std::invalid_argument("mixture_copula: negative weight");
      total += w;
    }
    if (!(std::fabs(total - 1.0) < 1e-12))
      throw std::invalid_argument("mixture_copula: weights must sum to one");
  }

  double cdf(double u, double v) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i)
      s += weights_[i] * components_[i]->cdf(u, v);
    return s;
  }

  double log_pdf(double u, double v) const override {
    double best = -INFINITY;
    std::vector<double> terms(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
      terms[i] = weights_[i] > 0.0 ? std::log(weights_[i]) + components_[i]->log_pdf(u, v)
                                   : -INFINITY;
      best = std::max(best, terms[i]);
    }
    if (best == -INFINITY) return -INFINITY;
    double s = 0.0;
    for (double t : terms) s += std::exp(t - best);
    return best + std::log(s);
  }

  double h1(double u, double v) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i)
      s += weights_[i] * components_[i]->h1(u, v);
    return s;
  }
  double h2(double u, double v) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i)
      s += weights_[i] * components_[i]->h2(u, v);
    return s;
  }

  // No closed form for mixture h-inverses: inherited numeric solve.

  SamplePairs sample(std::size_t n, Rng& rng) const override {
    SamplePairs out;
    out.u.resize(n);
    out.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double pick = rng.uniform();
      std::size_t k = 0;
      while (k + 1 < components_.size() && pick > weights_[k]) {
        pick -= weights_[k];
        ++k;
      }
      const SamplePairs one = components_[k]->sample(1, rng);
      out.u[i] = one.u[0];
      out.v[i] = one.v[0];
    }
    return out;
  }

  bool has_analytic_cdf() const override {
    for (const auto& c : components_)
      if (!c->has_analytic_cdf()) return false;
    return true;
  }

  CopulaSpec spec() const override {
    CopulaSpec s{"mixture", {}, {}, weights_};
    for (const auto& c : components_) s.children.push_back(c->spec());
    return s;
  }

 private:
  std::vector<CopulaPtr> components_;
  std::vector<double> weights_;
};

// Khoudraji construction with an independence second factor:
// C(u,v) = C_A(u^{1-a1}, v^{1-a2}) u^{a1} v^{a2}.
class KhoudrajiCopula final : public BivariateCopula {
 public:
  KhoudrajiCopula(CopulaPtr base, double a1, double a2)
      : base_(std::move(base)), a1_(a1), a2_(a2) {
    if (!(a1 >= 0.0 && a1 <= 1.0 && a2 >= 0.0 && a2 <= 1.0))
      throw std::invalid_argument("khoudraji_copula: shape parameters must lie in [0,1]");
    if (!base_->has_analytic_cdf())
      throw std::invalid_argument(
          "khoudraji_copula: base must have closed-form cdf and h-functions "
          "(t-family bases are not supported)");
  }

  double cdf(double u, double v) const override {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    return base_->cdf(std::pow(u, 1.0 - a1_), std::pow(v, 1.0 - a2_)) * std::pow(u, a1_) *
           std::pow(v, a2_);
  }

  double log_pdf(double u, double v) const override {
    const double uu = clip01(u), vv = clip01(v);
    const double x = std::pow(uu, 1.0 - a1_), y = std::pow(vv, 1.0 - a2_);
    const double c = std::exp(base_->log_pdf(x, y));
    const double density =
        (1.0 - a1_) * (1.0 - a2_) * c +
        (1.0 - a1_) * a2_ * std::pow(vv, a2_ - 1.0) * base_->h1(x, y) +
        a1_ * (1.0 - a2_) * std::pow(uu, a1_ - 1.0) * base_->h2(x, y) +
        a1_ * a2_ * std::pow(uu, a1_ - 1.0) * std::pow(vv, a2_ - 1.0) * base_->cdf(x, y);
    return std::log(std::max(density, 1e-300));
  }

  double h1(double u, double v) const override {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double uu = clip01(u);
    const double x = std::pow(uu, 1.0 - a1_), y = std::pow(v, 1.0 - a2_);
    return std::pow(v, a2_) * ((1.0 - a1_) * base_->h1(x, y) +
                               a1_ * std::pow(uu, a1_ - 1.0) * base_->cdf(x, y));
  }

  double h2(double u, double v) const override {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double vv = clip01(v);
    const double x = std::pow(u, 1.0 - a1_), y = std::pow(vv, 1.0 - a2_);
    return std::pow(u, a1_) * ((1.0 - a2_) * base_->h2(x, y) +
                               a2_ * std::pow(vv, a2_ - 1.0) * base_->cdf(x, y));
  }

  CopulaSpec spec() const override {
    return {"khoudraji", {{"a1", a1_}, {"a2", a2_}}, {base_->spec()}, {}};
  }

 private:
  CopulaPtr base_;
  double a1_, a2_;
};

}  // namespace

CopulaPtr independence_copula() { return std::make_shared<IndependenceCopula>(); }
CopulaPtr gaussian_copula(double rho) { return std::make_shared<GaussianCopula>(rho); }
CopulaPtr student_t_copula(double rho, double nu, int cdf_nodes) {
  return std::make_shared<StudentTCopula>(rho, nu, cdf_nodes);
}
CopulaPtr spherical_t_copula(double nu, int cdf_nodes) {
  return std::make_shared<StudentTCopula>(0.0, nu, cdf_nodes);
}
CopulaPtr abs_spherical_t_copula(double nu, int cdf_nodes) {
  return std::make_shared<AbsSphericalTCopula>(nu, cdf_nodes);
}
CopulaPtr clayton_copula(double theta) { return std::make_shared<ClaytonCopula>(theta); }
CopulaPtr gumbel_copula(double theta) { return std::make_shared<GumbelCopula>(theta); }
CopulaPtr joe_copula(double theta) { return std::make_shared<JoeCopula>(theta); }

CopulaPtr rotate_copula(CopulaPtr base, int angle_degrees) {
  return std::make_shared<RotatedCopula>(std::move(base), angle_degrees);
}
CopulaPtr mixture_copula(std::vector<CopulaPtr> components, std::vector<double> weights) {
  return std::make_shared<MixtureCopula>(std::move(components), std::move(weights));
}
CopulaPtr khoudraji_copula(CopulaPtr base, double a1, double a2) {
  return std::make_shared<KhoudrajiCopula>(std::move(base), a1, a2);
}

CopulaPtr rotation_mixture(CopulaPtr base) {
  std::vector<CopulaPtr> parts = {base, rotate_copula(base, 90), rotate_copula(base, 180),
                                  rotate_copula(base, 270)};
  return mixture_copula(std::move(parts), {0.25, 0.25, 0.25, 0.25});
}

}  // namespace garchmimic
