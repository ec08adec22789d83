#include "garchmimic/vt_copula.hpp"

#include <cmath>
#include <stdexcept>

namespace garchmimic {

namespace {

void append_vt_params(CopulaSpec& s, const char* prefix, const VTransform& vt) {
  s.params.emplace_back(std::string(prefix) + ".delta", vt.fulcrum());
  switch (vt.generator()) {
    case GeneratorKind::linear:
      break;
    case GeneratorKind::power:
      s.params.emplace_back(std::string(prefix) + ".kappa", vt.kappa());
      break;
    case GeneratorKind::custom:
      throw std::logic_error("custom-generator v-transforms are not serialisable");
  }
}

// Linear v-transform of both margins: all closed forms of the base carry
// over with sign prefactors d^{1[x<=d]} (d-1)^{1[x>d]}.
class LinearVtCopula final : public BivariateCopula {
 public:
  LinearVtCopula(CopulaPtr base, double delta1, double delta2)
      : base_(std::move(base)),
        vt1_(VTransform::linear(delta1)),
        vt2_(VTransform::linear(delta2)),
        d1_(delta1),
        d2_(delta2) {}

  double cdf(double u, double v) const override {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    const double pre = sign_factor(u, d1_) * sign_factor(v, d2_);
    return pre * base_->cdf(vt1_.eval(u), vt2_.eval(v)) + d1_ * v + d2_ * u - d1_ * d2_;
  }

  double log_pdf(double u, double v) const override {
    return base_->log_pdf(vt1_.eval(u), vt2_.eval(v));
  }

  double h1(double u, double v) const override {
    return d2_ - sign_factor(v, d2_) * base_->h1(vt1_.eval(u), vt2_.eval(v));
  }
  double h2(double u, double v) const override {
    return d1_ - sign_factor(u, d1_) * base_->h2(vt1_.eval(u), vt2_.eval(v));
  }

  double h1_inv(double u, double p) const override {
    const double h = base_->h1_inv(vt1_.eval(u), vt2_.eval(p));
    return p <= d2_ ? d2_ * (1.0 - h) : d2_ + (1.0 - d2_) * h;
  }
  double h2_inv(double p, double v) const override {
    const double h = base_->h2_inv(vt1_.eval(p), vt2_.eval(v));
    return p <= d1_ ? d1_ * (1.0 - h) : d1_ + (1.0 - d1_) * h;
  }

  bool has_analytic_cdf() const override { return base_->has_analytic_cdf(); }

  CopulaSpec spec() const override {
    CopulaSpec s{"inverse_vt", {}, {base_->spec()}, {}};
    append_vt_params(s, "vt1", vt1_);
    append_vt_params(s, "vt2", vt2_);
    return s;
  }

 private:
  static double sign_factor(double x, double d) { return x <= d ? d : d - 1.0; }

  CopulaPtr base_;
  VTransform vt1_, vt2_;
  double d1_, d2_;
};

class InverseVtCopula final : public BivariateCopula {
 public:
  InverseVtCopula(CopulaPtr base, VTransform vt1, VTransform vt2)
      : base_(std::move(base)), vt1_(std::move(vt1)), vt2_(std::move(vt2)) {}

  double log_pdf(double u, double v) const override {
    return base_->log_pdf(vt1_.eval(u), vt2_.eval(v));
  }

  double cdf(double, double) const override { throw_no_closed_form(); }
  double h1(double, double) const override { throw_no_closed_form(); }
  double h2(double, double) const override { throw_no_closed_form(); }

  // Base pair, then the two stochastic-inversion coins, per draw.
  SamplePairs sample(std::size_t n, Rng& rng) const override {
    SamplePairs out;
    out.u.resize(n);
    out.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const SamplePairs base = base_->sample(1, rng);
      out.u[i] = vt1_.stochastic_inverse(base.u[0], rng.uniform());
      out.v[i] = vt2_.stochastic_inverse(base.v[0], rng.uniform());
    }
    return out;
  }

  bool has_analytic_cdf() const override { return false; }

  CopulaSpec spec() const override {
    CopulaSpec s{"inverse_vt", {}, {base_->spec()}, {}};
    append_vt_params(s, "vt1", vt1_);
    append_vt_params(s, "vt2", vt2_);
    return s;
  }

 private:
  [[noreturn]] static void throw_no_closed_form() {
    throw std::logic_error(
        "inverse-vt copula with non-linear v-transforms exposes density and "
        "sampling only");
  }

  CopulaPtr base_;
  VTransform vt1_, vt2_;
};

class ForwardVtCopula final : public BivariateCopula {
 public:
  ForwardVtCopula(CopulaPtr base, VTransform vt1, VTransform vt2)
      : base_(std::move(base)), vt1_(std::move(vt1)), vt2_(std::move(vt2)) {}

  // Delta-weighted four-point evaluation of the base density at the branch
  // preimages.
  double log_pdf(double u, double v) const override {
    const double eps = 1e-14;
    const double uu = std::max(u, eps), vv = std::max(v, eps);
    const double iu = vt1_.partial_inverse(uu);
    const double iv = vt2_.partial_inverse(vv);
    const double du = vt1_.delta_fn(uu);
    const double dv = vt2_.delta_fn(vv);
    const double density = base_->pdf(iu, iv) * du * dv +
                           base_->pdf(iu + uu, iv) * (1.0 - du) * dv +
                           base_->pdf(iu, iv + vv) * du * (1.0 - dv) +
                           base_->pdf(iu + uu, iv + vv) * (1.0 - du) * (1.0 - dv);
    return std::log(std::max(density, 1e-300));
  }

  double cdf(double, double) const override { throw_no_closed_form(); }
  double h1(double, double) const override { throw_no_closed_form(); }
  double h2(double, double) const override { throw_no_closed_form(); }

  SamplePairs sample(std::size_t n, Rng& rng) const override {
    SamplePairs out = base_->sample(n, rng);
    for (std::size_t i = 0; i < n; ++i) {
      out.u[i] = vt1_.eval(out.u[i]);
      out.v[i] = vt2_.eval(out.v[i]);
    }
    return out;
  }

  bool has_analytic_cdf() const override { return false; }

  CopulaSpec spec() const override {
    CopulaSpec s{"forward_vt", {}, {base_->spec()}, {}};
    append_vt_params(s, "vt1", vt1_);
    append_vt_params(s, "vt2", vt2_);
    return s;
  }

 private:
  [[noreturn]] static void throw_no_closed_form() {
    throw std::logic_error("v-transformed copula exposes density and sampling only");
  }

  CopulaPtr base_;
  VTransform vt1_, vt2_;
};

}  // namespace

CopulaPtr inverse_vt_copula(CopulaPtr base, VTransform vt1, VTransform vt2) {
  if (vt1.is_linear() && vt2.is_linear())
    return std::make_shared<LinearVtCopula>(std::move(base), vt1.fulcrum(), vt2.fulcrum());
  return std::make_shared<InverseVtCopula>(std::move(base), std::move(vt1), std::move(vt2));
}

CopulaPtr forward_vt_copula(CopulaPtr base, VTransform vt1, VTransform vt2) {
  return std::make_shared<ForwardVtCopula>(std::move(base), std::move(vt1), std::move(vt2));
}

CopulaPtr linear_vt_copula(CopulaPtr base, double delta1, double delta2) {
  return inverse_vt_copula(std::move(base), VTransform::linear(delta1),
                           VTransform::linear(delta2));
}

}  // namespace garchmimic
