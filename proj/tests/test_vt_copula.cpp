#include <doctest.h>

#include <cmath>
#include <vector>

#include "garchmimic/copula.hpp"
#include "garchmimic/copula_spec.hpp"
#include "garchmimic/quadrature.hpp"
#include "garchmimic/rng.hpp"
#include "garchmimic/stats.hpp"
#include "garchmimic/vt_copula.hpp"

using namespace garchmimic;

namespace {

const VTransform kSym = VTransform::linear(0.5);

// 2-D integral of a copula density over [0,a]x[0,b] with panels split at the
// fulcrums (the integrand has kinks there).
double box_integral(const BivariateCopula& c, double a, double b, double d1, double d2) {
  std::vector<double> ue = {0.0};
  if (d1 < a) ue.push_back(d1);
  ue.push_back(a);
  std::vector<double> ve = {0.0};
  if (d2 < b) ve.push_back(d2);
  ve.push_back(b);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < ue.size(); ++i)
    for (std::size_t j = 0; j + 1 < ve.size(); ++j)
      total += integrate_graded(
          [&](double u) {
            return integrate_graded([&](double v) { return c.pdf(u, v); }, ve[j], ve[j + 1], 40,
                                    10);
          },
          ue[i], ue[i + 1], 40, 10);
  return total;
}

}  // namespace

TEST_CASE("inverse vt: independence base stays flat") {
  const CopulaPtr c = inverse_vt_copula(independence_copula(), VTransform::linear(0.3),
                                        VTransform::power(0.6, 2.0));
  for (double u : {0.1, 0.5, 0.9})
    for (double v : {0.2, 0.7}) CHECK(c->pdf(u, v) == doctest::Approx(1.0));
}

TEST_CASE("inverse vt: symmetric transforms of ast give the spherical t density") {
  const CopulaPtr iv_ast = inverse_vt_copula(abs_spherical_t_copula(4.0), kSym, kSym);
  const CopulaPtr sph = spherical_t_copula(4.0);
  for (int i = 1; i < 10; ++i)
    for (int j = 1; j < 10; ++j) {
      const double u = i / 10.0, v = j / 10.0;
      CHECK(iv_ast->pdf(u, v) == doctest::Approx(sph->pdf(u, v)).epsilon(1e-8));
    }
}

TEST_CASE("inverse vt: unit integral for an asymmetric construction") {
  const CopulaPtr c =
      inverse_vt_copula(joe_copula(2.0), VTransform::linear(0.3), VTransform::linear(0.6));
  CHECK(box_integral(*c, 1.0, 1.0, 0.3, 0.6) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("inverse vt: uniform margins by quadrature") {
  const CopulaPtr c = inverse_vt_copula(gumbel_copula(2.0), VTransform::power(0.4, 1.5),
                                        VTransform::linear(0.55));
  for (double u : {0.2, 0.5, 0.85}) {
    const double margin =
        integrate_graded([&](double v) { return c->pdf(u, v); }, 0.0, 0.55, 40, 10) +
        integrate_graded([&](double v) { return c->pdf(u, v); }, 0.55, 1.0, 40, 10);
    CHECK(margin == doctest::Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("forward vt: independence base stays flat") {
  const CopulaPtr c = forward_vt_copula(independence_copula(), VTransform::linear(0.35),
                                        VTransform::power(0.5, 2.0));
  for (double u : {0.15, 0.6, 0.95})
    for (double v : {0.25, 0.8}) CHECK(c->pdf(u, v) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("forward vt: jointly symmetric base reproduces the ast relation") {
  const CopulaPtr fwd = forward_vt_copula(spherical_t_copula(4.0), kSym, kSym);
  const CopulaPtr sph = spherical_t_copula(4.0);
  for (double u : {0.2, 0.5, 0.7})
    for (double v : {0.3, 0.65})
      CHECK(fwd->pdf(u, v) ==
            doctest::Approx(sph->pdf(0.5 * (1.0 - u), 0.5 * (1.0 - v))).epsilon(1e-8));
}

TEST_CASE("forward-then-inverse on gaussian gives the +-rho mixture") {
  const CopulaPtr fwd = forward_vt_copula(gaussian_copula(0.6), kSym, kSym);
  const CopulaPtr both = inverse_vt_copula(fwd, kSym, kSym);
  const CopulaPtr mix = mixture_copula({gaussian_copula(0.6), gaussian_copula(-0.6)}, {0.5, 0.5});
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) {
      const double u = i / 8.0, v = j / 8.0;
      CHECK(both->pdf(u, v) == doctest::Approx(mix->pdf(u, v)).epsilon(1e-6));
    }
}

TEST_CASE("inverse-then-forward returns the base density for any transforms") {
  const CopulaPtr base = gumbel_copula(2.0);
  const VTransform vt1 = VTransform::linear(0.3);
  const VTransform vt2 = VTransform::power(0.5, 2.0);
  const CopulaPtr ivt = inverse_vt_copula(base, vt1, vt2);
  const CopulaPtr back = forward_vt_copula(ivt, vt1, vt2);
  for (double u : {0.2, 0.5, 0.8})
    for (double v : {0.3, 0.6, 0.9})
      CHECK(back->pdf(u, v) == doctest::Approx(base->pdf(u, v)).epsilon(1e-8));
}

TEST_CASE("forward-then-inverse returns a jointly symmetric base") {
  const CopulaPtr sph = spherical_t_copula(3.0);
  const CopulaPtr there = forward_vt_copula(sph, kSym, kSym);
  const CopulaPtr back = inverse_vt_copula(there, kSym, kSym);
  for (double u : {0.2, 0.45, 0.75})
    for (double v : {0.15, 0.6})
      CHECK(back->pdf(u, v) == doctest::Approx(sph->pdf(u, v)).epsilon(1e-8));
}

TEST_CASE("symmetries of inverse-vt densities") {
  const CopulaPtr h_only = inverse_vt_copula(joe_copula(2.0), VTransform::linear(0.3), kSym);
  for (double u : {0.2, 0.6})
    for (double v : {0.1, 0.4})
      CHECK(h_only->pdf(u, v) == doctest::Approx(h_only->pdf(u, 1.0 - v)).epsilon(1e-10));

  const CopulaPtr joint = inverse_vt_copula(joe_copula(2.0), kSym, kSym);
  for (double u : {0.2, 0.6})
    for (double v : {0.1, 0.4}) {
      CHECK(joint->pdf(u, v) == doctest::Approx(joint->pdf(1.0 - u, v)).epsilon(1e-10));
      CHECK(joint->pdf(u, v) == doctest::Approx(joint->pdf(u, 1.0 - v)).epsilon(1e-10));
      CHECK(joint->pdf(u, v) ==
            doctest::Approx(joe_copula(2.0)->pdf(std::fabs(2 * u - 1), std::fabs(2 * v - 1)))
                .epsilon(1e-12));
    }
}

TEST_CASE("sampling: stochastic inversion of the base draws") {
  Rng r1(42);
  const SamplePairs ind = inverse_vt_copula(independence_copula(), kSym, kSym)->sample(100000, r1);
  CHECK(std::fabs(kendall_tau(ind.u, ind.v)) < 0.01);

  // h-symmetric construction kills rank correlation for any base
  Rng r2(43);
  const SamplePairs s = inverse_vt_copula(gumbel_copula(3.0), kSym, kSym)->sample(100000, r2);
  CHECK(std::fabs(kendall_tau(s.u, s.v)) < 0.01);
  CHECK(std::fabs(spearman_rho(s.u, s.v)) < 0.012);
}

TEST_CASE("sampling: histogram chi-square against the density") {
  const CopulaPtr c = inverse_vt_copula(abs_spherical_t_copula(2.0), kSym, kSym);
  Rng rng(44);
  const std::size_t n = 100000;
  const SamplePairs s = c->sample(n, rng);
  const int m = 10;
  std::vector<double> observed(m * m, 0.0), expected(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const int bi = std::min(m - 1, static_cast<int>(s.u[i] * m));
    const int bj = std::min(m - 1, static_cast<int>(s.v[i] * m));
    observed[bi * m + bj] += 1.0;
  }
  const auto& rule = gauss_legendre(8);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double mass = gl_integrate(
          [&](double u) {
            return gl_integrate([&](double v) { return c->pdf(u, v); }, j / 10.0, (j + 1) / 10.0,
                                rule);
          },
          i / 10.0, (i + 1) / 10.0, rule);
      expected[i * m + j] = mass * n;
    }
  const double stat = chi_square_statistic(observed, expected);
  CHECK(chi_square_pvalue(stat, m * m - 1.0) > 0.01);
}

TEST_CASE("linear vt cdf: boundaries and the independence fixed point") {
  const CopulaPtr c = linear_vt_copula(joe_copula(2.0), 0.4, 0.5);
  for (double v : {0.2, 0.6, 0.9}) {
    CHECK(c->cdf(0.0, v) == doctest::Approx(0.0));
    CHECK(c->cdf(1.0, v) == doctest::Approx(v));
  }
  const CopulaPtr flat = linear_vt_copula(independence_copula(), 0.5, 0.5);
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      const double u = i / 10.0, v = j / 10.0;
      CHECK(flat->cdf(u, v) == doctest::Approx(u * v).epsilon(1e-10));
    }
}

TEST_CASE("linear vt cdf: agrees with quadrature of the density") {
  const CopulaPtr c = linear_vt_copula(joe_copula(2.0), 0.4, 0.5);
  CHECK(c->cdf(0.3, 0.8) == doctest::Approx(box_integral(*c, 0.3, 0.8, 0.4, 0.5)).epsilon(1e-4));
}

TEST_CASE("linear vt h-functions: fulcrum values and independence") {
  const CopulaPtr c = linear_vt_copula(clayton_copula(2.0), 0.35, 0.6);
  for (double u : {0.1, 0.5, 0.9}) CHECK(c->h1(u, 0.6) == doctest::Approx(0.6).epsilon(1e-12));
  for (double v : {0.1, 0.5, 0.9}) CHECK(c->h2(0.35, v) == doctest::Approx(0.35).epsilon(1e-12));
  const CopulaPtr flat = linear_vt_copula(independence_copula(), 0.3, 0.7);
  CHECK(flat->h1(0.4, 0.55) == doctest::Approx(0.55).epsilon(1e-12));
}

TEST_CASE("linear vt h-functions: transform identities on random points") {
  const CopulaPtr base = rotate_copula(clayton_copula(1.5), 180);
  const double d1 = 0.5, d2 = 0.5;
  const CopulaPtr c = linear_vt_copula(base, d1, d2);
  const VTransform v1 = VTransform::linear(d1), v2 = VTransform::linear(d2);
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const double u = rng.uniform(), v = rng.uniform();
    CHECK(v2.eval(c->h1(u, v)) == doctest::Approx(base->h1(v1.eval(u), v2.eval(v))).epsilon(1e-10));
    CHECK(v1.eval(c->h2(u, v)) == doctest::Approx(base->h2(v1.eval(u), v2.eval(v))).epsilon(1e-10));
  }
}

TEST_CASE("linear vt h-functions: inverse round trips") {
  const CopulaPtr c = linear_vt_copula(abs_spherical_t_copula(3.0), 0.45, 0.55);
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const double u = rng.uniform(), p = rng.uniform();
    CHECK(c->h1(u, c->h1_inv(u, p)) == doctest::Approx(p).epsilon(1e-8));
    CHECK(c->h2(c->h2_inv(p, u), u) == doctest::Approx(p).epsilon(1e-8));
  }
}

TEST_CASE("vt copulas serialise with a vt wrapper node") {
  const CopulaPtr c =
      inverse_vt_copula(joe_copula(2.0), VTransform::power(0.4, 2.0), VTransform::linear(0.5));
  const std::string text = copula_spec_to_json(c->spec());
  CHECK(text.find("\"structure\": \"vt\"") != std::string::npos);
  CHECK(text.find("\"direction\": \"inverse\"") != std::string::npos);
  const CopulaPtr back = make_copula(copula_spec_from_json(text));
  for (double u : {0.2, 0.7})
    for (double v : {0.4, 0.9})
      CHECK(back->pdf(u, v) == doctest::Approx(c->pdf(u, v)).epsilon(1e-14));

  const CopulaPtr lin = linear_vt_copula(joe_copula(2.0), 0.4, 0.5);
  const CopulaPtr lin_back = make_copula(copula_spec_from_json(copula_spec_to_json(lin->spec())));
  CHECK(lin_back->cdf(0.3, 0.8) == doctest::Approx(lin->cdf(0.3, 0.8)).epsilon(1e-14));
}
