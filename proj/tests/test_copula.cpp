#include <doctest.h>

#include <cmath>
#include <vector>

#include "garchmimic/copula.hpp"
#include "garchmimic/copula_spec.hpp"
#include "garchmimic/distributions.hpp"
#include "garchmimic/quadrature.hpp"
#include "garchmimic/rng.hpp"
#include "garchmimic/stats.hpp"

using namespace garchmimic;

namespace {

std::vector<CopulaPtr> analytic_families() {
  return {independence_copula(),      gaussian_copula(0.5),
          spherical_t_copula(4.0),    student_t_copula(0.4, 3.0),
          abs_spherical_t_copula(4.0), clayton_copula(2.0),
          gumbel_copula(2.0),         joe_copula(2.0)};
}

// Central mixed second difference of the cdf.
double fd_density(const BivariateCopula& c, double u, double v, double h = 1e-4) {
  return (c.cdf(u + h, v + h) - c.cdf(u + h, v - h) - c.cdf(u - h, v + h) +
          c.cdf(u - h, v - h)) /
         (4.0 * h * h);
}

double fd_h1(const BivariateCopula& c, double u, double v, double h = 1e-5) {
  return (c.cdf(u + h, v) - c.cdf(u - h, v)) / (2.0 * h);
}

double unit_square_integral(const BivariateCopula& c, int levels, int order) {
  return integrate_graded(
      [&](double u) {
        return integrate_graded([&](double v) { return c.pdf(u, v); }, 0.0, 1.0, levels, order);
      },
      0.0, 1.0, levels, order);
}

}  // namespace

TEST_CASE("cdf: independence product and upper boundary") {
  CHECK(independence_copula()->cdf(0.3, 0.7) == doctest::Approx(0.21));
  for (const auto& c : analytic_families())
    for (double v : {0.1, 0.5, 0.9}) CHECK(c->cdf(1.0, v) == doctest::Approx(v).epsilon(1e-9));
}

TEST_CASE("cdf: boundary conditions on a 50-point grid") {
  for (const auto& c : analytic_families()) {
    const double tol = c->has_analytic_cdf() ? 1e-8 : 1e-5;
    for (int i = 1; i < 50; ++i) {
      const double u = i / 50.0;
      CHECK(std::fabs(c->cdf(u, 0.0)) < tol);
      CHECK(std::fabs(c->cdf(0.0, u)) < tol);
      CHECK(std::fabs(c->cdf(u, 1.0) - u) < tol);
      CHECK(std::fabs(c->cdf(1.0, u) - u) < tol);
    }
  }
}

TEST_CASE("cdf: abs spherical t at the centre vs the spherical-t quadrature") {
  const CopulaPtr ast = abs_spherical_t_copula(4.0);
  const CopulaPtr sph = spherical_t_copula(4.0);
  CHECK(ast->cdf(0.5, 0.5) == doctest::Approx(4.0 * sph->cdf(0.75, 0.75) - 2.0).epsilon(1e-10));
}

TEST_CASE("cdf: abs spherical t matches a Monte Carlo estimate") {
  // P(|T1|-rank <= 0.5, |T2|-rank <= 0.5) from spherical-t draws.
  const double nu = 4.0;
  const double q = student_t_quantile(0.75, nu);
  Rng rng(99);
  const CopulaPtr sph = spherical_t_copula(nu);
  const std::size_t n = 1000000;
  const SamplePairs pairs = sph->sample(n, rng);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t1 = std::fabs(student_t_quantile(pairs.u[i], nu));
    const double t2 = std::fabs(student_t_quantile(pairs.v[i], nu));
    if (t1 <= q && t2 <= q) ++hits;
  }
  const double est = static_cast<double>(hits) / n;
  const double se = std::sqrt(est * (1.0 - est) / n);
  CHECK(std::fabs(abs_spherical_t_copula(nu)->cdf(0.5, 0.5) - est) < 3.0 * se);
}

TEST_CASE("pdf: independence is flat, ast reduces to the spherical density") {
  CHECK(independence_copula()->pdf(0.37, 0.81) == doctest::Approx(1.0));
  const CopulaPtr ast = abs_spherical_t_copula(4.0);
  const CopulaPtr sph = spherical_t_copula(4.0);
  CHECK(ast->pdf(0.2, 0.6) == doctest::Approx(sph->pdf(0.6, 0.8)).epsilon(1e-10));
}

TEST_CASE("pdf: four-fold reflection identity of the spherical t density") {
  const CopulaPtr sph = spherical_t_copula(3.0);
  for (double u : {0.15, 0.4, 0.7})
    for (double v : {0.2, 0.55, 0.85}) {
      const double base = sph->pdf(u, v);
      CHECK(sph->pdf(1.0 - u, v) == doctest::Approx(base).epsilon(1e-8));
      CHECK(sph->pdf(u, 1.0 - v) == doctest::Approx(base).epsilon(1e-8));
      CHECK(sph->pdf(1.0 - u, 1.0 - v) == doctest::Approx(base).epsilon(1e-8));
    }
}

TEST_CASE("pdf: matches finite differences of the cdf") {
  for (const auto& c : analytic_families())
    for (double u : {0.25, 0.6})
      for (double v : {0.3, 0.75})
        CHECK(c->pdf(u, v) ==
              doctest::Approx(fd_density(*c, u, v)).epsilon(c->has_analytic_cdf() ? 1e-3 : 5e-3));
}

TEST_CASE("pdf: khoudraji density against a finite-difference oracle") {
  const CopulaPtr k = khoudraji_copula(gumbel_copula(2.0), 0.3, 0.3);
  CHECK(k->pdf(0.4, 0.7) == doctest::Approx(fd_density(*k, 0.4, 0.7)).epsilon(1e-4));
  // equal shapes keep the base exchangeability
  CHECK(k->pdf(0.7, 0.4) == doctest::Approx(k->pdf(0.4, 0.7)).epsilon(1e-12));
  const CopulaPtr k2 = khoudraji_copula(joe_copula(3.0), 0.7, 0.2);
  for (double u : {0.2, 0.5, 0.9})
    for (double v : {0.35, 0.8})
      CHECK(k2->pdf(u, v) == doctest::Approx(fd_density(*k2, u, v)).epsilon(1e-4));
}

TEST_CASE("khoudraji rejects quadrature bases") {
  CHECK_THROWS(khoudraji_copula(spherical_t_copula(4.0), 0.3, 0.5));
  CHECK_THROWS(khoudraji_copula(abs_spherical_t_copula(4.0), 0.3, 0.5));
}

TEST_CASE("pdf: unit integral over the square") {
  CHECK(unit_square_integral(*gumbel_copula(2.0), 44, 12) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(unit_square_integral(*khoudraji_copula(clayton_copula(1.5), 0.2, 0.7), 44, 12) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(unit_square_integral(*spherical_t_copula(2.0), 26, 8) ==
        doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("h-functions: independence and gaussian closed forms") {
  CHECK(independence_copula()->h1(0.4, 0.6) == doctest::Approx(0.6));
  CHECK(gaussian_copula(0.5)->h1(0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("h-functions: agree with cdf finite differences") {
  for (const auto& c : analytic_families())
    for (double u : {0.3, 0.65})
      for (double v : {0.2, 0.7, 0.4})
        CHECK(c->h1(u, v) == doctest::Approx(fd_h1(*c, u, v)).epsilon(1e-4));
}

TEST_CASE("h-functions: inverse round trips") {
  Rng rng(1234);
  for (const auto& c : analytic_families())
    for (int i = 0; i < 100; ++i) {
      const double u = rng.uniform(), v = rng.uniform();
      CHECK(c->h1_inv(u, c->h1(u, v)) == doctest::Approx(v).epsilon(1e-8));
      CHECK(c->h2_inv(c->h2(u, v), v) == doctest::Approx(u).epsilon(1e-8));
    }
}

TEST_CASE("h-functions: clayton inverse satisfies the analytic identity") {
  const CopulaPtr c = clayton_copula(2.0);
  const double v = c->h1_inv(0.3, 0.6);
  CHECK(c->h1(0.3, v) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("rotations: density reflections and double-rotation involution") {
  const CopulaPtr base = gumbel_copula(2.5);
  const CopulaPtr r90 = rotate_copula(base, 90);
  const CopulaPtr r180 = rotate_copula(base, 180);
  const CopulaPtr r270 = rotate_copula(base, 270);
  const CopulaPtr quad = rotate_copula(rotate_copula(rotate_copula(r90, 90), 90), 90);
  for (double u : {0.2, 0.5, 0.8})
    for (double v : {0.3, 0.6, 0.9}) {
      CHECK(r90->pdf(u, v) == doctest::Approx(base->pdf(1.0 - u, v)).epsilon(1e-14));
      CHECK(r180->pdf(u, v) == doctest::Approx(base->pdf(1.0 - u, 1.0 - v)).epsilon(1e-14));
      CHECK(r270->pdf(u, v) == doctest::Approx(base->pdf(u, 1.0 - v)).epsilon(1e-14));
      CHECK(quad->pdf(u, v) == doctest::Approx(base->pdf(u, v)).epsilon(1e-12));
    }
  for (const auto& r : {r90, r180, r270}) {
    CHECK(r->h1_inv(0.4, r->h1(0.4, 0.7)) == doctest::Approx(0.7).epsilon(1e-8));
    CHECK(r->h2_inv(r->h2(0.4, 0.7), 0.7) == doctest::Approx(0.4).epsilon(1e-8));
  }
}

TEST_CASE("rotation mixture: jointly symmetric density") {
  const CopulaPtr m = rotation_mixture(joe_copula(2.0));
  for (double u : {0.2, 0.45})
    for (double v : {0.3, 0.7}) {
      const double ref = m->pdf(u, v);
      CHECK(m->pdf(1.0 - u, v) == doctest::Approx(ref).epsilon(1e-12));
      CHECK(m->pdf(u, 1.0 - v) == doctest::Approx(ref).epsilon(1e-12));
      CHECK(m->pdf(1.0 - u, 1.0 - v) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("sampling: empirical Kendall tau per family") {
  const std::size_t n = 100000;
  Rng r1(10), r2(11), r3(12), r4(13);
  const SamplePairs ind = independence_copula()->sample(n, r1);
  CHECK(std::fabs(kendall_tau(ind.u, ind.v)) < 0.01);

  const SamplePairs gum = gumbel_copula(2.0)->sample(n, r2);
  CHECK(kendall_tau(gum.u, gum.v) == doctest::Approx(0.5).epsilon(0.01 / 0.5));

  const SamplePairs cl = clayton_copula(2.0)->sample(n, r3);
  CHECK(kendall_tau(cl.u, cl.v) == doctest::Approx(0.5).epsilon(0.01 / 0.5));

  const SamplePairs ast = abs_spherical_t_copula(2.0)->sample(n, r4);
  CHECK(kendall_tau(ast.u, ast.v) ==
        doctest::Approx(kendall_tau_ast(2.0)).epsilon(0.01 / kendall_tau_ast(2.0)));
}

TEST_CASE("sampling: mixtures draw a component first and stay reproducible") {
  const CopulaPtr m = mixture_copula({gaussian_copula(0.7), gaussian_copula(-0.7)}, {0.5, 0.5});
  Rng a(77), b(77);
  const SamplePairs s1 = m->sample(1000, a);
  const SamplePairs s2 = m->sample(1000, b);
  CHECK(s1.u == s2.u);
  CHECK(s1.v == s2.v);
  CHECK(std::fabs(kendall_tau(s1.u, s1.v)) < 0.06);
}

TEST_CASE("kendall_tau_ast: limits, monotonicity, Monte Carlo agreement") {
  CHECK(std::fabs(kendall_tau_ast(1e4)) < 0.01);
  CHECK(kendall_tau_ast(0.05) > 0.9);
  CHECK(kendall_tau_ast(1.0) > kendall_tau_ast(2.0));
  CHECK(kendall_tau_ast(2.0) > kendall_tau_ast(4.0));

  Rng rng(5);
  const SamplePairs s = abs_spherical_t_copula(2.0)->sample(1000000, rng);
  const double mc = kendall_tau(s.u, s.v);
  CHECK(kendall_tau_ast(2.0) == doctest::Approx(mc).epsilon(0.004));
}

TEST_CASE("kendall_tau_ast_inverse: round trips and range guard") {
  const double nu = kendall_tau_ast_inverse(kendall_tau_ast(3.0));
  CHECK(nu == doctest::Approx(3.0).epsilon(0.01 / 3.0));
  CHECK(std::fabs(kendall_tau_ast(kendall_tau_ast_inverse(0.3)) - 0.3) < 1e-3);
  CHECK_THROWS(kendall_tau_ast_inverse(0.999));
  CHECK_THROWS(kendall_tau_ast_inverse(0.0005));
}

TEST_CASE("archimedean tau maps") {
  CHECK(clayton_tau(2.0) == doctest::Approx(0.5));
  CHECK(clayton_tau_inverse(0.5) == doctest::Approx(2.0));
  CHECK(gumbel_tau_inverse(0.5) == doctest::Approx(2.0));
  CHECK(joe_tau(1.0) == doctest::Approx(0.0));
  CHECK(joe_tau(joe_tau_inverse(0.44)) == doctest::Approx(0.44).epsilon(1e-8));
  Rng rng(6);
  const SamplePairs s = joe_copula(2.5)->sample(200000, rng);
  CHECK(joe_tau(2.5) == doctest::Approx(kendall_tau(s.u, s.v)).epsilon(0.01));
}

TEST_CASE("parameter domains are enforced") {
  CHECK_THROWS(gaussian_copula(1.0));
  CHECK_THROWS(student_t_copula(0.0, -1.0));
  CHECK_THROWS(clayton_copula(0.0));
  CHECK_THROWS(gumbel_copula(0.9));
  CHECK_THROWS(joe_copula(0.5));
  CHECK_THROWS(khoudraji_copula(gumbel_copula(2.0), -0.1, 0.5));
  CHECK_THROWS(mixture_copula({independence_copula()}, {0.9}));
  CHECK_THROWS(rotate_copula(independence_copula(), 45));
}

TEST_CASE("json: specs round-trip through the schema") {
  const CopulaPtr original =
      mixture_copula({khoudraji_copula(rotate_copula(clayton_copula(1.7), 180), 0.25, 0.6),
                      spherical_t_copula(3.5)},
                     {0.4, 0.6});
  const std::string text = copula_spec_to_json(original->spec());
  CHECK(text.find("garchmimic/1") != std::string::npos);
  const CopulaPtr rebuilt = make_copula(copula_spec_from_json(text));
  for (double u : {0.2, 0.5, 0.8})
    for (double v : {0.3, 0.7})
      CHECK(rebuilt->pdf(u, v) == doctest::Approx(original->pdf(u, v)).epsilon(1e-12));
  CHECK(copula_spec_to_json(rebuilt->spec()) == text);
}
