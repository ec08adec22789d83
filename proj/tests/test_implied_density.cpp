#include <doctest.h>

#include <cmath>
#include <vector>

#include "garchmimic/implied_density.hpp"
#include "garchmimic/quadrature.hpp"
#include "garchmimic/rng.hpp"
#include "garchmimic/stats.hpp"

using namespace garchmimic;

namespace {

const GarchSpec kArchGauss{0.4, 0.6, 0.0, 0.0, 0.0, InnovationDist::gaussian()};
const GarchSpec kGarchGauss{0.1, 0.3, 0.6, 0.0, 0.0, InnovationDist::gaussian()};

const ImpliedDensity& arch_gauss_density() {
  static const ImpliedDensity d(kArchGauss);
  return d;
}

const ImpliedDensity& garch_gauss_density() {
  static const ImpliedDensity d(kGarchGauss, 2000000, 101);
  return d;
}

}  // namespace

TEST_CASE("marginal solver: iid case recovers the scaled innovation density") {
  const GarchSpec spec{0.4, 0.0, 0.0, 0.0, 0.0, InnovationDist::gaussian()};
  const GridDensity g = solve_arch_marginal(spec);
  const double s = std::sqrt(0.4);
  double worst = 0.0;
  for (double x : {-3.0, -1.0, -0.2, 0.0, 0.5, 1.5, 4.0})
    worst = std::max(worst, std::fabs(g.pdf(x) - spec.innovations.pdf(x / s) / s));
  CHECK(worst < 1e-4);
}

TEST_CASE("marginal solver: ARCH(1) Gaussian has unit variance") {
  CHECK(arch_gauss_density().marginal().variance() == doctest::Approx(1.0).epsilon(0.005));
}

TEST_CASE("marginal solver: rejects GARCH specs and converges with info") {
  CHECK_THROWS(solve_arch_marginal(kGarchGauss));
  MarginalSolveInfo info;
  solve_arch_marginal(kArchGauss, {}, &info);
  CHECK(info.converged);
  CHECK(info.iterations > 1);
  CHECK_FALSE(info.boundary_warning);
}

TEST_CASE("marginal solver: matches a simulation histogram") {
  const GridDensity& g = arch_gauss_density().marginal();
  const SimulatedPath path = simulate(kArchGauss, 1000000, 10000, 55);
  const int bins = 100;
  std::vector<double> edges(bins + 1);
  for (int b = 0; b <= bins; ++b) edges[b] = g.quantile(0.001 + (0.999 - 0.001) * b / bins);
  std::vector<double> observed(bins, 0.0), expected(bins, 0.0);
  std::size_t inside = 0;
  for (double x : path.x) {
    if (x < edges.front() || x >= edges.back()) continue;
    const auto it = std::upper_bound(edges.begin(), edges.end(), x);
    observed[it - edges.begin() - 1] += 1.0;
    ++inside;
  }
  for (int b = 0; b < bins; ++b)
    expected[b] = (g.cdf(edges[b + 1]) - g.cdf(edges[b])) / 0.998 * inside;
  const double stat = chi_square_statistic(observed, expected);
  CHECK(chi_square_pvalue(stat, bins - 1.0) > 0.01);
}

TEST_CASE("sigma density: contracts and moments") {
  CHECK_THROWS(SigmaDensity(kArchGauss, 1000, 1));
  const SigmaDensity& fs = *garch_gauss_density().sigma_density();
  CHECK(fs.sigma_min() == doctest::Approx(0.5));  // sqrt(0.1/0.4)
  double second = 0.0, mass = 0.0;
  for (std::size_t k = 0; k < fs.nodes().size(); ++k) {
    second += fs.weights()[k] * fs.nodes()[k] * fs.nodes()[k];
    mass += fs.weights()[k];
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(second == doctest::Approx(1.0).epsilon(0.02));
  const double integral = integrate_adaptive([&](double s) { return fs.pdf(s); }, fs.sigma_min(),
                                             25.0, 1e-8, 1e-8);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("joint density: factorises in the iid case") {
  const GarchSpec spec{0.4, 0.0, 0.0, 0.0, 0.0, InnovationDist::gaussian()};
  const ImpliedDensity d(spec);
  for (double x : {-1.0, 0.3})
    for (double y : {-0.4, 1.2})
      CHECK(d.joint_pdf(x, y) ==
            doctest::Approx(d.marginal().pdf(x) * d.marginal().pdf(y)).epsilon(1e-6));
}

TEST_CASE("joint density: symmetries and unit mass for symmetric ARCH") {
  const ImpliedDensity& d = arch_gauss_density();
  for (double x : {-1.5, -0.3, 0.8})
    for (double y : {-0.9, 0.4, 2.0}) {
      CHECK(d.joint_pdf(x, y) == doctest::Approx(d.joint_pdf(-x, -y)).epsilon(1e-10));
      CHECK(d.joint_pdf(x, y) == doctest::Approx(d.joint_pdf(x, -y)).epsilon(1e-10));
    }
  const double mass = integrate_adaptive(
      [&](double x) {
        return integrate_adaptive([&](double y) { return d.joint_pdf(x, y); }, -60.0, 60.0,
                                  1e-7, 1e-7);
      },
      -60.0, 60.0, 1e-6, 1e-6);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("copula density: independence for the iid spec") {
  const GarchSpec spec{0.4, 0.0, 0.0, 0.0, 0.0, InnovationDist::gaussian()};
  const ImpliedDensity d(spec);
  for (double u : {0.1, 0.5, 0.9})
    for (double v : {0.25, 0.75})
      CHECK(d.copula_density(u, v) == doctest::Approx(1.0).epsilon(1e-3));
}

namespace {

// Quadrature marginalisation of the copula density at a handful of levels,
// including extreme ones where the midpoint grid sum is too coarse.
double quadrature_margin_deviation(const ImpliedDensity& d) {
  double worst = 0.0;
  for (double u : {0.0025, 0.05, 0.3, 0.71, 0.9975}) {
    const double row = integrate_graded([&](double v) { return d.copula_density(u, v); }, 1e-9,
                                        1.0 - 1e-9, 44, 12);
    const double col = integrate_graded([&](double v) { return d.copula_density(v, u); }, 1e-9,
                                        1.0 - 1e-9, 44, 12);
    worst = std::max({worst, std::fabs(row - 1.0), std::fabs(col - 1.0)});
  }
  return worst;
}

// Midpoint row/column sums away from the outermost band, where the cell
// midpoint resolves the density.
double central_band_margin_deviation(const CopulaGrid& g, int skip = 12) {
  double worst = 0.0;
  for (int i = skip; i < g.resolution - skip; ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < g.resolution; ++j) {
      row += g.at(i, j);
      col += g.at(j, i);
    }
    worst = std::max({worst, std::fabs(row / g.resolution - 1.0),
                      std::fabs(col / g.resolution - 1.0)});
  }
  return worst;
}

}  // namespace

TEST_CASE("copula grid: joint symmetry of symmetric ARCH and non-exchangeability") {
  const CopulaGrid grid = arch_gauss_density().copula_grid(200);
  const SymmetryReport rep = symmetry_report(grid);
  CHECK(rep.h_deviation < 1e-4);
  CHECK(rep.v_deviation < 1e-4);
  CHECK(rep.radial_deviation < 1e-4);
  CHECK(rep.exchange_deviation > 0.05);
  CHECK(quadrature_margin_deviation(arch_gauss_density()) < 1e-3);
  CHECK(central_band_margin_deviation(grid) < 1e-3);
}

TEST_CASE("copula grid: leverage keeps h-symmetry only") {
  const ImpliedDensity d({0.4, 0.3, 0.0, 0.4, 0.0, InnovationDist::gaussian()});
  const SymmetryReport rep = symmetry_report(d.copula_grid(200));
  CHECK(rep.h_deviation < 1e-4);
  CHECK(rep.v_deviation > 0.05);
  CHECK(rep.radial_deviation > 0.05);
}

TEST_CASE("copula grid: skewed innovations break every symmetry") {
  const ImpliedDensity d({0.4, 0.6, 0.0, 0.0, 0.0, InnovationDist::skew_student(4.0, 0.8)});
  const SymmetryReport rep = symmetry_report(d.copula_grid(200));
  CHECK(rep.h_deviation > 0.02);
  CHECK(rep.v_deviation > 0.02);
  CHECK(rep.radial_deviation > 0.02);
  CHECK(rep.exchange_deviation > 0.02);
}

TEST_CASE("copula grid: AR(1)-ARCH(1) is radially symmetric only") {
  const ImpliedDensity d({0.4, 0.6, 0.0, 0.0, 0.3, InnovationDist::gaussian()});
  const SymmetryReport rep = symmetry_report(d.copula_grid(200));
  CHECK(rep.radial_deviation < 1e-3);
  CHECK(rep.h_deviation > 0.02);
  CHECK(rep.v_deviation > 0.02);
}

TEST_CASE("independence distance: ARCH reference values") {
  const ImpliedDensity t4({0.4, 0.6, 0.0, 0.0, 0.0, InnovationDist::student(4.0)});
  const ImpliedDensity t25({0.4, 0.6, 0.0, 0.0, 0.0, InnovationDist::student(2.5)});
  CHECK(arch_gauss_density().copula_grid(200).independence_distance() ==
        doctest::Approx(0.213).epsilon(0.01 / 0.213));
  CHECK(t4.copula_grid(200).independence_distance() ==
        doctest::Approx(0.158).epsilon(0.01 / 0.158));
  CHECK(t25.copula_grid(200).independence_distance() ==
        doctest::Approx(0.092).epsilon(0.01 / 0.092));
}

TEST_CASE("independence distance: shrinks as the ARCH effect vanishes") {
  double prev = 1e9;
  for (double a1 : {0.6, 0.3, 0.1}) {
    const ImpliedDensity d({0.4, a1, 0.0, 0.0, 0.0, InnovationDist::gaussian()});
    const double dist = d.copula_grid(100).independence_distance();
    CHECK(dist < prev);
    prev = dist;
  }
}

TEST_CASE("independence distance: GARCH value and conditional D2") {
  const ImpliedDensity& d = garch_gauss_density();
  CHECK(d.copula_grid(200).independence_distance() == doctest::Approx(0.16).epsilon(0.02 / 0.16));
  CHECK(quadrature_margin_deviation(d) < 5e-3);
  CHECK(central_band_margin_deviation(d.copula_grid(200)) < 5e-3);
  const CopulaGrid c2_med = d.conditional_copula_grid(100, 0.5);
  CHECK(c2_med.independence_distance() == doctest::Approx(0.10).epsilon(0.02 / 0.10));
  const CopulaGrid c2_uq = d.conditional_copula_grid(100, 0.75);
  CHECK(c2_uq.independence_distance() == doctest::Approx(0.09).epsilon(0.02 / 0.09));
}

TEST_CASE("conditional copula: independence for ARCH and symmetry for GARCH") {
  CHECK(arch_gauss_density().conditional_copula_density(0.3, 0.7, 0.5) == doctest::Approx(1.0));
  const CopulaGrid grid = garch_gauss_density().conditional_copula_grid(100, 0.5);
  const SymmetryReport rep = symmetry_report(grid);
  CHECK(rep.h_deviation < 1e-3);
  CHECK(rep.v_deviation < 1e-3);
  CHECK_FALSE(ImpliedDensity::conditional_region_reliable(0.99));
  CHECK(ImpliedDensity::conditional_region_reliable(0.5));
}

TEST_CASE("absolute-value copula identity for symmetric ARCH") {
  // c1(u,v) = c*(|2u-1|, |2v-1|) with c* the copula density of (|X1|,|X2|).
  const ImpliedDensity& d = arch_gauss_density();
  const GridDensity& g = d.marginal();
  auto abs_copula = [&](double a, double b) {
    const double qa = g.quantile(0.5 * (1.0 + a));
    const double qb = g.quantile(0.5 * (1.0 + b));
    double joint = d.joint_pdf(qa, qb) + d.joint_pdf(-qa, qb) + d.joint_pdf(qa, -qb) +
                   d.joint_pdf(-qa, -qb);
    return joint / (4.0 * g.pdf(qa) * g.pdf(qb));
  };
  double worst = 0.0;
  for (double u : {0.1, 0.3, 0.62, 0.9})
    for (double v : {0.2, 0.48, 0.8}) {
      const double direct = d.copula_density(u, v);
      const double via_abs = abs_copula(std::fabs(2 * u - 1), std::fabs(2 * v - 1));
      worst = std::max(worst, std::fabs(direct - via_abs));
    }
  CHECK(worst < 1e-3);
}

TEST_CASE("implied leverage v-transform") {
  const ImpliedDensity plain(kArchGauss);
  double worst = 0.0;
  for (int i = 1; i < 100; ++i) {
    const double u = i / 100.0;
    worst = std::max(worst,
                     std::fabs(plain.implied_leverage_vtransform(u) - std::fabs(2 * u - 1)));
  }
  CHECK(worst < 1e-4);

  const ImpliedDensity lev({0.4, 0.3, 0.0, 0.4, 0.0, InnovationDist::gaussian()});
  CHECK(std::fabs(lev.implied_leverage_vtransform(0.5)) < 1e-9);
  CHECK(lev.implied_leverage_vtransform(1e-6) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(lev.implied_leverage_vtransform(1.0 - 1e-6) == doctest::Approx(1.0).epsilon(1e-4));

  Rng rng(9);
  std::vector<double> out(100000);
  for (double& o : out) o = lev.implied_leverage_vtransform(rng.uniform());
  CHECK(ks_statistic_uniform(out) < ks_critical_value(out.size(), 0.01));

  CHECK(std::fabs(lev.implied_leverage_vtransform(0.3) -
                  lev.implied_leverage_vtransform(0.7)) > 0.01);
}
