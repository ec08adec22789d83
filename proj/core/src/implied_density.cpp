#include "garchmimic/implied_density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "garchmimic/parallel.hpp"
#include "garchmimic/quadrature.hpp"

namespace garchmimic {

namespace {

// E[1{eps<0} eps^2] for the variance recursion with leverage.
double negative_second_moment(const InnovationDist& d) {
  if (d.symmetric()) return 0.5;
  return integrate_graded(
      [&](double u) {
        const double e = d.quantile(u);
        return e < 0.0 ? e * e : 0.0;
      },
      0.0, d.cdf(0.0), 40, 16);
}

// Unconditional standard deviation when finite, else a crude scale.
double process_scale(const GarchSpec& spec) {
  const double a = spec.alpha1 + spec.gamma1 * negative_second_moment(spec.innovations);
  const double denom = 1.0 - spec.phi * spec.phi - a - spec.beta1;
  if (denom > 0.02) return std::sqrt(spec.alpha0 / denom);
  return 2.0 * std::sqrt(spec.alpha0);
}

// Symmetric stretched grid x = L tan(pi t / 2) reaching the target tail mass.
std::vector<double> stretched_grid(const GarchSpec& spec, const MarginalGridOptions& options) {
  const double scale = process_scale(spec);
  double x_max = scale * 12.0;  // light-tail fallback
  if (spec.alpha1 > 0.0) {
    const double zeta = tail_index(spec);
    x_max = std::max(x_max, scale * std::pow(options.tail_mass, -1.0 / zeta));
  }
  const double L = std::max(scale, 0.25);
  const double t_max = (2.0 / M_PI) * std::atan(x_max / L);
  const int m = options.nodes;
  std::vector<double> x(m);
  for (int i = 0; i < m; ++i) {
    const double t = -t_max + 2.0 * t_max * i / (m - 1);
    x[i] = L * std::tan(0.5 * M_PI * t);
  }
  return x;
}

std::vector<double> trapezoid_weights(const std::vector<double>& x) {
  const std::size_t m = x.size();
  std::vector<double> w(m);
  w[0] = 0.5 * (x[1] - x[0]);
  w[m - 1] = 0.5 * (x[m - 1] - x[m - 2]);
  for (std::size_t i = 1; i + 1 < m; ++i) w[i] = 0.5 * (x[i + 1] - x[i - 1]);
  return w;
}

}  // namespace

GridDensity solve_arch_marginal(const GarchSpec& spec, const MarginalGridOptions& options,
                                MarginalSolveInfo* info) {
  if (!spec.is_arch())
    throw std::invalid_argument("solve_arch_marginal: needs an ARCH-type spec (beta1 = 0)");
  if (!check_stationarity(spec).stationary)
    throw std::runtime_error("solve_arch_marginal: spec is not strictly stationary");

  const std::vector<double> x = stretched_grid(spec, options);
  const std::size_t m = x.size();
  const std::vector<double> w = trapezoid_weights(x);

  std::vector<double> f(m);
  const double s0 = process_scale(spec);
  for (std::size_t i = 0; i < m; ++i) f[i] = spec.innovations.pdf(x[i] / s0) / s0;

  if (spec.alpha1 + spec.gamma1 > 0.0 || spec.phi != 0.0) {
    // Row-major transition kernel K(x_i, y_j) with trapezoid weights.
    std::vector<double> kernel(m * m);
    parallel_for(m, [&](std::size_t i) {
      for (std::size_t j = 0; j < m; ++j) {
        const double s = spec.sigma(x[j], 0.0);
        kernel[i * m + j] =
            spec.innovations.pdf((x[i] - spec.phi * x[j]) / s) / s * w[j];
      }
    });

    std::vector<double> next(m);
    int iterations = 0;
    bool converged = false;
    while (iterations < options.max_iterations) {
      ++iterations;
      parallel_for(m, [&](std::size_t i) {
        double acc = 0.0;
        const double* row = kernel.data() + i * m;
        for (std::size_t j = 0; j < m; ++j) acc += row[j] * f[j];
        next[i] = acc;
      });
      double total = 0.0;
      for (std::size_t i = 0; i + 1 < m; ++i)
        total += 0.5 * (next[i] + next[i + 1]) * (x[i + 1] - x[i]);
      double diff = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        next[i] /= total;
        diff = std::max(diff, std::fabs(next[i] - f[i]));
      }
      f.swap(next);
      if (diff < options.tolerance) {
        converged = true;
        break;
      }
    }
    if (info) {
      info->iterations = iterations;
      info->converged = converged;
    }
    if (!converged && !info)
      throw std::runtime_error("solve_arch_marginal: power iteration did not converge");
  } else if (info) {
    info->iterations = 0;
    info->converged = true;
  }

  if (info) {
    info->boundary_mass = f.front() * w.front() + f.back() * w.back();
    info->boundary_warning = info->boundary_mass > options.tail_mass;
  }
  return GridDensity(x, f);
}

SigmaDensity::SigmaDensity(const GarchSpec& spec, std::size_t n_sim, std::uint64_t seed) {
  if (!(spec.beta1 > 0.0))
    throw std::invalid_argument(
        "SigmaDensity: ARCH-type specs have deterministic volatility; needs beta1 > 0");
  sigma_min_ = std::sqrt(spec.alpha0 / (1.0 - spec.beta1));

  const SimulatedPath path = simulate(spec, n_sim, 10000, seed);
  std::vector<double> z(path.sigma.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double gap = std::max(path.sigma[i] * path.sigma[i] - sigma_min_ * sigma_min_, 1e-300);
    z[i] = std::log(gap);
  }

  double mean = 0.0;
  for (double v : z) mean += v;
  mean /= z.size();
  double var = 0.0;
  for (double v : z) var += (v - mean) * (v - mean);
  var /= z.size() - 1;
  const double bandwidth = 1.06 * std::sqrt(var) * std::pow(static_cast<double>(z.size()), -0.2);

  const auto [zmin_it, zmax_it] = std::minmax_element(z.begin(), z.end());
  const double lo = *zmin_it - 4.0 * bandwidth, hi = *zmax_it + 4.0 * bandwidth;

  // Binned kernel estimate on the log scale.
  const int bins = 4000;
  std::vector<double> counts(bins, 0.0);
  const double bin_width = (hi - lo) / bins;
  for (double v : z) {
    const int b = std::clamp(static_cast<int>((v - lo) / bin_width), 0, bins - 1);
    counts[b] += 1.0;
  }
  const int grid_n = 801;
  z_grid_.resize(grid_n);
  z_pdf_.assign(grid_n, 0.0);
  const double inv_nh = 1.0 / (static_cast<double>(z.size()) * bandwidth);
  const double norm = 1.0 / std::sqrt(2.0 * M_PI);
  for (int g = 0; g < grid_n; ++g) z_grid_[g] = lo + (hi - lo) * g / (grid_n - 1);
  parallel_for(grid_n, [&](std::size_t g) {
    double acc = 0.0;
    for (int b = 0; b < bins; ++b) {
      if (counts[b] == 0.0) continue;
      const double t = (z_grid_[g] - (lo + (b + 0.5) * bin_width)) / bandwidth;
      if (std::fabs(t) > 8.0) continue;
      acc += counts[b] * std::exp(-0.5 * t * t);
    }
    z_pdf_[g] = acc * norm * inv_nh;
  });
  z_interp_ = MonotoneCubic(z_grid_, z_pdf_);

  // Quadrature nodes: decimate the z grid (trapezoid weights in z).
  const int step = 2;
  for (int g = 0; g < grid_n; g += step) {
    const double zg = z_grid_[g];
    const double dz = (hi - lo) / (grid_n - 1) * step;
    double wgt = z_pdf_[g] * dz;
    if (g == 0 || g + step >= grid_n) wgt *= 0.5;
    nodes_.push_back(std::sqrt(sigma_min_ * sigma_min_ + std::exp(zg)));
    weights_.push_back(wgt);
  }
  // Renormalise the tiny trapezoid defect so expectations are proper.
  double total = 0.0;
  for (double v : weights_) total += v;
  if (total > 0.0)
    for (double& v : weights_) v /= total;
}

double SigmaDensity::pdf(double s) const {
  if (s <= sigma_min_) return 0.0;
  const double gap = s * s - sigma_min_ * sigma_min_;
  const double z = std::log(gap);
  if (z < z_grid_.front() || z > z_grid_.back()) return 0.0;
  return std::max(0.0, z_interp_(z)) * 2.0 * s / gap;
}

double CopulaGrid::independence_distance() const {
  double acc = 0.0;
  for (double v : values) acc += std::fabs(v - 1.0);
  return acc / values.size();
}

double CopulaGrid::margin_deviation() const {
  const int m = resolution;
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < m; ++j) {
      row += at(i, j);
      col += at(j, i);
    }
    worst = std::max({worst, std::fabs(row / m - 1.0), std::fabs(col / m - 1.0)});
  }
  return worst;
}

SymmetryReport symmetry_report(const CopulaGrid& grid) {
  const int m = grid.resolution;
  SymmetryReport rep{0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double c = grid.at(i, j);
      rep.h_deviation = std::max(rep.h_deviation, std::fabs(c - grid.at(i, m - 1 - j)));
      rep.v_deviation = std::max(rep.v_deviation, std::fabs(c - grid.at(m - 1 - i, j)));
      rep.radial_deviation =
          std::max(rep.radial_deviation, std::fabs(c - grid.at(m - 1 - i, m - 1 - j)));
      rep.exchange_deviation = std::max(rep.exchange_deviation, std::fabs(c - grid.at(j, i)));
    }
  return rep;
}

ImpliedDensity::ImpliedDensity(const GarchSpec& spec, const MarginalGridOptions& options,
                               MarginalSolveInfo* info)
    : spec_(spec), marginal_(solve_arch_marginal(spec, options, info)) {}

ImpliedDensity::ImpliedDensity(const GarchSpec& spec, std::size_t n_sim, std::uint64_t seed,
                               const MarginalGridOptions& options)
    : spec_(spec) {
  if (spec.is_arch()) {
    marginal_ = solve_arch_marginal(spec, options);
    return;
  }
  if (spec.phi != 0.0)
    throw std::invalid_argument("ImpliedDensity: AR terms are only supported for ARCH specs");
  sigma_ = std::make_shared<SigmaDensity>(spec, n_sim, seed);

  const std::vector<double> x = stretched_grid(spec, options);
  std::vector<double> f(x.size());
  parallel_for(x.size(), [&](std::size_t i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < sigma_->nodes().size(); ++k) {
      const double s = sigma_->nodes()[k];
      acc += sigma_->weights()[k] * spec_.innovations.pdf(x[i] / s) / s;
    }
    f[i] = acc;
  });
  marginal_ = GridDensity(x, f);
}

double ImpliedDensity::joint_pdf(double x, double y) const {
  if (spec_.is_arch()) {
    const double s = spec_.sigma(x, 0.0);
    return spec_.innovations.pdf((y - spec_.phi * x) / s) / s * marginal_.pdf(x);
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < sigma_->nodes().size(); ++k) {
    const double s = sigma_->nodes()[k];
    const double s2 = spec_.sigma(x, s);
    acc += sigma_->weights()[k] * spec_.innovations.pdf(y / s2) / s2 *
           spec_.innovations.pdf(x / s) / s;
  }
  return acc;
}

double ImpliedDensity::copula_density(double u, double v) const {
  if (!(u > 0.0 && u < 1.0 && v > 0.0 && v < 1.0))
    throw std::domain_error("copula_density: arguments must lie inside (0,1)");
  const double qu = marginal_.quantile(u);
  const double qv = marginal_.quantile(v);
  return joint_pdf(qu, qv) / (marginal_.pdf(qu) * marginal_.pdf(qv));
}

CopulaGrid ImpliedDensity::copula_grid(int resolution) const {
  CopulaGrid grid;
  grid.resolution = resolution;
  grid.values.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);
  std::vector<double> q(resolution), fx(resolution);
  for (int i = 0; i < resolution; ++i) {
    q[i] = marginal_.quantile((i + 0.5) / resolution);
    fx[i] = marginal_.pdf(q[i]);
  }
  if (spec_.is_arch()) {
    parallel_for(resolution, [&](std::size_t i) {
      const double s = spec_.sigma(q[i], 0.0);
      for (int j = 0; j < resolution; ++j)
        grid.values[i * resolution + j] =
            spec_.innovations.pdf((q[j] - spec_.phi * q[i]) / s) / (s * fx[j]);
    });
    return grid;
  }
  const auto& sn = sigma_->nodes();
  const auto& sw = sigma_->weights();
  parallel_for(resolution, [&](std::size_t i) {
    std::vector<double> amp(sn.size()), vol(sn.size());
    for (std::size_t k = 0; k < sn.size(); ++k) {
      vol[k] = spec_.sigma(q[i], sn[k]);
      amp[k] = sw[k] * spec_.innovations.pdf(q[i] / sn[k]) / sn[k];
    }
    for (int j = 0; j < resolution; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < sn.size(); ++k)
        acc += amp[k] * spec_.innovations.pdf(q[j] / vol[k]) / vol[k];
      grid.values[i * resolution + j] = acc / (fx[i] * fx[j]);
    }
  });
  return grid;
}

// State shared by conditional-copula evaluations at a fixed middle value.
struct ImpliedDensity::ConditionalSlice {
  double z = 0.0;
  GridDensity left;   // law of X1 given X2 = z
  GridDensity right;  // law of X3 given X2 = z
};

ImpliedDensity::ConditionalSlice ImpliedDensity::conditional_slice(double w) const {
  ConditionalSlice slice;
  slice.z = marginal_.quantile(w);
  const std::vector<double>& x = marginal_.nodes();
  std::vector<double> g1(x.size()), g2(x.size());
  parallel_for(x.size(), [&](std::size_t i) {
    g1[i] = joint_pdf(x[i], slice.z);
    g2[i] = joint_pdf(slice.z, x[i]);
  });
  slice.left = GridDensity(x, g1);
  slice.right = GridDensity(x, g2);
  return slice;
}

double ImpliedDensity::conditional_copula_density(double u, double v, double w) const {
  if (spec_.is_arch()) return 1.0;  // first-order Markov: conditional independence
  const ConditionalSlice slice = conditional_slice(w);
  const double a = slice.left.quantile(u);
  const double b = slice.right.quantile(v);
  const auto& sn = sigma_->nodes();
  const auto& sw = sigma_->weights();
  double triple = 0.0;
  for (std::size_t k = 0; k < sn.size(); ++k) {
    const double s = sn[k];
    const double s2 = spec_.sigma(a, s);
    const double s3 = spec_.sigma(slice.z, s2);
    triple += sw[k] * spec_.innovations.pdf(a / s) / s * spec_.innovations.pdf(slice.z / s2) /
              s2 * spec_.innovations.pdf(b / s3) / s3;
  }
  const double fz = marginal_.pdf(slice.z);
  return triple / fz / (slice.left.pdf(a) * slice.right.pdf(b));
}

CopulaGrid ImpliedDensity::conditional_copula_grid(int resolution, double w) const {
  CopulaGrid grid;
  grid.resolution = resolution;
  grid.values.assign(static_cast<std::size_t>(resolution) * resolution, 1.0);
  if (spec_.is_arch()) return grid;

  const ConditionalSlice slice = conditional_slice(w);
  const double fz = marginal_.pdf(slice.z);
  std::vector<double> a(resolution), b(resolution), ga(resolution), gb(resolution);
  for (int i = 0; i < resolution; ++i) {
    a[i] = slice.left.quantile((i + 0.5) / resolution);
    b[i] = slice.right.quantile((i + 0.5) / resolution);
    ga[i] = slice.left.pdf(a[i]);
    gb[i] = slice.right.pdf(b[i]);
  }
  const auto& sn = sigma_->nodes();
  const auto& sw = sigma_->weights();
  parallel_for(resolution, [&](std::size_t i) {
    std::vector<double> amp(sn.size()), vol3(sn.size());
    for (std::size_t k = 0; k < sn.size(); ++k) {
      const double s = sn[k];
      const double s2 = spec_.sigma(a[i], s);
      vol3[k] = spec_.sigma(slice.z, s2);
      amp[k] = sw[k] * spec_.innovations.pdf(a[i] / s) / s *
               spec_.innovations.pdf(slice.z / s2) / s2;
    }
    for (int j = 0; j < resolution; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < sn.size(); ++k)
        acc += amp[k] * spec_.innovations.pdf(b[j] / vol3[k]) / vol3[k];
      grid.values[i * resolution + j] = acc / fz / (ga[i] * gb[j]);
    }
  });
  return grid;
}

double ImpliedDensity::implied_leverage_vtransform(double u) const {
  if (!spec_.is_arch() || spec_.phi != 0.0)
    throw std::invalid_argument("implied_leverage_vtransform: needs a pure ARCH spec");
  if (!spec_.innovations.symmetric())
    throw std::invalid_argument("implied_leverage_vtransform: needs symmetric innovations");
  if (!(spec_.alpha1 > 0.0))
    throw std::invalid_argument("implied_leverage_vtransform: needs alpha1 > 0");
  if (!(u > 0.0 && u < 1.0))
    throw std::domain_error("implied_leverage_vtransform: u outside (0,1)");
  const double ratio = std::sqrt(1.0 + spec_.gamma1 / spec_.alpha1);
  const double q = marginal_.quantile(u);
  if (u <= 0.5) return marginal_.cdf(-ratio * q) - u;
  return u - marginal_.cdf(-q / ratio);
}

}  // namespace garchmimic
