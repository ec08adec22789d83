#include "garchmimic/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace garchmimic {

namespace {

// Counts inversions while merge-sorting `v` (workspace `tmp` same size).
std::uint64_t merge_count(std::vector<double>& v, std::vector<double>& tmp, std::size_t lo,
                          std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += mid - i;
      tmp[k++] = v[j++];
    } else {
      tmp[k++] = v[i++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
  return count;
}

// Sum over tie groups of t*(t-1)/2 in a sorted vector.
std::uint64_t tie_pairs(const std::vector<double>& sorted) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const std::uint64_t t = j - i;
    total += t * (t - 1) / 2;
    i = j;
  }
  return total;
}

}  // namespace

std::vector<double> average_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && x[idx[j]] == x[idx[i]]) ++j;
    const double avg = 0.5 * (i + j - 1) + 1.0;
    for (std::size_t k = i; k < j; ++k) ranks[idx[k]] = avg;
    i = j;
  }
  return ranks;
}

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("kendall_tau: bad input");
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return y[a] < y[b];
  });

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];

  // Joint ties (pairs tied in both coordinates).
  std::uint64_t tied_xy = 0;
  {
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i + 1;
      while (j < n && x[idx[j]] == x[idx[i]] && ys[j] == ys[i]) ++j;
      const std::uint64_t t = j - i;
      tied_xy += t * (t - 1) / 2;
      i = j;
    }
  }
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x[idx[i]];
  const std::uint64_t tied_x = tie_pairs(xs);

  std::vector<double> sorted_y = ys;
  std::sort(sorted_y.begin(), sorted_y.end());
  const std::uint64_t tied_y = tie_pairs(sorted_y);

  std::vector<double> tmp(n);
  const std::uint64_t swaps = merge_count(ys, tmp, 0, n);

  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const double concordant_minus_discordant =
      static_cast<double>(total) - static_cast<double>(tied_x) - static_cast<double>(tied_y) +
      static_cast<double>(tied_xy) - 2.0 * static_cast<double>(swaps);
  const double denom = std::sqrt(static_cast<double>(total - tied_x)) *
                       std::sqrt(static_cast<double>(total - tied_y));
  return concordant_minus_discordant / denom;
}

double spearman_rho(std::span<const double> x, std::span<const double> y) {
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  return pearson_correlation(rx, ry);
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("pearson: bad input");
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

double ks_statistic_uniform(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const std::size_t n = sample.size();
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = sample[i];
    d = std::max(d, (i + 1.0) / n - u);
    d = std::max(d, u - static_cast<double>(i) / n);
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  // Invert the Kolmogorov limit law 2*sum (-1)^{k-1} exp(-2 k^2 x^2) = alpha.
  double lo = 0.2, hi = 3.0;
  auto tail = [](double x) {
    double s = 0.0;
    for (int k = 1; k <= 100; ++k) {
      const double term = 2.0 * std::exp(-2.0 * k * k * x * x);
      s += (k % 2 == 1) ? term : -term;
      if (term < 1e-16) break;
    }
    return s;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (tail(mid) > alpha)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi) / std::sqrt(static_cast<double>(n));
}

double hill_tail_index(std::span<const double> x, std::size_t k) {
  if (k < 2 || k >= x.size()) throw std::invalid_argument("hill_tail_index: bad k");
  std::vector<double> a(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = std::fabs(x[i]);
  std::nth_element(a.begin(), a.end() - static_cast<std::ptrdiff_t>(k + 1), a.end());
  std::vector<double> top(a.end() - static_cast<std::ptrdiff_t>(k + 1), a.end());
  std::sort(top.begin(), top.end());
  const double x_k = top.front();
  double s = 0.0;
  for (std::size_t i = 1; i < top.size(); ++i) s += std::log(top[i] / x_k);
  return k / s;
}

double chi_square_pvalue(double statistic, double df) {
  boost::math::chi_squared_distribution<double> dist(df);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

double chi_square_statistic(std::span<const double> observed, std::span<const double> expected) {
  if (observed.size() != expected.size()) throw std::invalid_argument("chi2: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double d = observed[i] - expected[i];
    s += d * d / expected[i];
  }
  return s;
}

}  // namespace garchmimic
