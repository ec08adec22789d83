#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace garchmimic {

// Average ranks in 1..n (ties averaged).
std::vector<double> average_ranks(std::span<const double> x);

// Kendall's tau-b via Knight's O(n log n) merge-sort algorithm.
double kendall_tau(std::span<const double> x, std::span<const double> y);

double spearman_rho(std::span<const double> x, std::span<const double> y);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

// One-sample Kolmogorov-Smirnov statistic against the U(0,1) df.
double ks_statistic_uniform(std::vector<double> sample);

// Asymptotic critical value: D_crit = c(alpha)/sqrt(n) with
// P(sqrt(n) D > c) = alpha from the Kolmogorov limit law.
double ks_critical_value(std::size_t n, double alpha);

// Hill estimator of the tail index from the k largest values of |x|.
double hill_tail_index(std::span<const double> x, std::size_t k);

// Upper-tail p-value of a chi-square statistic with df degrees of freedom.
double chi_square_pvalue(double statistic, double df);

// Pearson chi-square statistic for observed counts against expected counts.
double chi_square_statistic(std::span<const double> observed, std::span<const double> expected);

}  // namespace garchmimic
