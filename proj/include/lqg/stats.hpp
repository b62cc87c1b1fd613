#pragma once
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lqg {

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

Estimate mean_estimate(std::span<const double> samples);

// sample variance with its own standard error (moment formula)
Estimate variance_estimate(std::span<const double> samples);

// z-score of the difference of two independent estimates
double two_sample_z(const Estimate& a, const Estimate& b);
double two_sample_z(std::span<const double> a, std::span<const double> b);

// self-normalized weighted mean sum(w g) / sum(w) with leave-one-out jackknife
// standard error; effective_sample_size gets (sum w)^2 / sum w^2 if nonnull
Estimate jackknife_weighted_mean(std::span<const double> values,
                                 std::span<const double> weights,
                                 double* effective_sample_size = nullptr);

// one-sample Kolmogorov statistic against a cdf, plus the asymptotic p-value
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
double ks_pvalue(double statistic, std::size_t n);

// standard normal cdf
double normal_cdf(double x);

}  // namespace lqg
