#include "lqg/stats.hpp"

#include <algorithm>
#include <cmath>

#include "lqg/errors.hpp"

namespace lqg {

Estimate mean_estimate(std::span<const double> samples) {
  require(samples.size() >= 2, "mean_estimate: need at least two samples");
  const double n = static_cast<double>(samples.size());
  double m = 0.0;
  for (double x : samples) m += x;
  m /= n;
  double ss = 0.0;
  for (double x : samples) ss += (x - m) * (x - m);
  return {m, std::sqrt(ss / (n - 1.0) / n)};
}

Estimate variance_estimate(std::span<const double> samples) {
  require(samples.size() >= 4, "variance_estimate: need at least four samples");
  const double n = static_cast<double>(samples.size());
  double m = 0.0;
  for (double x : samples) m += x;
  m /= n;
  double m2 = 0.0, m4 = 0.0;
  for (double x : samples) {
    const double d = x - m;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m4 /= n;
  const double s2 = m2 * n / (n - 1.0);
  const double var_of_var = (m4 - (n - 3.0) / (n - 1.0) * m2 * m2) / n;
  return {s2, std::sqrt(std::max(0.0, var_of_var))};
}

double two_sample_z(const Estimate& a, const Estimate& b) {
  const double se = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
  return (a.value - b.value) / se;
}

double two_sample_z(std::span<const double> a, std::span<const double> b) {
  return two_sample_z(mean_estimate(a), mean_estimate(b));
}

Estimate jackknife_weighted_mean(std::span<const double> values,
                                 std::span<const double> weights,
                                 double* effective_sample_size) {
  require(values.size() == weights.size() && values.size() >= 2,
          "jackknife_weighted_mean: size mismatch or too few samples");
  const std::size_t n = values.size();
  double sw = 0.0, swg = 0.0, sw2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sw += weights[i];
    swg += weights[i] * values[i];
    sw2 += weights[i] * weights[i];
  }
  require(sw > 0.0, "jackknife_weighted_mean: nonpositive weight sum");
  if (effective_sample_size) *effective_sample_size = sw * sw / sw2;
  const double r = swg / sw;
  double mean_loo = 0.0;
  std::vector<double> loo(n);
  for (std::size_t i = 0; i < n; ++i) {
    loo[i] = (swg - weights[i] * values[i]) / (sw - weights[i]);
    mean_loo += loo[i];
  }
  mean_loo /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : loo) ss += (x - mean_loo) * (x - mean_loo);
  const double se = std::sqrt((static_cast<double>(n) - 1.0) / static_cast<double>(n) * ss);
  return {r, se};
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  require(!samples.empty(), "ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

double ks_pvalue(double statistic, std::size_t n) {
  const double rn = std::sqrt(static_cast<double>(n));
  const double t = statistic * (rn + 0.12 + 0.11 / rn);
  double p = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = 2.0 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * t * t);
    p += term;
    if (std::abs(term) < 1e-12) break;
  }
  return std::clamp(p, 0.0, 1.0);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace lqg
