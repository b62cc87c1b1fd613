#include "lqg/gmc.hpp"

#include <cmath>

#include "lqg/errors.hpp"

namespace lqg {

double PunctureSet::weight_sum() const {
  double s = 0.0;
  for (const auto& p : entries) s += p.a;
  return s;
}

double PunctureSet::weight_max() const {
  double m = 0.0;
  for (const auto& p : entries) m = std::max(m, p.a);
  return m;
}

void PunctureSet::validate(const TorusGeometry& geometry) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (torus_distance(geometry, entries[i].x, entries[i].y, entries[j].x,
                         entries[j].y) < 1e-9)
        throw config_error("punctures: coincident insertion points");
}

void GmcParams::validate() const {
  require(beta > 0.0, "gmc: beta must be positive");
  require(n_smooth > 0.0, "gmc: smoothing parameter must be positive");
  if (beta * beta >= 2.0 && !allow_critical)
    throw config_error("gmc: beta^2 >= 2 leaves the L2 regime; "
                       "second-moment checks are invalid there (set allow_critical "
                       "to proceed anyway)");
}

ScalarField puncture_shift(const SpectralBasis& basis, const GmcParams& params,
                           const PunctureSet& punctures) {
  params.validate();
  punctures.validate(basis.geometry);
  ScalarField f = ScalarField::zero(basis);
  for (std::size_t n = 1; n < basis.dim(); ++n) {
    const double lam2 = basis.eigenvalues[n];
    const double m = smoother_multiplier(params.smoother, lam2, params.n_smooth);
    double s = 0.0;
    for (const auto& p : punctures.entries) s += p.a * basis.phi(n, p.x, p.y);
    f.coeffs[n] = two_pi * m * m * s / lam2;
  }
  return f;
}

namespace {

double log_prefactor_of(const GmcParams& p, double sigma) {
  if (p.norm == Normalization::wick_exact)
    return -0.5 * p.beta * p.beta * sigma;
  return -pi * p.beta * p.beta * p.c_mult -
         0.5 * p.beta * p.beta * std::log(p.n_smooth);
}

}  // namespace

ThetaMaker::ThetaMaker(const SpectralBasis& basis, const GmcParams& params,
                       const PunctureSet& punctures, int resolution)
    : transform(basis, resolution > 0 ? resolution : recommended_resolution(basis)),
      params_(params) {
  params_.validate();
  punctures.validate(basis.geometry);
  sigma_ = detail::sigma_kernel(basis, params_.n_smooth, params_.smoother);
  log_pref_ = log_prefactor_of(params_, sigma_);
  const ScalarField shift = puncture_shift(basis, params_, punctures);
  GridWork work = transform.make_work();
  transform.synthesize(shift, shift_grid_, work);
}

ThetaField ThetaMaker::make_from_field(const ScalarField& x, double time,
                                       GridWork& work) const {
  const SpectralBasis& basis = *transform.basis;
  ScalarField smoothed = x;
  for (std::size_t n = 0; n < smoothed.coeffs.size(); ++n)
    smoothed.coeffs[n] *=
        smoother_multiplier(params_.smoother, basis.eigenvalues[n], params_.n_smooth);
  ThetaField out;
  out.time = time;
  transform.synthesize(smoothed, out.values, work);
  const double beta = params_.beta;
  for (std::size_t i = 0; i < out.values.samples.size(); ++i) {
    const double expo =
        beta * (out.values.samples[i] + shift_grid_.samples[i]) + log_pref_;
    if (expo > 700.0)
      throw check_error("theta: exponent overflow, field excursion beyond range");
    out.values.samples[i] = std::exp(expo);
  }
  return out;
}

ThetaField ThetaMaker::make(const OuState& state, GridWork& work) const {
  return make_from_field(state.field, state.time, work);
}

double total_mass(const ThetaField& theta, const TorusGeometry& geometry) {
  return grid_integral(theta.values, geometry);
}

double first_moment_oracle(const SpectralBasis& basis, const GmcParams& params,
                           const PunctureSet& punctures, double x, double y) {
  params.validate();
  const double sigma = detail::sigma_kernel(basis, params.n_smooth, params.smoother);
  const ScalarField shift = puncture_shift(basis, params, punctures);
  const double b = params.beta;
  return std::exp(log_prefactor_of(params, sigma) + b * evaluate(shift, x, y) +
                  0.5 * b * b * sigma);
}

double second_moment_oracle(const SpectralBasis& basis, const GmcParams& params,
                            const PunctureSet& punctures, double x1, double y1,
                            double x2, double y2) {
  const double h1 = first_moment_oracle(basis, params, punctures, x1, y1);
  const double h2 = first_moment_oracle(basis, params, punctures, x2, y2);
  const double cov = two_pi * detail::green_kernel(basis, params.n_smooth,
                                                   params.smoother, x1 - x2, y1 - y2);
  return h1 * h2 * std::exp(params.beta * params.beta * cov);
}

Estimate negative_moment_estimate(const SpectralBasis& basis, const GmcParams& params,
                                  const PunctureSet& punctures, const BallRegion& ball,
                                  double a, int replicas, std::uint64_t seed,
                                  std::uint64_t stream_base) {
  params.validate();
  require(a > 0.0, "negative_moment: exponent must be positive");
  require(replicas >= 100, "negative_moment: need at least 100 replicas");
  require(ball.radius > 0.0 && ball.radius < 0.5 * basis.geometry.side_length,
          "negative_moment: ball radius outside (0, side/2)");

  const int n = recommended_resolution(basis);
  GridTransform tf(basis, n);
  GridWork work = tf.make_work();
  const double side = basis.geometry.side_length;
  const double h = side / n;
  const int i0 = static_cast<int>(std::floor((ball.cx - ball.radius) / h));
  const int i1 = static_cast<int>(std::ceil((ball.cx + ball.radius) / h));
  const int j0 = static_cast<int>(std::floor((ball.cy - ball.radius) / h));
  const int j1 = static_cast<int>(std::ceil((ball.cy + ball.radius) / h));
  const int ni = i1 - i0 + 1, nj = j1 - j0 + 1;

  std::vector<char> mask(static_cast<std::size_t>(ni) * nj);
  for (int ii = 0; ii < ni; ++ii)
    for (int jj = 0; jj < nj; ++jj) {
      const double px = (i0 + ii) * h, py = (j0 + jj) * h;
      mask[static_cast<std::size_t>(ii) * nj + jj] =
          torus_distance(basis.geometry, px, py, ball.cx, ball.cy) <= ball.radius;
    }

  const ScalarField shift = puncture_shift(basis, params, punctures);
  std::vector<double> shift_box;
  tf.synthesize_box(shift, i0, ni, j0, nj, shift_box, work);
  const double sigma = detail::sigma_kernel(basis, params.n_smooth, params.smoother);
  const double log_pref = log_prefactor_of(params, sigma);
  const double cell = h * h;
  const double beta = params.beta;

  ScalarField x = ScalarField::zero(basis);
  std::vector<double> box;
  std::vector<double> samples(replicas);
  for (int r = 0; r < replicas; ++r) {
    RngStream rng(seed, stream_base + static_cast<std::uint64_t>(r));
    for (std::size_t m = 1; m < basis.dim(); ++m) {
      const double lam2 = basis.eigenvalues[m];
      const double mult = smoother_multiplier(params.smoother, lam2, params.n_smooth);
      x.coeffs[m] = mult * std::sqrt(two_pi / lam2) * rng.normal();
    }
    tf.synthesize_box(x, i0, ni, j0, nj, box, work);
    double y = 0.0;
    for (std::size_t q = 0; q < box.size(); ++q)
      if (mask[q]) y += std::exp(beta * (box[q] + shift_box[q]) + log_pref);
    y *= cell;
    samples[r] = std::pow(y, -a);
  }
  return mean_estimate(samples);
}

}  // namespace lqg
