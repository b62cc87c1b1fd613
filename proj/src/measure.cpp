#include "lqg/measure.hpp"

#include <cmath>
#include <string>

#include "lqg/errors.hpp"

namespace lqg {

double LqgParams::shape() const {
  return (punctures.weight_sum() - euler_char * q()) / gmc.beta;
}

SeibergReport check_bounds(const LqgParams& params) {
  const double beta = params.gmc.beta;
  require(beta > 0.0, "check_bounds: beta must be positive");
  SeibergReport r;
  r.l2_margin = std::sqrt(2.0) - beta;
  r.weight_margin = params.punctures.weight_sum() - params.euler_char * params.q();
  const double amax = params.punctures.weight_max();
  r.insertion_margin = 2.0 / beta - amax;
  r.gwp_margin = std::sqrt(amax * amax + 4.0) - amax - beta;
  return r;
}

void require_admissible(const LqgParams& params, bool override_gate) {
  const SeibergReport r = check_bounds(params);
  if (r.admissible()) return;
  std::string msg = "admissibility gate:";
  if (r.l2_margin <= 0) msg += " beta >= sqrt(2) (chaos leaves L2);";
  if (r.weight_margin <= 0) msg += " total insertion weight too small;";
  if (r.insertion_margin <= 0) msg += " an insertion weight reaches 2/beta;";
  if (r.gwp_margin <= 0) msg += " well-posedness margin nonpositive;";
  if (override_gate) return;  // caller accepts the consequences
  throw config_error(msg + " (pass the override flag to proceed)");
}

namespace {

// 8-point Gauss-Legendre nodes and weights on [-1, 1]
constexpr double gl_x[4] = {0.1834346424956498, 0.5255324099163290,
                            0.7966664774136267, 0.9602898564975363};
constexpr double gl_w[4] = {0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

template <class F>
double integrate(F&& f, double lo, double hi, int panels) {
  double s = 0.0;
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = lo + (p + 0.5) * h;
    for (int q = 0; q < 4; ++q) {
      s += gl_w[q] * (f(c + 0.5 * h * gl_x[q]) + f(c - 0.5 * h * gl_x[q]));
    }
  }
  return s * 0.5 * h;
}

}  // namespace

GammaCheckResult zero_mode_gamma_check(double shape, double beta, double nu, double y) {
  require(shape > 0.0, "gamma_check: shape must be positive");
  require(beta > 0.0 && nu > 0.0 && y > 0.0,
          "gamma_check: beta, nu, y must be positive");
  const double s = shape;
  const double xstar = std::log(s / (nu * y)) / beta;
  const double lo = xstar - 64.0 / (s * beta);
  const double hi = xstar + 10.0 / beta;
  // factor out the peak value to keep the integrand in range
  const double log_peak = s * beta * xstar - nu * y * std::exp(beta * xstar);
  auto f = [&](double x) {
    return std::exp(s * beta * x - nu * y * std::exp(beta * x) - log_peak);
  };
  GammaCheckResult out;
  out.numeric = integrate(f, lo, hi, 400) * std::exp(log_peak);
  out.analytic = std::exp(std::lgamma(s) - s * std::log(nu * y)) / beta;
  out.rel_error = std::abs(out.numeric - out.analytic) / std::abs(out.analytic);
  return out;
}

double gamma_sample(RngStream& rng, double shape) {
  require(shape > 0.0, "gamma_sample: shape must be positive");
  if (shape < 1.0) {
    // boost to shape + 1, then scale back
    const double g = gamma_sample(rng, shape + 1.0);
    return g * std::pow(rng.uniform() + 1e-300, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u + 1e-300) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

Estimate expectation_under_rho(const SpectralBasis& basis, const LqgParams& params,
                               const std::function<double(const RhoSample&)>& observable,
                               int replicas, std::uint64_t seed,
                               std::uint64_t stream_base,
                               double* effective_sample_size) {
  require(replicas >= 100, "expectation_under_rho: need at least 100 replicas");
  require(params.nu > 0.0, "expectation_under_rho: nu must be positive");
  const double s = params.shape();
  require(s > 0.0, "expectation_under_rho: zero-mode shape must be positive "
                   "(admissibility)");
  params.gmc.validate();

  const ScalarField shift = puncture_shift(basis, params.gmc, params.punctures);
  ThetaMaker maker(basis, params.gmc, params.punctures);
  GridWork work = maker.transform.make_work();
  const double beta = params.gmc.beta;

  std::vector<double> values(replicas), weights(replicas);
  ScalarField shifted = ScalarField::zero(basis);
  for (int r = 0; r < replicas; ++r) {
    RngStream rng(seed, stream_base + static_cast<std::uint64_t>(r));
    const GffSample g = sample_gff(basis, rng);
    // chaos mass of the shifted sample; the shift rides inside ThetaMaker
    const ThetaField theta = maker.make_from_field(g.field, 0.0, work);
    const double y = total_mass(theta, basis.geometry);
    const double tau = gamma_sample(rng, s);
    const double xbar = std::log(tau / (params.nu * y)) / beta;
    for (std::size_t n = 0; n < shifted.coeffs.size(); ++n)
      shifted.coeffs[n] = g.field.coeffs[n] + shift.coeffs[n];
    values[r] = observable(RhoSample{shifted, xbar, y});
    weights[r] = std::pow(y, -s);
  }
  return jackknife_weighted_mean(values, weights, effective_sample_size);
}

namespace {

// mollified disc profile: analytic transform of the indicator of a radius-r0
// disc at the torus center (magnitude 2 pi r0 J1(lam r0) / lam), smoothed by
// the N = 4 mollifier, then height-normalized to peak 4
ScalarField bump_profile(const SpectralBasis& basis) {
  const double r0 = 0.25, cx = pi, cy = pi;
  const double v = basis.geometry.area();
  const double step = basis.geometry.k_step();
  ScalarField f = ScalarField::zero(basis);
  f.coeffs[0] = pi * r0 * r0 / std::sqrt(v);
  for (std::size_t n = 1; n < basis.dim(); ++n) {
    const ModeIndex k = basis.modes[n];
    // each mode reads the disc coefficient at its canonical wavenumber
    const ModeIndex kc = canonical_mode(k) ? k : ModeIndex{-k.k1, -k.k2};
    const double lam = std::sqrt(basis.eigenvalues[n]);
    const double mag =
        two_pi * r0 * std::cyl_bessel_j(1, lam * r0) / (lam * std::sqrt(v));
    const double phase = step * (kc.k1 * cx + kc.k2 * cy);
    const double mult = std::exp(-basis.eigenvalues[n] / 16.0);
    f.coeffs[n] = canonical_mode(k)
                      ? std::sqrt(2.0) * mult * mag * std::cos(phase)
                      : std::sqrt(2.0) * mult * mag * std::sin(phase);
  }
  const double scale = 4.0 / evaluate(f, cx, cy);
  for (double& c : f.coeffs) c *= scale;
  return f;
}

}  // namespace

double negative_nu_lower_bound(double beta, double nu, int m) {
  require(nu < 0.0, "negative_nu_lower_bound: nu must be negative");
  require(beta > 0.0, "negative_nu_lower_bound: beta must be positive");
  require(m >= 0, "negative_nu_lower_bound: m must be nonnegative");

  static const SpectralBasis basis = enumerate_modes(TorusGeometry{}, 20.0);
  static const ScalarField g = bump_profile(basis);
  static const double h1 = h1_seminorm2(g) + g.coeffs[0] * g.coeffs[0];
  static const GridTransform tf(basis, recommended_resolution(basis));

  GridWork work = tf.make_work();
  ScalarField f = g;
  for (double& c : f.coeffs) c *= m;
  GridField grid;
  tf.synthesize(f, grid, work);
  double integral = 0.0;
  for (double x : grid.samples) integral += std::exp(beta * x);
  integral *= basis.geometry.area() / (static_cast<double>(grid.resolution) * grid.resolution);
  return -0.5 * m * m * h1 - nu * integral;
}

}  // namespace lqg
