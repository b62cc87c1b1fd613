#include "lqg/gff.hpp"

#include <cmath>

#include "lqg/errors.hpp"

namespace lqg {

GffSample sample_gff(const SpectralBasis& basis, RngStream& rng) {
  GffSample out;
  out.field = ScalarField::zero(basis);
  for (std::size_t n = 1; n < basis.dim(); ++n)
    out.field.coeffs[n] = std::sqrt(two_pi / basis.eigenvalues[n]) * rng.normal();
  return out;
}

OuState ou_initial(const SpectralBasis& basis, RngStream& rng) {
  OuState st;
  st.field = sample_gff(basis, rng).field;
  return st;
}

namespace {

template <class NoiseFn>
OuState ou_step_impl(OuState state, double dt, NoiseFn&& noise, double bm_noise) {
  require(dt >= 0.0, "ou_step: negative time step");
  const auto& basis = *state.field.basis;
  for (std::size_t n = 1; n < basis.dim(); ++n) {
    const double lam2 = basis.eigenvalues[n];
    const double decay = std::exp(-dt * lam2 / (4.0 * pi));
    const double sd = std::sqrt((two_pi / lam2) * (1.0 - decay * decay));
    state.field.coeffs[n] = decay * state.field.coeffs[n] + sd * noise(n);
  }
  state.zero_mode_bm += std::sqrt(dt) * bm_noise;
  state.time += dt;
  return state;
}

}  // namespace

OuState ou_step(OuState state, double dt, RngStream& rng) {
  auto draw = [&rng](std::size_t) { return rng.normal(); };
  const OuState mid = ou_step_impl(std::move(state), dt, draw, 0.0);
  // zero-mode noise drawn last, matching the documented order
  OuState out = mid;
  out.zero_mode_bm = mid.zero_mode_bm + std::sqrt(dt) * rng.normal();
  return out;
}

OuState ou_step_with_noise(OuState state, double dt, std::span<const double> mode_noise,
                           double bm_noise) {
  require(mode_noise.size() >= state.field.coeffs.size(),
          "ou_step_with_noise: noise vector shorter than basis");
  auto pick = [mode_noise](std::size_t n) { return mode_noise[n]; };
  return ou_step_impl(std::move(state), dt, pick, bm_noise);
}

double covariance_oracle(const SpectralBasis& basis, double n1, double n2, double t1,
                         double t2, double x1, double y1, double x2, double y2,
                         Smoother smoother) {
  const double v = basis.geometry.area();
  const double step = basis.geometry.k_step();
  const double tau = std::abs(t2 - t1);
  const double dx = x1 - x2, dy = y1 - y2;
  double s = 0.0;
  for (std::size_t n = 1; n < basis.dim(); ++n) {
    const ModeIndex k = basis.modes[n];
    if (!canonical_mode(k)) continue;
    const double lam2 = basis.eigenvalues[n];
    const double m = smoother_multiplier(smoother, lam2, n1) *
                     smoother_multiplier(smoother, lam2, n2) *
                     std::exp(-tau * lam2 / (4.0 * pi));
    s += m * std::cos(step * (k.k1 * dx + k.k2 * dy)) / lam2;
  }
  return two_pi * 2.0 * s / v;
}

}  // namespace lqg
