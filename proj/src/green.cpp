#include "lqg/green.hpp"

#include <cmath>

#include "lqg/errors.hpp"

namespace lqg {
namespace detail {

// pair identity: phi_cos(x) phi_cos(y) + phi_sin(x) phi_sin(y)
//   = (2/V) cos(k.(x - y)),  so only canonical modes are visited
double green_kernel_mixed(const SpectralBasis& basis, double n1, double n2,
                          Smoother smoother, double dx, double dy) {
  const double v = basis.geometry.area();
  const double step = basis.geometry.k_step();
  double s = 0.0;
  for (std::size_t n = 1; n < basis.dim(); ++n) {
    const ModeIndex k = basis.modes[n];
    if (!canonical_mode(k)) continue;
    const double lam2 = basis.eigenvalues[n];
    const double m = smoother_multiplier(smoother, lam2, n1) *
                     smoother_multiplier(smoother, lam2, n2);
    s += m * std::cos(step * (k.k1 * dx + k.k2 * dy)) / lam2;
  }
  return 2.0 * s / v;
}

double green_kernel(const SpectralBasis& basis, double n_smooth, Smoother smoother,
                    double dx, double dy) {
  return green_kernel_mixed(basis, n_smooth, n_smooth, smoother, dx, dy);
}

double sigma_kernel(const SpectralBasis& basis, double n_smooth, Smoother smoother) {
  const double v = basis.geometry.area();
  double s = 0.0;
  for (std::size_t n = 1; n < basis.dim(); ++n) {
    if (!canonical_mode(basis.modes[n])) continue;
    const double lam2 = basis.eigenvalues[n];
    const double m = smoother_multiplier(smoother, lam2, n_smooth);
    s += m * m / lam2;
  }
  return two_pi * 2.0 * s / v;
}

ScalarField green_difference_profile(const SpectralBasis& basis, double n1, double n2,
                                     Smoother smoother) {
  // G(delta, 0) as a field in delta: sin modes vanish at the origin
  ScalarField f = ScalarField::zero(basis);
  const double v = basis.geometry.area();
  for (std::size_t n = 1; n < basis.dim(); ++n) {
    if (!canonical_mode(basis.modes[n])) continue;
    const double lam2 = basis.eigenvalues[n];
    const double m = smoother_multiplier(smoother, lam2, n1) *
                     smoother_multiplier(smoother, lam2, n2);
    f.coeffs[n] = m / lam2 * std::sqrt(2.0 / v);
  }
  return f;
}

}  // namespace detail

static void check_resolved(const SpectralBasis& basis, double n_smooth) {
  require(n_smooth > 0.0, "green: smoothing parameter must be positive");
  if (basis.cutoff < 6.0 * n_smooth)
    throw config_error("green: basis cutoff below 6x the smoothing scale; "
                       "raise the cutoff or lower N");
}

double green_regularized(const SpectralBasis& basis, double n_smooth, double x1,
                         double y1, double x2, double y2, Smoother smoother) {
  check_resolved(basis, n_smooth);
  return detail::green_kernel(basis, n_smooth, smoother, x1 - x2, y1 - y2);
}

GreenLogDecomposition green_log_comparison(const SpectralBasis& basis, double n_smooth,
                                           double x1, double y1, double x2, double y2,
                                           Smoother smoother) {
  check_resolved(basis, n_smooth);
  GreenLogDecomposition out;
  out.green_value = detail::green_kernel(basis, n_smooth, smoother, x1 - x2, y1 - y2);
  const double d = torus_distance(basis.geometry, x1, y1, x2, y2);
  out.log_part = -std::log(d + 1.0 / n_smooth) / two_pi;
  out.remainder = out.green_value - out.log_part;
  return out;
}

double sigma_n(const SpectralBasis& basis, double n_smooth, Smoother smoother) {
  check_resolved(basis, n_smooth);
  return detail::sigma_kernel(basis, n_smooth, smoother);
}

}  // namespace lqg
