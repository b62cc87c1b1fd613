#pragma once
#include "lqg/field.hpp"
#include "lqg/geometry.hpp"

namespace lqg {

// spectral smoothing multiplier shape, as a function of u = lambda^2 / N^2.
// `heat` is the default mollifier e^{-u}; `gauss` is a Schwartz alternative
// e^{-u^2} used to probe regularization independence
enum class Smoother { heat, gauss };

inline double smoother_multiplier(Smoother s, double lam2, double n_smooth) {
  const double u = lam2 / (n_smooth * n_smooth);
  return s == Smoother::heat ? std::exp(-u) : std::exp(-u * u);
}

namespace detail {
// ungated kernels: evaluate the smoothed zero-mean Green function of
// -Laplacian/2pi ... scaled so that  G(x,y) = sum_{n>=1} phi_n(x) phi_n(y) / lambda_n^2,
// smoothed on both arguments, over whatever basis is supplied.  callers that
// deliberately work on a truncated basis (finite-mode dynamics) use these;
// everything else goes through the gated wrappers below
double green_kernel(const SpectralBasis& basis, double n_smooth, Smoother smoother,
                    double dx, double dy);
double green_kernel_mixed(const SpectralBasis& basis, double n1, double n2,
                          Smoother smoother, double dx, double dy);
double sigma_kernel(const SpectralBasis& basis, double n_smooth, Smoother smoother);
// coefficients of delta -> G_{N1,N2}(delta) as a field over the basis
ScalarField green_difference_profile(const SpectralBasis& basis, double n1, double n2,
                                     Smoother smoother);
}  // namespace detail

// smoothed two-point Green value (P_N (x) P_N) G(x, y); requires the basis to
// resolve the smoothing scale: cutoff >= 6 N
double green_regularized(const SpectralBasis& basis, double n_smooth, double x1,
                         double y1, double x2, double y2,
                         Smoother smoother = Smoother::heat);

// short-distance structure: green_value = log_part + remainder with
// log_part = -(1/2pi) log(d + 1/N), d the torus distance
struct GreenLogDecomposition {
  double green_value = 0.0;
  double log_part = 0.0;
  double remainder = 0.0;
};
GreenLogDecomposition green_log_comparison(const SpectralBasis& basis, double n_smooth,
                                           double x1, double y1, double x2, double y2,
                                           Smoother smoother = Smoother::heat);

// Wick variance 2 pi (P_N (x) P_N) G(x, x); independent of x on the torus
double sigma_n(const SpectralBasis& basis, double n_smooth,
               Smoother smoother = Smoother::heat);

}  // namespace lqg
