#pragma once
#include <functional>

#include "lqg/gmc.hpp"

namespace lqg {

// full interacting-measure parameter pack; q is the background charge
// 2/beta + beta/2 and chi the Euler characteristic (zero on the torus)
struct LqgParams {
  GmcParams gmc;
  double nu = 1.0;
  PunctureSet punctures;
  int euler_char = 0;

  double q() const { return 2.0 / gmc.beta + 0.5 * gmc.beta; }
  double shape() const;  // zero-mode Gamma shape (sum a - chi q) / beta
};

// admissibility margins; the measure is well defined when all are positive
struct SeibergReport {
  double l2_margin = 0.0;         // sqrt(2) - beta
  double weight_margin = 0.0;     // sum_l a_l - chi q
  double insertion_margin = 0.0;  // 2/beta - max_l a_l
  double gwp_margin = 0.0;        // sqrt(a_max^2 + 4) - a_max - beta

  bool admissible() const {
    return l2_margin > 0 && weight_margin > 0 && insertion_margin > 0 &&
           gwp_margin > 0;
  }
};

SeibergReport check_bounds(const LqgParams& params);

// throws config_error naming every violated bound; no-op when admissible
void require_admissible(const LqgParams& params, bool override_gate = false);

// quadrature check of the zero-mode identity
//   integral exp{ s beta x - nu y e^{beta x} } dx = Gamma(s) (nu y)^{-s} / beta
struct GammaCheckResult {
  double numeric = 0.0;
  double analytic = 0.0;
  double rel_error = 0.0;
};
GammaCheckResult zero_mode_gamma_check(double shape, double beta, double nu, double y);

// draw from Gamma(shape, 1); deterministic given the stream state
double gamma_sample(RngStream& rng, double shape);

// one draw from the interacting measure's sampler: the shifted field, the
// zero-mode level, and the chaos mass that produced it
struct RhoSample {
  const ScalarField& field;  // GFF plus puncture shift, mean-zero part
  double xbar = 0.0;         // zero-mode level
  double mass = 0.0;         // total chaos mass of this replica
};

// self-normalized importance sampling under the interacting measure;
// effective_sample_size (if nonnull) receives (sum w)^2 / sum w^2
Estimate expectation_under_rho(const SpectralBasis& basis, const LqgParams& params,
                               const std::function<double(const RhoSample&)>& observable,
                               int replicas, std::uint64_t seed,
                               std::uint64_t stream_base = 0,
                               double* effective_sample_size = nullptr);

// value of the action functional L(m g) for the fixed bump profile g
// (mollified disc, normalized height); for nu < 0 the sequence m = 1, 2, ...
// grows without bound, witnessing the lost lower bound
double negative_nu_lower_bound(double beta, double nu, int m);

}  // namespace lqg
