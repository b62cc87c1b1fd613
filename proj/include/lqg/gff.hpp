#pragma once
#include <span>

#include "lqg/field.hpp"
#include "lqg/green.hpp"
#include "lqg/rng.hpp"

namespace lqg {

// mean-zero free field: coefficient n >= 1 is N(0, 2pi / lambda_n^2); the
// constant mode carries no mass and stays exactly zero
struct GffSample {
  ScalarField field;
};

GffSample sample_gff(const SpectralBasis& basis, RngStream& rng);

// stationary dynamics: each coefficient runs an OU process
//   dc_n = -(lambda_n^2 / 4pi) c_n dt + dB_n
// started from its invariant law, while the zero mode rides a plain Brownian
// motion stored separately (it is not stationary and never folded into field)
struct OuState {
  double time = 0.0;
  ScalarField field;
  double zero_mode_bm = 0.0;
};

OuState ou_initial(const SpectralBasis& basis, RngStream& rng);

// exact transition over dt (no discretization error); draws one normal per
// nonzero mode in basis order, then one for the Brownian zero mode
OuState ou_step(OuState state, double dt, RngStream& rng);

// deterministic core used by ou_step; mode n >= 1 consumes mode_noise[n].
// exposed so tests can drive the transition with chosen noise
OuState ou_step_with_noise(OuState state, double dt, std::span<const double> mode_noise,
                           double bm_noise);

// closed-form space-time covariance of the smoothed stationary field:
//   E[(P_N1 X)(t1, p1) (P_N2 X)(t2, p2)]
double covariance_oracle(const SpectralBasis& basis, double n1, double n2, double t1,
                         double t2, double x1, double y1, double x2, double y2,
                         Smoother smoother = Smoother::heat);

}  // namespace lqg
