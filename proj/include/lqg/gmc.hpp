#pragma once
#include <vector>

#include "lqg/gff.hpp"
#include "lqg/green.hpp"
#include "lqg/grid_transform.hpp"
#include "lqg/stats.hpp"

namespace lqg {

struct Puncture {
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;  // insertion weight
};

struct PunctureSet {
  std::vector<Puncture> entries;

  double weight_sum() const;
  double weight_max() const;
  // throws config_error on coincident points
  void validate(const TorusGeometry& geometry) const;
};

// normalization of the chaos density:
//   wick_exact  multiplies by e^{-beta^2 sigma_N / 2} (mean exactly one at
//               every truncation level)
//   power_law   multiplies by e^{-pi beta^2 c_mult} N^{-beta^2/2}; c_mult is
//               the multiplier-shape constant, zero for the heat smoother
enum class Normalization { wick_exact, power_law };

struct GmcParams {
  double beta = 1.0;
  double n_smooth = 8.0;
  Normalization norm = Normalization::wick_exact;
  double c_mult = 0.0;
  Smoother smoother = Smoother::heat;
  bool allow_critical = false;  // lets beta >= sqrt(2) through

  void validate() const;
};

// linear shift added by the punctures: 2pi sum_l a_l (P_N (x) P_N) G(x_l, .)
// returned as basis coefficients (exact over the supplied basis)
ScalarField puncture_shift(const SpectralBasis& basis, const GmcParams& params,
                           const PunctureSet& punctures);

struct ThetaField {
  double time = 0.0;
  GridField values;
};

// precomputed pipeline state -> chaos density on the grid.  construct once,
// call make() per sample; the Wick constant and the shift are taken over the
// same basis the samples live on, so mean-one is exact at finite truncation
struct ThetaMaker {
  ThetaMaker(const SpectralBasis& basis, const GmcParams& params,
             const PunctureSet& punctures, int resolution = 0);

  ThetaField make(const OuState& state, GridWork& work) const;
  ThetaField make_from_field(const ScalarField& x, double time, GridWork& work) const;

  double sigma() const { return sigma_; }
  double log_prefactor() const { return log_pref_; }
  const GridField& shift_grid() const { return shift_grid_; }
  const GmcParams& params() const { return params_; }

  GridTransform transform;

 private:
  GmcParams params_;
  GridField shift_grid_;
  double sigma_ = 0.0;
  double log_pref_ = 0.0;
};

double total_mass(const ThetaField& theta, const TorusGeometry& geometry);

// closed-form moments of the truncated chaos over the supplied basis
double first_moment_oracle(const SpectralBasis& basis, const GmcParams& params,
                           const PunctureSet& punctures, double x, double y);
double second_moment_oracle(const SpectralBasis& basis, const GmcParams& params,
                            const PunctureSet& punctures, double x1, double y1,
                            double x2, double y2);

// Monte Carlo estimate of E[ (integral of Theta over the ball)^{-a} ]
struct BallRegion {
  double cx = pi;
  double cy = pi;
  double radius = 0.5;
};
Estimate negative_moment_estimate(const SpectralBasis& basis, const GmcParams& params,
                                  const PunctureSet& punctures, const BallRegion& ball,
                                  double a, int replicas, std::uint64_t seed,
                                  std::uint64_t stream_base = 0);

}  // namespace lqg
