#pragma once
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lqg/gmc.hpp"
#include "lqg/measure.hpp"

namespace lqg {

// finite-mode Gibbs energy over the modes of a cutoff basis:
//   E(U) = sum_n (1/4pi) lam_n^2 psi_n^2 U_n^2
//        + nu * pref * integral exp(beta sum_m psi_m U_m phi_m)
//        - sum_l a_l sum_n psi_n U_n phi_n(x_l)
// psi_n is the smoothing multiplier at n_smooth, pref the chaos prefactor.
// the integral is the fixed-grid quadrature, so gradients below are exact
// derivatives of the discrete functional
struct GibbsParams {
  double beta = 1.0;
  double nu = 1.0;
  double n_smooth = 8.0;
  Normalization norm = Normalization::wick_exact;
  double c_mult = 0.0;
  Smoother smoother = Smoother::heat;
  PunctureSet punctures;
};

struct GibbsWork {
  GridWork gw;
  ScalarField field;
  GridField grid;
  ScalarField proj;
};

struct GibbsSystem {
  GibbsSystem(const SpectralBasis& basis, const GibbsParams& params,
              int resolution = 0);

  const SpectralBasis* basis;
  GibbsParams params;
  GridTransform transform;
  double sigma = 0.0;      // Wick variance over this basis
  double prefactor = 0.0;  // chaos normalization constant

  GibbsWork make_work() const;

  double energy(std::span<const double> u, GibbsWork& work) const;
  // fills grad (resized to dim); shares one transform pair with the energy
  double energy_and_grad(std::span<const double> u, std::vector<double>& grad,
                         GibbsWork& work) const;

  // stationary variance of mode n when nu = 0 (quadratic case); infinite for
  // the zero mode, which is then free
  double gaussian_variance(std::size_t n) const;

  // draw the exact nu = 0 stationary law for the nonzero modes, then the
  // zero-mode level from its exact conditional given that fluctuation (a
  // Gamma tilt against the realized chaos mass); good warm start
  void sample_warm_start(std::vector<double>& u, RngStream& rng, GibbsWork& work) const;

 private:
  std::vector<double> kinetic2_;  // (1/2pi) lam^2 psi^2
  std::vector<double> smooth1_;   // psi
  std::vector<double> punct_;     // sum_l a_l psi phi_n(x_l)
  double cell_ = 0.0;             // quadrature weight V/n^2
};

// unadjusted Langevin update U <- U - dt/2 grad E + sqrt(dt) xi
void langevin_step(std::vector<double>& u, const GibbsSystem& system, double dt,
                   RngStream& rng, GibbsWork& work);

// Metropolis-adjusted step; caches energy and gradient between calls
struct MalaState {
  std::vector<double> u;
  std::vector<double> grad;
  double energy = 0.0;

  static MalaState from(std::vector<double> u, const GibbsSystem& system,
                        GibbsWork& work);
};
bool mala_step(MalaState& state, const GibbsSystem& system, double dt,
               RngStream& rng, GibbsWork& work);

// start-vs-end comparison of observable laws along the Langevin flow; paired
// per-replica differences, so the z scores stay sharp
struct Observable {
  std::string name;
  std::function<double(std::span<const double>)> fn;
};

struct InvarianceOptions {
  int replicas = 1000;
  double t_final = 2.0;
  double dt = 1e-3;
  int mala_steps = 0;      // 0: trust the warm start (exact when nu == 0)
  double mala_dt = 0.08;
  std::uint64_t seed = 1;
  std::uint64_t stream_base = 0;
};

struct InvarianceCheck {
  std::string name;
  Estimate start;
  Estimate end;
  Estimate drift;  // paired end - start
  double z = 0.0;
};

struct InvarianceResult {
  std::vector<InvarianceCheck> checks;
  double mala_acceptance = 0.0;
};

InvarianceResult invariance_test(const GibbsSystem& system,
                                 const std::vector<Observable>& observables,
                                 const InvarianceOptions& options);

}  // namespace lqg
