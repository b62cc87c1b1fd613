#pragma once
#include <span>
#include <vector>

#include "lqg/gmc.hpp"

namespace lqg {

struct FlowParams {
  double beta = 1.0;
  double nu = 1.0;
  double n_smooth = 8.0;
  Smoother smoother = Smoother::heat;
};

// spatially constant component of the solution:
//   z(t) = xbar + bm(t)/sqrt(V) + t * (sum_l a_l) / (2V)
struct DriftZ {
  double xbar = 0.0;
  double puncture_rate = 0.0;  // (sum_l a_l) / (2V)
  double inv_sqrt_area = 0.0;

  static DriftZ make(const TorusGeometry& geometry, const PunctureSet& punctures,
                     double xbar);
};
double drift_z(const DriftZ& drift, double t, double zero_mode_bm);

// one-sided exponential guard: equals e^x below zero, stays bounded above it.
// counts how often the x > 0 branch fires; the remainder stays nonpositive
// in exact arithmetic, so any hit indicates discretization trouble
double guarded_exp(double x, long* guard_hits);

struct RemainderState {
  double time = 0.0;
  ScalarField v;
};

// one step of the exponential left-point integrator for
//   dv/dt = (1/4pi) Lap v - (nu beta / 2) P_N[ e^{beta z} guard(beta P_N v) Theta ]
// diagnostics: if nonnull, max_beta_pnv gets max over the grid of beta P_N v
RemainderState v_step(RemainderState state, const ThetaField& theta, double z_value,
                      double dt, const FlowParams& params, const GridTransform& tf,
                      GridWork& work, long* guard_hits = nullptr,
                      double* max_beta_pnv = nullptr);

struct FlowRunConfig {
  double t_final = 1.0;
  double dt = 1e-3;
  int record_stride = 0;  // 0: keep only the final snapshot
  double xbar = 0.0;
  int resolution = 0;  // 0: pick from the basis
};

struct Trajectory {
  std::vector<double> times;            // recorded instants
  std::vector<std::vector<double>> snapshots;  // v coefficients at those instants
  std::vector<double> max_beta_pnv;     // per-step diagnostic
  double max_beta_pnv_overall = 0.0;
  long guard_hits = 0;
  RemainderState final_state;
  double final_z = 0.0;
  OuState final_ou;
};

// full driver: stationary free-field path regenerated step by step, chaos
// density rebuilt from the current field at every step, v advanced from zero
Trajectory solve_remainder(const SpectralBasis& basis, const FlowParams& params,
                           const PunctureSet& punctures, const FlowRunConfig& config,
                           std::uint64_t seed, std::uint64_t stream,
                           const ScalarField* v_init = nullptr);

// same integrator driven by a precomputed free-field path sampled at spacing
// config.dt / path_stride... path[k * path_stride] serves step k.  lets two
// resolutions share one noise realization
Trajectory solve_remainder_on_path(const SpectralBasis& basis, const FlowParams& params,
                                   const PunctureSet& punctures,
                                   const FlowRunConfig& config,
                                   std::span<const OuState> path, int path_stride,
                                   const ScalarField* v_init = nullptr);

std::vector<OuState> simulate_ou_path(const SpectralBasis& basis, int steps, double dt,
                                      std::uint64_t seed, std::uint64_t stream);

// recombine the three layers into the full solution
struct AssembledField {
  ScalarField fluctuation;  // free field plus remainder, mean-zero modes
  double level = 0.0;       // spatially constant part
};
AssembledField assemble_u(const OuState& free_field, double z_value,
                          const RemainderState& remainder);

// undo the puncture tilt on a field sampled under the shifted measure
ScalarField girsanov_shift_back(const ScalarField& field, const GmcParams& params,
                                const PunctureSet& punctures);

// pathwise contraction functional between two runs on the same noise:
//   E_k = 1/2 |w(t_k)|^2 + (1/4pi) sum_{j<k} |grad w(t_j)|^2 dt
// computed from stride-1 snapshot series
std::vector<double> energy_difference_monitor(const Trajectory& a, const Trajectory& b,
                                              const SpectralBasis& basis, double dt);

}  // namespace lqg
