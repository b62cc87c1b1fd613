#include "lqg/flow.hpp"

#include <cmath>
#include <functional>

#include "lqg/errors.hpp"

namespace lqg {

DriftZ DriftZ::make(const TorusGeometry& geometry, const PunctureSet& punctures,
                    double xbar) {
  DriftZ d;
  d.xbar = xbar;
  d.puncture_rate = punctures.weight_sum() / (2.0 * geometry.area());
  d.inv_sqrt_area = 1.0 / std::sqrt(geometry.area());
  return d;
}

double drift_z(const DriftZ& drift, double t, double zero_mode_bm) {
  return drift.xbar + zero_mode_bm * drift.inv_sqrt_area + t * drift.puncture_rate;
}

double guarded_exp(double x, long* guard_hits) {
  if (x <= 0.0) return std::exp(x);
  if (guard_hits) ++*guard_hits;
  return 1.0 + x * std::exp(-x * x);
}

RemainderState v_step(RemainderState state, const ThetaField& theta, double z_value,
                      double dt, const FlowParams& params, const GridTransform& tf,
                      GridWork& work, long* guard_hits, double* max_beta_pnv) {
  require(dt > 0.0, "v_step: dt must be positive");
  const SpectralBasis& basis = *state.v.basis;
  require(tf.basis == &basis, "v_step: transform and state disagree on the basis");

  const double beta = params.beta;
  const double bz = beta * z_value;
  if (bz > 700.0) throw check_error("v_step: drift level overflow");
  const double scale = 0.5 * params.nu * beta * std::exp(bz);

  // smoothed remainder on the grid
  ScalarField pnv = state.v;
  for (std::size_t n = 0; n < pnv.coeffs.size(); ++n)
    pnv.coeffs[n] *=
        smoother_multiplier(params.smoother, basis.eigenvalues[n], params.n_smooth);
  GridField g;
  tf.synthesize(pnv, g, work);

  if (max_beta_pnv) {
    double mx = -1e300;
    for (double x : g.samples) mx = std::max(mx, beta * x);
    *max_beta_pnv = mx;
  }

  for (std::size_t i = 0; i < g.samples.size(); ++i)
    g.samples[i] = guarded_exp(beta * g.samples[i], guard_hits) * theta.values.samples[i];

  ScalarField hc = ScalarField::zero(basis);
  tf.analyze(g, hc, work);

  const double quarter = 1.0 / (4.0 * pi);
  for (std::size_t n = 0; n < state.v.coeffs.size(); ++n) {
    const double lam2 = basis.eigenvalues[n];
    const double decay = std::exp(-dt * lam2 * quarter);
    const double duhamel = (n == 0) ? dt : (1.0 - decay) / (lam2 * quarter);
    const double mult =
        smoother_multiplier(params.smoother, lam2, params.n_smooth);
    state.v.coeffs[n] = decay * state.v.coeffs[n] - scale * duhamel * mult * hc.coeffs[n];
  }
  state.time += dt;
  return state;
}

namespace {

Trajectory run_flow(const SpectralBasis& basis, const FlowParams& params,
                    const PunctureSet& punctures, const FlowRunConfig& config,
                    const std::function<const OuState&(int)>& path_state,
                    const ScalarField* v_init) {
  require(config.dt > 0.0 && config.t_final >= 0.0, "flow: bad time range");
  const int steps = static_cast<int>(std::llround(config.t_final / config.dt));

  GmcParams gmc;
  gmc.beta = params.beta;
  gmc.n_smooth = params.n_smooth;
  gmc.smoother = params.smoother;
  const int res = config.resolution > 0 ? config.resolution
                                        : recommended_resolution(basis);
  ThetaMaker maker(basis, gmc, punctures, res);
  GridWork work = maker.transform.make_work();
  const DriftZ drift = DriftZ::make(basis.geometry, punctures, config.xbar);

  Trajectory out;
  out.final_state.time = 0.0;
  out.final_state.v = v_init ? *v_init : ScalarField::zero(basis);
  require(out.final_state.v.basis == &basis, "flow: v_init on a foreign basis");
  out.max_beta_pnv.reserve(steps);

  auto record = [&](int k) {
    if (config.record_stride > 0 && k % config.record_stride == 0) {
      out.times.push_back(k * config.dt);
      out.snapshots.push_back(out.final_state.v.coeffs);
    }
  };
  record(0);

  double z = 0.0;
  for (int k = 0; k < steps; ++k) {
    const OuState& ou = path_state(k);
    const double t = k * config.dt;
    z = drift_z(drift, t, ou.zero_mode_bm);
    const ThetaField theta = maker.make_from_field(ou.field, t, work);
    double mx = 0.0;
    out.final_state = v_step(std::move(out.final_state), theta, z, config.dt, params,
                             maker.transform, work, &out.guard_hits, &mx);
    out.max_beta_pnv.push_back(mx);
    out.max_beta_pnv_overall = std::max(out.max_beta_pnv_overall, mx);
    record(k + 1);
  }
  const OuState& last = path_state(steps);
  out.final_z = drift_z(drift, steps * config.dt, last.zero_mode_bm);
  out.final_ou = last;
  return out;
}

}  // namespace

Trajectory solve_remainder(const SpectralBasis& basis, const FlowParams& params,
                           const PunctureSet& punctures, const FlowRunConfig& config,
                           std::uint64_t seed, std::uint64_t stream,
                           const ScalarField* v_init) {
  RngStream rng(seed, stream);
  OuState current = ou_initial(basis, rng);
  int have = 0;
  auto supply = [&](int k) -> const OuState& {
    while (have < k) {
      current = ou_step(std::move(current), config.dt, rng);
      ++have;
    }
    return current;
  };
  return run_flow(basis, params, punctures, config, supply, v_init);
}

Trajectory solve_remainder_on_path(const SpectralBasis& basis, const FlowParams& params,
                                   const PunctureSet& punctures,
                                   const FlowRunConfig& config,
                                   std::span<const OuState> path, int path_stride,
                                   const ScalarField* v_init) {
  const int steps = static_cast<int>(std::llround(config.t_final / config.dt));
  require(path_stride >= 1 &&
              path.size() > static_cast<std::size_t>(steps) * path_stride,
          "flow: path too short for the requested horizon");
  auto supply = [&](int k) -> const OuState& {
    return path[static_cast<std::size_t>(k) * path_stride];
  };
  return run_flow(basis, params, punctures, config, supply, v_init);
}

std::vector<OuState> simulate_ou_path(const SpectralBasis& basis, int steps, double dt,
                                      std::uint64_t seed, std::uint64_t stream) {
  RngStream rng(seed, stream);
  std::vector<OuState> path;
  path.reserve(steps + 1);
  path.push_back(ou_initial(basis, rng));
  for (int k = 0; k < steps; ++k) path.push_back(ou_step(path.back(), dt, rng));
  return path;
}

AssembledField assemble_u(const OuState& free_field, double z_value,
                          const RemainderState& remainder) {
  require(free_field.field.basis == remainder.v.basis,
          "assemble_u: basis mismatch");
  AssembledField out;
  out.fluctuation = free_field.field;
  for (std::size_t n = 0; n < out.fluctuation.coeffs.size(); ++n)
    out.fluctuation.coeffs[n] += remainder.v.coeffs[n];
  out.level = z_value;
  return out;
}

ScalarField girsanov_shift_back(const ScalarField& field, const GmcParams& params,
                                const PunctureSet& punctures) {
  const ScalarField shift = puncture_shift(*field.basis, params, punctures);
  ScalarField out = field;
  for (std::size_t n = 0; n < out.coeffs.size(); ++n)
    out.coeffs[n] -= shift.coeffs[n];
  return out;
}

std::vector<double> energy_difference_monitor(const Trajectory& a, const Trajectory& b,
                                              const SpectralBasis& basis, double dt) {
  require(a.snapshots.size() == b.snapshots.size() && !a.snapshots.empty(),
          "energy_difference_monitor: snapshot series mismatch");
  const std::size_t steps = a.snapshots.size();
  std::vector<double> energy(steps);
  double dissipated = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const auto& ca = a.snapshots[k];
    const auto& cb = b.snapshots[k];
    require(ca.size() == basis.dim() && cb.size() == basis.dim(),
            "energy_difference_monitor: snapshot dimension mismatch");
    double l2 = 0.0, h1 = 0.0;
    for (std::size_t n = 0; n < ca.size(); ++n) {
      const double w = ca[n] - cb[n];
      l2 += w * w;
      h1 += basis.eigenvalues[n] * w * w;
    }
    energy[k] = 0.5 * l2 + dissipated;
    dissipated += h1 * dt / (4.0 * pi);
  }
  return energy;
}

}  // namespace lqg
