#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lqg/errors.hpp"
#include "lqg/flow.hpp"
#include "lqg/gff.hpp"

using namespace lqg;

namespace {

const TorusGeometry geo;
const PunctureSet one_puncture{{{pi, pi, 1.0}}};

}  // namespace

TEST_CASE("constant component drifts linearly at the puncture rate") {
  const DriftZ d = DriftZ::make(geo, one_puncture, 0.3);
  CHECK(d.puncture_rate == doctest::Approx(1.0 / (8.0 * pi * pi)).epsilon(1e-15));
  CHECK(drift_z(d, 0.0, 0.0) == doctest::Approx(0.3).epsilon(1e-15));
  const double expect = 0.3 + 1.4 / two_pi + 2.0 / (8.0 * pi * pi);
  CHECK(drift_z(d, 2.0, 1.4) == doctest::Approx(expect).epsilon(1e-14));

  const DriftZ empty = DriftZ::make(geo, {}, 0.0);
  CHECK(empty.puncture_rate == 0.0);
}

TEST_CASE("guard equals the exponential below zero and stays tame above") {
  long hits = 0;
  for (double x : {-3.0, -0.5, -1e-12, 0.0}) CHECK(guarded_exp(x, &hits) == std::exp(x));
  CHECK(hits == 0);

  CHECK(guarded_exp(1e-8, &hits) == doctest::Approx(1.0 + 1e-8).epsilon(1e-15));
  CHECK(hits == 1);
  CHECK(guarded_exp(50.0, &hits) < 2.0);
  CHECK(hits == 2);
  CHECK(guarded_exp(-5.0, nullptr) == std::exp(-5.0));
}

TEST_CASE("zero coupling reduces the remainder step to pure heat decay") {
  const SpectralBasis basis = enumerate_modes(geo, 6.0);
  FlowParams params;
  params.nu = 0.0;
  params.n_smooth = 2.0;

  GmcParams gmc;
  gmc.n_smooth = params.n_smooth;
  ThetaMaker maker(basis, gmc, {});
  GridWork work = maker.transform.make_work();

  RngStream rng(301, 0);
  RemainderState st;
  st.v = ScalarField::zero(basis);
  for (auto& c : st.v.coeffs) c = 0.1 * rng.normal();
  const ScalarField v0 = st.v;

  const ThetaField theta = maker.make_from_field(ScalarField::zero(basis), 0.0, work);
  const double dt = 0.05;
  for (int k = 0; k < 4; ++k) st = v_step(std::move(st), theta, 0.0, dt, params,
                                           maker.transform, work);
  const ScalarField expect = heat_semigroup(v0, 4 * dt);
  for (std::size_t n = 0; n < basis.dim(); ++n)
    CHECK(st.v.coeffs[n] == doctest::Approx(expect.coeffs[n]).epsilon(1e-12));
  CHECK(st.time == doctest::Approx(4 * dt).epsilon(1e-14));
}

TEST_CASE("first step from rest matches the assembled right-hand side") {
  const SpectralBasis basis = enumerate_modes(geo, 8.0);
  FlowParams params;
  params.beta = 1.0;
  params.nu = 1.0;
  params.n_smooth = 4.0;

  GmcParams gmc;
  gmc.beta = params.beta;
  gmc.n_smooth = params.n_smooth;
  ThetaMaker maker(basis, gmc, one_puncture);
  GridWork work = maker.transform.make_work();

  RngStream rng(311, 0);
  const GffSample s = sample_gff(basis, rng);
  const ThetaField theta = maker.make_from_field(s.field, 0.0, work);
  const double z = 0.2, dt = 1e-3;

  RemainderState st;
  st.v = ScalarField::zero(basis);
  long hits = 0;
  double mx = -1.0;
  st = v_step(std::move(st), theta, z, dt, params, maker.transform, work, &hits, &mx);
  CHECK(hits == 0);
  CHECK(mx == 0.0);  // smoothed zero field

  // from v = 0 the update is: -(nu beta / 2) e^{beta z} D_n psi_n <Theta, phi_n>
  ScalarField proj = ScalarField::zero(basis);
  {
    GridField g = theta.values;
    maker.transform.analyze(g, proj, work);
  }
  const double scale = 0.5 * params.nu * params.beta * std::exp(params.beta * z);
  for (std::size_t n = 0; n < basis.dim(); ++n) {
    const double lam2 = basis.eigenvalues[n];
    const double quarter = lam2 / (4.0 * pi);
    const double duhamel = n == 0 ? dt : (1.0 - std::exp(-dt * quarter)) / quarter;
    const double psi = smoother_multiplier(params.smoother, lam2, params.n_smooth);
    const double expect = -scale * duhamel * psi * proj.coeffs[n];
    CHECK(st.v.coeffs[n] == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("split remainder step agrees with the full-field nonlinearity") {
  const SpectralBasis basis = enumerate_modes(geo, 8.0);
  FlowParams params;
  params.beta = 1.0;
  params.nu = 1.0;
  params.n_smooth = 4.0;

  GmcParams gmc;
  gmc.beta = params.beta;
  gmc.n_smooth = params.n_smooth;
  ThetaMaker maker(basis, gmc, one_puncture);
  GridWork work = maker.transform.make_work();
  const DriftZ drift = DriftZ::make(geo, one_puncture, 0.0);

  // march a few steps to reach a state with a genuinely negative remainder
  const double dt = 1e-3;
  std::vector<OuState> path = simulate_ou_path(basis, 6, dt, 321, 0);
  RemainderState st;
  st.v = ScalarField::zero(basis);
  for (int k = 0; k < 5; ++k) {
    const double z = drift_z(drift, k * dt, path[k].zero_mode_bm);
    const ThetaField theta = maker.make_from_field(path[k].field, k * dt, work);
    st = v_step(std::move(st), theta, z, dt, params, maker.transform, work);
  }

  const double z5 = drift_z(drift, 5 * dt, path[5].zero_mode_bm);
  const ThetaField theta5 = maker.make_from_field(path[5].field, 5 * dt, work);
  const RemainderState split = v_step(st, theta5, z5, dt, params, maker.transform, work);

  // same step, but the chaos density built from the combined field: the
  // smoothed remainder folds into the exponent instead of the guard factor
  ScalarField combined = path[5].field;
  for (std::size_t n = 0; n < basis.dim(); ++n) combined.coeffs[n] += st.v.coeffs[n];
  const ThetaField theta_comb = maker.make_from_field(combined, 5 * dt, work);
  ScalarField proj = ScalarField::zero(basis);
  {
    GridField g = theta_comb.values;
    proj = ScalarField::zero(basis);
    maker.transform.analyze(g, proj, work);
  }
  const double scale = 0.5 * params.nu * params.beta * std::exp(params.beta * z5);
  for (std::size_t n = 0; n < basis.dim(); ++n) {
    const double lam2 = basis.eigenvalues[n];
    const double quarter = lam2 / (4.0 * pi);
    const double decay = std::exp(-dt * quarter);
    const double duhamel = n == 0 ? dt : (1.0 - decay) / quarter;
    const double psi = smoother_multiplier(params.smoother, lam2, params.n_smooth);
    const double manual = decay * st.v.coeffs[n] - scale * duhamel * psi * proj.coeffs[n];
    CHECK(split.v.coeffs[n] == doctest::Approx(manual).epsilon(1e-10));
  }
}

TEST_CASE("driver records on the stride and reproduces bitwise") {
  const SpectralBasis basis = enumerate_modes(geo, 6.0);
  FlowParams params;
  params.n_smooth = 2.0;
  FlowRunConfig config;
  config.t_final = 0.02;
  config.dt = 5e-3;
  config.record_stride = 2;

  const Trajectory a = solve_remainder(basis, params, one_puncture, config, 331, 9);
  const Trajectory b = solve_remainder(basis, params, one_puncture, config, 331, 9);
  const Trajectory c = solve_remainder(basis, params, one_puncture, config, 331, 10);

  REQUIRE(a.times.size() == 3);
  CHECK(a.times[0] == 0.0);
  CHECK(a.times[1] == doctest::Approx(2 * config.dt).epsilon(1e-15));
  CHECK(a.times[2] == doctest::Approx(4 * config.dt).epsilon(1e-15));
  CHECK(a.max_beta_pnv.size() == 4);
  CHECK(a.final_state.v.coeffs == b.final_state.v.coeffs);
  CHECK(a.final_z == b.final_z);
  CHECK(a.final_state.v.coeffs != c.final_state.v.coeffs);

  // remainder stays nonpositive after smoothing and never trips the guard
  CHECK(a.guard_hits == 0);
  CHECK(a.max_beta_pnv_overall <= 1e-12);
}

TEST_CASE("coupled coarse and fine runs share one noise realization") {
  const SpectralBasis basis = enumerate_modes(geo, 6.0);
  FlowParams params;
  params.n_smooth = 2.0;

  const double dt = 2e-3;
  const int fine_steps = 20;
  const std::vector<OuState> path = simulate_ou_path(basis, fine_steps, 0.5 * dt, 341, 0);

  FlowRunConfig coarse;
  coarse.t_final = fine_steps * 0.5 * dt;
  coarse.dt = dt;
  FlowRunConfig fine = coarse;
  fine.dt = 0.5 * dt;

  const Trajectory tc = solve_remainder_on_path(basis, params, one_puncture, coarse, path, 2);
  const Trajectory tf = solve_remainder_on_path(basis, params, one_puncture, fine, path, 1);
  CHECK(tc.final_state.time == doctest::Approx(tf.final_state.time).epsilon(1e-12));

  double num = 0.0, den = 0.0;
  for (std::size_t n = 0; n < basis.dim(); ++n) {
    const double d = tc.final_state.v.coeffs[n] - tf.final_state.v.coeffs[n];
    num += d * d;
    den += tf.final_state.v.coeffs[n] * tf.final_state.v.coeffs[n];
  }
  CHECK(den > 0.0);
  CHECK(std::sqrt(num / den) < 0.2);  // same noise, so only discretization differs

  FlowRunConfig beyond = coarse;
  beyond.t_final = 10.0;
  CHECK_THROWS_AS(solve_remainder_on_path(basis, params, one_puncture, beyond, path, 2),
                  config_error);
}

TEST_CASE("assembly adds layers and the tilt subtracts off") {
  const SpectralBasis basis = enumerate_modes(geo, 4.0);
  RngStream rng(351, 0);
  OuState ou = ou_initial(basis, rng);
  RemainderState rem;
  rem.v = ScalarField::zero(basis);
  for (auto& c : rem.v.coeffs) c = 0.01 * rng.normal();

  const AssembledField u = assemble_u(ou, 1.7, rem);
  CHECK(u.level == 1.7);
  for (std::size_t n = 0; n < basis.dim(); ++n)
    CHECK(u.fluctuation.coeffs[n] == ou.field.coeffs[n] + rem.v.coeffs[n]);

  const SpectralBasis other = enumerate_modes(geo, 4.0);
  RemainderState foreign;
  foreign.v = ScalarField::zero(other);
  CHECK_THROWS_AS(assemble_u(ou, 0.0, foreign), config_error);

  GmcParams gmc;
  gmc.n_smooth = 2.0;
  const ScalarField shift = puncture_shift(basis, gmc, one_puncture);
  const ScalarField back = girsanov_shift_back(u.fluctuation, gmc, one_puncture);
  for (std::size_t n = 0; n < basis.dim(); ++n)
    CHECK(back.coeffs[n] == doctest::Approx(u.fluctuation.coeffs[n] - shift.coeffs[n])
                                .epsilon(1e-15));
}

TEST_CASE("difference energy vanishes on equal runs and dissipates otherwise") {
  const SpectralBasis basis = enumerate_modes(geo, 6.0);
  FlowParams params;
  params.n_smooth = 2.0;
  FlowRunConfig config;
  config.t_final = 0.1;
  config.dt = 1e-3;
  config.record_stride = 1;

  const Trajectory a = solve_remainder(basis, params, one_puncture, config, 361, 4);
  const std::vector<double> zero = energy_difference_monitor(a, a, basis, config.dt);
  for (double e : zero) CHECK(e == 0.0);

  ScalarField v0 = ScalarField::zero(basis);
  RngStream rng(361, 99);
  for (std::size_t n = 1; n < basis.dim(); ++n) v0.coeffs[n] = -0.05 * std::abs(rng.normal());
  const Trajectory b = solve_remainder(basis, params, one_puncture, config, 361, 4, &v0);

  const std::vector<double> e = energy_difference_monitor(a, b, basis, config.dt);
  REQUIRE(e.size() == a.snapshots.size());
  CHECK(e[0] == doctest::Approx(0.5 * l2_norm2(v0)).epsilon(1e-12));
  const double slack = 1e-8 * (1.0 + e[0]);
  for (std::size_t k = 1; k < e.size(); ++k) CHECK(e[k] <= e[k - 1] + slack);
}
