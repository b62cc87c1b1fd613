#include "lqg/gibbs.hpp"

#include <cmath>
#include <limits>

#include "lqg/errors.hpp"

namespace lqg {

GibbsSystem::GibbsSystem(const SpectralBasis& basis, const GibbsParams& params,
                         int resolution)
    : basis(&basis),
      params(params),
      transform(basis, resolution > 0 ? resolution : recommended_resolution(basis)) {
  require(params.beta > 0.0 && params.n_smooth > 0.0, "gibbs: bad beta or smoothing");
  params.punctures.validate(basis.geometry);
  sigma = detail::sigma_kernel(basis, params.n_smooth, params.smoother);
  const double b2 = params.beta * params.beta;
  prefactor = params.norm == Normalization::wick_exact
                  ? std::exp(-0.5 * b2 * sigma)
                  : std::exp(-pi * b2 * params.c_mult) *
                        std::pow(params.n_smooth, -0.5 * b2);

  const std::size_t d = basis.dim();
  kinetic2_.resize(d);
  smooth1_.resize(d);
  punct_.resize(d);
  for (std::size_t n = 0; n < d; ++n) {
    const double lam2 = basis.eigenvalues[n];
    const double psi = smoother_multiplier(params.smoother, lam2, params.n_smooth);
    smooth1_[n] = psi;
    kinetic2_[n] = lam2 * psi * psi / two_pi;
    double s = 0.0;
    for (const auto& p : params.punctures.entries) s += p.a * basis.phi(n, p.x, p.y);
    punct_[n] = psi * s;
  }
  const double nn = static_cast<double>(transform.n);
  cell_ = basis.geometry.area() / (nn * nn);
}

GibbsWork GibbsSystem::make_work() const {
  GibbsWork w;
  w.gw = transform.make_work();
  w.field = ScalarField::zero(*basis);
  w.proj = ScalarField::zero(*basis);
  return w;
}

double GibbsSystem::energy(std::span<const double> u, GibbsWork& work) const {
  require(u.size() == basis->dim(), "gibbs energy: dimension mismatch");
  double kin = 0.0, lin = 0.0;
  for (std::size_t n = 0; n < u.size(); ++n) {
    kin += kinetic2_[n] * u[n] * u[n];
    lin += punct_[n] * u[n];
    work.field.coeffs[n] = smooth1_[n] * u[n];
  }
  transform.synthesize(work.field, work.grid, work.gw);
  double s = 0.0;
  for (double g : work.grid.samples) s += std::exp(params.beta * g);
  return 0.5 * kin + params.nu * prefactor * cell_ * s - lin;
}

double GibbsSystem::energy_and_grad(std::span<const double> u,
                                    std::vector<double>& grad, GibbsWork& work) const {
  require(u.size() == basis->dim(), "gibbs energy: dimension mismatch");
  grad.resize(u.size());
  double kin = 0.0, lin = 0.0;
  for (std::size_t n = 0; n < u.size(); ++n) {
    kin += kinetic2_[n] * u[n] * u[n];
    lin += punct_[n] * u[n];
    work.field.coeffs[n] = smooth1_[n] * u[n];
  }
  transform.synthesize(work.field, work.grid, work.gw);
  double s = 0.0;
  for (double& g : work.grid.samples) {
    g = std::exp(params.beta * g);
    s += g;
  }
  // analyze returns exactly (V/n^2) sum_i e_i phi_n(x_i): the quadrature
  // projection, hence the exact gradient of the discrete integral term
  transform.analyze(work.grid, work.proj, work.gw);
  const double c = params.nu * prefactor * params.beta;
  for (std::size_t n = 0; n < u.size(); ++n)
    grad[n] = kinetic2_[n] * u[n] + c * smooth1_[n] * work.proj.coeffs[n] - punct_[n];
  return 0.5 * kin + params.nu * prefactor * cell_ * s - lin;
}

double GibbsSystem::gaussian_variance(std::size_t n) const {
  if (kinetic2_[n] == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / kinetic2_[n];
}

void GibbsSystem::sample_warm_start(std::vector<double>& u, RngStream& rng,
                                    GibbsWork& work) const {
  const std::size_t d = basis->dim();
  u.assign(d, 0.0);
  for (std::size_t n = 1; n < d; ++n)
    u[n] = std::sqrt(gaussian_variance(n)) * rng.normal();
  // zero-mode level from its exact conditional given the fluctuation: the
  // density in xbar is e^{abar xbar - nu Y e^{beta xbar}} with Y the realized
  // chaos mass, so nu Y e^{beta xbar} is a Gamma(abar/beta) draw
  const double abar = params.punctures.weight_sum();
  if (params.nu > 0.0 && abar > 0.0) {
    for (std::size_t n = 0; n < d; ++n) work.field.coeffs[n] = smooth1_[n] * u[n];
    transform.synthesize(work.field, work.grid, work.gw);
    double y = 0.0;
    for (double g : work.grid.samples) y += std::exp(params.beta * g);
    y *= prefactor * cell_;
    const double v = basis->geometry.area();
    const double tau = gamma_sample(rng, abar / params.beta);
    const double xbar = std::log(tau / (params.nu * y)) / params.beta;
    u[0] = std::sqrt(v) * xbar;
  }
}

void langevin_step(std::vector<double>& u, const GibbsSystem& system, double dt,
                   RngStream& rng, GibbsWork& work) {
  static thread_local std::vector<double> grad;
  system.energy_and_grad(u, grad, work);
  const double root = std::sqrt(dt);
  for (std::size_t n = 0; n < u.size(); ++n)
    u[n] += -0.5 * dt * grad[n] + root * rng.normal();
}

MalaState MalaState::from(std::vector<double> u, const GibbsSystem& system,
                          GibbsWork& work) {
  MalaState st;
  st.u = std::move(u);
  st.energy = system.energy_and_grad(st.u, st.grad, work);
  return st;
}

bool mala_step(MalaState& state, const GibbsSystem& system, double dt,
               RngStream& rng, GibbsWork& work) {
  static thread_local std::vector<double> prop, pgrad;
  const std::size_t d = state.u.size();
  prop.resize(d);
  const double root = std::sqrt(dt);
  for (std::size_t n = 0; n < d; ++n)
    prop[n] = state.u[n] - 0.5 * dt * state.grad[n] + root * rng.normal();
  const double pe = system.energy_and_grad(prop, pgrad, work);

  // forward and reverse proposal residuals
  double fwd = 0.0, rev = 0.0;
  for (std::size_t n = 0; n < d; ++n) {
    const double rf = prop[n] - state.u[n] + 0.5 * dt * state.grad[n];
    const double rr = state.u[n] - prop[n] + 0.5 * dt * pgrad[n];
    fwd += rf * rf;
    rev += rr * rr;
  }
  // proposal variance is dt per coordinate, so the residual quadratic forms
  // carry 1/(2 dt)
  const double log_alpha = state.energy - pe - (rev - fwd) / (2.0 * dt);
  if (std::log(rng.uniform() + 1e-300) < log_alpha) {
    state.u.swap(prop);
    state.grad.swap(pgrad);
    state.energy = pe;
    return true;
  }
  return false;
}

InvarianceResult invariance_test(const GibbsSystem& system,
                                 const std::vector<Observable>& observables,
                                 const InvarianceOptions& options) {
  require(options.replicas >= 100, "invariance_test: need at least 100 replicas");
  require(options.dt > 0.0 && options.t_final > 0.0, "invariance_test: bad times");
  const int steps = static_cast<int>(std::llround(options.t_final / options.dt));
  const std::size_t m = observables.size();

  GibbsWork work = system.make_work();
  std::vector<std::vector<double>> start(m), finish(m);
  for (auto& v : start) v.reserve(options.replicas);
  for (auto& v : finish) v.reserve(options.replicas);

  long mala_accepts = 0, mala_total = 0;
  std::vector<double> u;
  for (int r = 0; r < options.replicas; ++r) {
    RngStream rng(options.seed, options.stream_base + static_cast<std::uint64_t>(r));
    system.sample_warm_start(u, rng, work);
    if (options.mala_steps > 0) {
      MalaState st = MalaState::from(std::move(u), system, work);
      for (int k = 0; k < options.mala_steps; ++k) {
        mala_accepts += mala_step(st, system, options.mala_dt, rng, work);
        ++mala_total;
      }
      u = std::move(st.u);
    }
    for (std::size_t j = 0; j < m; ++j) start[j].push_back(observables[j].fn(u));
    for (int k = 0; k < steps; ++k) langevin_step(u, system, options.dt, rng, work);
    for (std::size_t j = 0; j < m; ++j) finish[j].push_back(observables[j].fn(u));
  }

  InvarianceResult out;
  out.mala_acceptance =
      mala_total ? static_cast<double>(mala_accepts) / mala_total : 0.0;
  std::vector<double> diff(options.replicas);
  for (std::size_t j = 0; j < m; ++j) {
    InvarianceCheck c;
    c.name = observables[j].name;
    c.start = mean_estimate(start[j]);
    c.end = mean_estimate(finish[j]);
    for (int r = 0; r < options.replicas; ++r) diff[r] = finish[j][r] - start[j][r];
    c.drift = mean_estimate(diff);
    c.z = c.drift.value / c.drift.std_error;
    out.checks.push_back(std::move(c));
  }
  return out;
}

}  // namespace lqg
