#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lqg/errors.hpp"
#include "lqg/measure.hpp"

using namespace lqg;

namespace {

LqgParams reference_params() {
  LqgParams p;
  p.gmc.beta = 1.0;
  p.gmc.n_smooth = 4.0;
  p.nu = 1.0;
  p.punctures.entries = {{pi, pi, 1.0}};
  return p;
}

}  // namespace

TEST_CASE("admissibility margins at the reference point") {
  const LqgParams p = reference_params();
  CHECK(p.q() == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(p.shape() == doctest::Approx(1.0).epsilon(1e-15));

  const SeibergReport r = check_bounds(p);
  CHECK(r.l2_margin == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  CHECK(r.weight_margin == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.insertion_margin == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.gwp_margin == doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-14));
  CHECK(r.admissible());
  CHECK_NOTHROW(require_admissible(p));
}

TEST_CASE("no punctures closes the measure gate") {
  LqgParams p = reference_params();
  p.punctures.entries.clear();
  const SeibergReport r = check_bounds(p);
  CHECK(r.weight_margin == 0.0);
  CHECK_FALSE(r.admissible());
  CHECK_THROWS_AS(require_admissible(p), config_error);
  CHECK_NOTHROW(require_admissible(p, true));
  try {
    require_admissible(p);
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("weight") != std::string::npos);
  }
}

TEST_CASE("well-posedness margin closes exactly at the boundary coupling") {
  LqgParams p;
  p.gmc.beta = std::sqrt(4.0 / 3.0);
  p.punctures.entries = {{pi, pi, p.gmc.beta}};
  const SeibergReport r = check_bounds(p);
  CHECK(std::abs(r.gwp_margin) < 1e-12);
  CHECK_FALSE(r.admissible());
}

TEST_CASE("zero-mode integral reproduces the gamma function") {
  const GammaCheckResult unit = zero_mode_gamma_check(1.0, 1.0, 1.0, 1.0);
  CHECK(unit.analytic == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(unit.rel_error < 1e-10);

  RngStream rng(201, 0);
  for (int t = 0; t < 25; ++t) {
    const double s = 0.2 + 5.8 * rng.uniform();
    const double beta = 0.4 + 1.6 * rng.uniform();
    const double nu = 0.2 + 3.8 * rng.uniform();
    const double y = std::exp(std::log(0.1) + std::log(100.0) * rng.uniform());
    const GammaCheckResult r = zero_mode_gamma_check(s, beta, nu, y);
    CHECK(r.rel_error < 1e-8);
  }

  CHECK_THROWS_AS(zero_mode_gamma_check(0.0, 1.0, 1.0, 1.0), config_error);
  CHECK_THROWS_AS(zero_mode_gamma_check(1.0, 1.0, -1.0, 1.0), config_error);
}

TEST_CASE("gamma sampler has the right first two moments") {
  for (double shape : {0.5, 1.0, 3.7}) {
    RngStream rng(211, std::uint64_t(shape * 10));
    const int n = 40000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double g = gamma_sample(rng, shape);
      CHECK(g > 0.0);
      s1 += g;
      s2 += g * g;
    }
    const double mean = s1 / n;
    const double var = s2 / n - mean * mean;
    // moments of Gamma(shape, 1): mean = shape, var = shape
    CHECK(std::abs(mean - shape) < 5.0 * std::sqrt(shape / n) * std::sqrt(1.0 + 2.0 / shape));
    CHECK(std::abs(var - shape) < 0.05 * shape + 5.0 * shape / std::sqrt(double(n)));
  }
  RngStream a(221, 1), b(221, 1);
  CHECK(gamma_sample(a, 2.5) == gamma_sample(b, 2.5));
  CHECK_THROWS_AS(gamma_sample(a, 0.0), config_error);
}

TEST_CASE("importance sampler gates its inputs") {
  const SpectralBasis basis = enumerate_modes(TorusGeometry{}, 8.0);
  const LqgParams p = reference_params();
  auto one = [](const RhoSample&) { return 1.0; };

  CHECK_THROWS_AS(expectation_under_rho(basis, p, one, 50, 1), config_error);
  LqgParams bad = p;
  bad.nu = 0.0;
  CHECK_THROWS_AS(expectation_under_rho(basis, bad, one, 200, 1), config_error);
  bad = p;
  bad.punctures.entries.clear();  // shape drops to zero
  CHECK_THROWS_AS(expectation_under_rho(basis, bad, one, 200, 1), config_error);
}

TEST_CASE("importance sampler is exact on constants and finds the gamma mean") {
  const SpectralBasis basis = enumerate_modes(TorusGeometry{}, 12.0);
  LqgParams p = reference_params();
  p.gmc.n_smooth = 2.0;

  double ess = 0.0;
  const Estimate c =
      expectation_under_rho(basis, p, [](const RhoSample&) { return 1.0; }, 300, 231, 0, &ess);
  CHECK(c.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.std_error == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(ess > 0.0);
  CHECK(ess <= 300.0);

  // nu Y e^{beta xbar} is a Gamma(shape) draw independent of the weights,
  // so its weighted mean must recover the shape
  const double beta = p.gmc.beta, nu = p.nu;
  const Estimate g = expectation_under_rho(
      basis, p,
      [&](const RhoSample& s) { return nu * s.mass * std::exp(beta * s.xbar); }, 2000, 241);
  CHECK(std::abs(g.value - p.shape()) < 4.0 * g.std_error);
}

TEST_CASE("importance sampler is reproducible") {
  const SpectralBasis basis = enumerate_modes(TorusGeometry{}, 8.0);
  const LqgParams p = reference_params();
  auto f = [](const RhoSample& s) { return s.xbar; };
  const Estimate a = expectation_under_rho(basis, p, f, 150, 5, 100);
  const Estimate b = expectation_under_rho(basis, p, f, 150, 5, 100);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("action values along the bump ray grow without bound when nu < 0") {
  CHECK_THROWS_AS(negative_nu_lower_bound(1.0, 1.0, 1), config_error);
  CHECK_THROWS_AS(negative_nu_lower_bound(1.0, 0.0, 1), config_error);
  CHECK_THROWS_AS(negative_nu_lower_bound(-1.0, -1.0, 1), config_error);

  // at m = 0 only the area term survives
  CHECK(negative_nu_lower_bound(1.0, -1.0, 0) ==
        doctest::Approx(TorusGeometry{}.area()).epsilon(1e-12));

  const double l1 = negative_nu_lower_bound(1.0, -1.0, 1);
  CHECK(std::abs(l1 - 29.84) < 0.3);
  CHECK(negative_nu_lower_bound(1.0, -1.0, 3) == doctest::Approx(13144.5).epsilon(1e-3));

  double prev = l1;
  for (int m = 2; m <= 8; ++m) {
    const double lm = negative_nu_lower_bound(1.0, -1.0, m);
    CHECK(lm > prev);
    prev = lm;
  }
  CHECK(prev / l1 > 1e3);
}
