#include "lqg/field.hpp"

#include <cmath>

#include "lqg/errors.hpp"

namespace lqg {

void heat_semigroup_inplace(ScalarField& field, double t) {
  require(t >= 0.0, "heat_semigroup: negative time");
  const auto& lam2 = field.basis->eigenvalues;
  const double c = t / (4.0 * pi);
  for (std::size_t n = 0; n < field.coeffs.size(); ++n)
    field.coeffs[n] *= std::exp(-c * lam2[n]);
}

ScalarField heat_semigroup(const ScalarField& field, double t) {
  ScalarField out = field;
  heat_semigroup_inplace(out, t);
  return out;
}

void smooth_pn_inplace(ScalarField& field, double n_smooth) {
  require(n_smooth > 0.0, "smooth_pn: smoothing parameter must be positive");
  const auto& lam2 = field.basis->eigenvalues;
  const double c = 1.0 / (n_smooth * n_smooth);
  for (std::size_t n = 0; n < field.coeffs.size(); ++n)
    field.coeffs[n] *= std::exp(-c * lam2[n]);
}

ScalarField smooth_pn(const ScalarField& field, double n_smooth) {
  ScalarField out = field;
  smooth_pn_inplace(out, n_smooth);
  return out;
}

double evaluate(const ScalarField& field, double x, double y) {
  double s = 0.0;
  for (std::size_t n = 0; n < field.coeffs.size(); ++n)
    if (field.coeffs[n] != 0.0) s += field.coeffs[n] * field.basis->phi(n, x, y);
  return s;
}

double l2_norm2(const ScalarField& field) {
  double s = 0.0;
  for (double c : field.coeffs) s += c * c;
  return s;
}

double h1_seminorm2(const ScalarField& field) {
  double s = 0.0;
  const auto& lam2 = field.basis->eigenvalues;
  for (std::size_t n = 0; n < field.coeffs.size(); ++n)
    s += lam2[n] * field.coeffs[n] * field.coeffs[n];
  return s;
}

double field_mean(const ScalarField& field) {
  if (field.coeffs.empty()) return 0.0;
  return field.coeffs[0] / std::sqrt(field.basis->geometry.area());
}

double grid_integral(const GridField& grid, const TorusGeometry& geometry) {
  double s = 0.0;
  for (double v : grid.samples) s += v;
  const double n = static_cast<double>(grid.resolution);
  return s * geometry.area() / (n * n);
}

}  // namespace lqg
