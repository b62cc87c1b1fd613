#include "lqg/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "lqg/errors.hpp"

namespace lqg {

int SpectralBasis::max_wavenumber() const {
  int m = 0;
  for (const auto& k : modes) m = std::max({m, std::abs(k.k1), std::abs(k.k2)});
  return m;
}

double SpectralBasis::phi(std::size_t n, double x, double y) const {
  const ModeIndex k = modes[n];
  const double v = geometry.area();
  if (k.k1 == 0 && k.k2 == 0) return 1.0 / std::sqrt(v);
  const double amp = std::sqrt(2.0 / v);
  const double phase = geometry.k_step() * (k.k1 * x + k.k2 * y);
  // canonical member of the pair carries cos, its negation carries sin of
  // the negated phase; the pair spans the same 2d eigenspace either way
  if (canonical_mode(k)) return amp * std::cos(phase);
  return amp * std::sin(-phase);
}

SpectralBasis enumerate_modes(const TorusGeometry& geometry, double cutoff,
                              std::size_t mode_cap) {
  require(geometry.side_length > 0.0, "enumerate_modes: side_length must be positive");
  require(cutoff >= 0.0, "enumerate_modes: cutoff must be nonnegative");

  const double step = geometry.k_step();
  // lambda = step * |k| <= cutoff
  const double r = cutoff / step;
  const double r2 = r * r;
  const int kmax = static_cast<int>(std::floor(r + 1e-12));

  // counting estimate before allocation; area of the disc plus perimeter slack
  const double estimate = pi * r2 + 8.0 * (r + 1.0);
  if (estimate > static_cast<double>(mode_cap))
    throw resource_error("enumerate_modes: mode count estimate exceeds cap");

  SpectralBasis basis;
  basis.geometry = geometry;
  basis.cutoff = cutoff;
  for (int k1 = -kmax; k1 <= kmax; ++k1) {
    for (int k2 = -kmax; k2 <= kmax; ++k2) {
      const double q2 = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
      if (q2 <= r2 * (1.0 + 1e-14)) basis.modes.push_back({k1, k2});
    }
  }
  if (basis.modes.size() > mode_cap)
    throw resource_error("enumerate_modes: mode count exceeds cap");

  auto key = [step](ModeIndex k) {
    const double q2 = static_cast<double>(k.k1) * k.k1 + static_cast<double>(k.k2) * k.k2;
    return std::tuple(q2, k.k1, k.k2);
  };
  std::sort(basis.modes.begin(), basis.modes.end(),
            [&](ModeIndex a, ModeIndex b) { return key(a) < key(b); });

  basis.eigenvalues.resize(basis.modes.size());
  for (std::size_t n = 0; n < basis.modes.size(); ++n) {
    const ModeIndex k = basis.modes[n];
    const double q2 = static_cast<double>(k.k1) * k.k1 + static_cast<double>(k.k2) * k.k2;
    basis.eigenvalues[n] = step * step * q2;
  }
  return basis;
}

double weyl_ratio(const SpectralBasis& basis) {
  require(basis.dim() > 0, "weyl_ratio: empty basis");
  return basis.lambda2_max() / static_cast<double>(basis.dim());
}

double torus_distance(const TorusGeometry& geometry, double x1, double y1,
                      double x2, double y2) {
  const double l = geometry.side_length;
  auto wrap = [l](double d) {
    d = std::fmod(d, l);
    if (d > 0.5 * l) d -= l;
    if (d <= -0.5 * l) d += l;
    return d;
  };
  const double dx = wrap(x1 - x2);
  const double dy = wrap(y1 - y2);
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace lqg
