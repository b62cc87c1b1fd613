#pragma once
#include <cmath>
#include <cstddef>
#include <vector>

namespace lqg {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

struct TorusGeometry {
  double side_length = two_pi;

  double area() const { return side_length * side_length; }
  // wavenumber step: mode k lives at frequency k_step()*k
  double k_step() const { return two_pi / side_length; }
};

struct ModeIndex {
  int k1 = 0;
  int k2 = 0;

  bool operator==(const ModeIndex&) const = default;
};

// a mode is canonical if it is the cosine representative of its +-k pair
inline bool canonical_mode(ModeIndex k) {
  return k.k1 > 0 || (k.k1 == 0 && k.k2 > 0);
}

// real orthonormal Laplace eigenbasis on the torus, eigenvalues
// lambda_n^2 = (2pi/side)^2 (k1^2 + k2^2), listed with lambda <= cutoff.
// modes are sorted by (lambda^2, k1, k2); the list is closed under k -> -k,
// so cos/sin partners always travel together.
struct SpectralBasis {
  TorusGeometry geometry;
  double cutoff = 0.0;
  std::vector<ModeIndex> modes;
  std::vector<double> eigenvalues;  // lambda_n^2, eigenvalues[0] == 0

  std::size_t dim() const { return modes.size(); }
  double lambda2(std::size_t n) const { return eigenvalues[n]; }
  double lambda2_max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
  int max_wavenumber() const;  // max |k1|,|k2| over the list

  // pointwise value of basis function n at (x, y)
  double phi(std::size_t n, double x, double y) const;
};

inline constexpr std::size_t default_mode_cap = 4'000'000;

SpectralBasis enumerate_modes(const TorusGeometry& geometry, double cutoff,
                              std::size_t mode_cap = default_mode_cap);

// lambda2_max / dim; tends to 4pi/area as the cutoff grows
double weyl_ratio(const SpectralBasis& basis);

// shortest displacement representative on the torus, each component in
// (-side/2, side/2]
double torus_distance(const TorusGeometry& geometry, double x1, double y1,
                      double x2, double y2);

}  // namespace lqg
