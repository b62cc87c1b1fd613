#pragma once
#include <vector>

#include "lqg/geometry.hpp"

namespace lqg {

// field as coefficients over a SpectralBasis; the basis outlives the field
struct ScalarField {
  const SpectralBasis* basis = nullptr;
  std::vector<double> coeffs;

  static ScalarField zero(const SpectralBasis& basis) {
    return {&basis, std::vector<double>(basis.dim(), 0.0)};
  }
};

// uniform samples on the n x n grid x_i = i*side/n, row-major samples[i*n + j]
// with i the x index and j the y index
struct GridField {
  int resolution = 0;
  std::vector<double> samples;

  static GridField zero(int n) {
    return {n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  }
  double& at(int i, int j) { return samples[static_cast<std::size_t>(i) * resolution + j]; }
  double at(int i, int j) const { return samples[static_cast<std::size_t>(i) * resolution + j]; }
};

// multiplier e^{-t lambda^2 / 4pi}: heat flow of d/dt - (1/4pi) Laplacian
ScalarField heat_semigroup(const ScalarField& field, double t);
void heat_semigroup_inplace(ScalarField& field, double t);

// mollifier P_N = e^{Laplacian / N^2}: multiplier e^{-lambda^2 / N^2}
ScalarField smooth_pn(const ScalarField& field, double n_smooth);
void smooth_pn_inplace(ScalarField& field, double n_smooth);

// direct pointwise evaluation, O(dim) per point; use GridTransform in loops
double evaluate(const ScalarField& field, double x, double y);

double l2_norm2(const ScalarField& field);        // sum c_n^2
double h1_seminorm2(const ScalarField& field);    // sum lambda_n^2 c_n^2
double field_mean(const ScalarField& field);      // zero-mode coefficient / sqrt(V)

// quadrature of grid samples with uniform weight V/n^2
double grid_integral(const GridField& grid, const TorusGeometry& geometry);

}  // namespace lqg
