#pragma once
#include <vector>

#include "lqg/field.hpp"
#include "lqg/geometry.hpp"

namespace lqg {

// scratch buffers for GridTransform; callers in hot loops keep one around
// and pass it to every call, so the transform itself stays const and
// thread-compatible (one GridWork per thread)
struct GridWork {
  std::vector<double> wre, wim;  // half lattice (K+1) x (2K+1)
  std::vector<double> tre, tim;  // row transform (K+1) x n
};

// separable trig synthesis/analysis between basis coefficients and the
// uniform n x n grid.  exploits the Hermitian symmetry of real fields, so
// only wavenumbers k1 in [0, K] are carried through the two stages.
// exact in both directions for band-limited fields when n >= 2K + 1.
struct GridTransform {
  const SpectralBasis* basis = nullptr;
  int n = 0;
  int kmax = 0;

  GridTransform() = default;
  GridTransform(const SpectralBasis& basis, int resolution);

  GridWork make_work() const;

  void synthesize(const ScalarField& field, GridField& out, GridWork& work) const;
  void analyze(const GridField& grid, ScalarField& out, GridWork& work) const;

  // synthesis restricted to the index box [i0, i0+ni) x [j0, j0+nj) with
  // periodic wraparound; out is ni x nj row-major.  used for integrals over
  // small regions where a full grid would be wasted
  void synthesize_box(const ScalarField& field, int i0, int ni, int j0, int nj,
                      std::vector<double>& out, GridWork& work) const;

 private:
  int lattice_cols() const { return 2 * kmax + 1; }
  void scatter_coeffs(const ScalarField& field, GridWork& work) const;
  void row_stage(int j0, int nj, GridWork& work) const;

  // trig tables: ey over y (n x (2K+1)), cx/sx over x (n x (K+1))
  std::vector<double> ey_re_, ey_im_;
  std::vector<double> cx_, sx_;
  // per-mode scatter map into the half lattice
  std::vector<int> slot_;
  std::vector<char> sin_channel_;
  std::vector<double> synth_scale_, ana_scale_;
};

// production grid choice: at least 4x the largest wavenumber, never tiny
int recommended_resolution(const SpectralBasis& basis);

}  // namespace lqg
