#include "lqg/grid_transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "lqg/errors.hpp"

namespace lqg {

GridTransform::GridTransform(const SpectralBasis& basis, int resolution)
    : basis(&basis), n(resolution), kmax(basis.max_wavenumber()) {
  require(n >= 2 * kmax + 1, "GridTransform: resolution under the alias-free floor 2K+1");

  const int cols = lattice_cols();
  ey_re_.resize(static_cast<std::size_t>(n) * cols);
  ey_im_.resize(static_cast<std::size_t>(n) * cols);
  for (int j = 0; j < n; ++j) {
    for (int b = 0; b < cols; ++b) {
      const int k2 = b - kmax;
      const double ph = two_pi * j * k2 / n;
      ey_re_[static_cast<std::size_t>(j) * cols + b] = std::cos(ph);
      ey_im_[static_cast<std::size_t>(j) * cols + b] = std::sin(ph);
    }
  }
  cx_.resize(static_cast<std::size_t>(n) * (kmax + 1));
  sx_.resize(static_cast<std::size_t>(n) * (kmax + 1));
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a <= kmax; ++a) {
      const double ph = two_pi * i * a / n;
      cx_[static_cast<std::size_t>(i) * (kmax + 1) + a] = std::cos(ph);
      sx_[static_cast<std::size_t>(i) * (kmax + 1) + a] = std::sin(ph);
    }
  }

  const double v = basis.geometry.area();
  const std::size_t dim = basis.dim();
  slot_.resize(dim);
  sin_channel_.resize(dim);
  synth_scale_.resize(dim);
  ana_scale_.resize(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    const ModeIndex k = basis.modes[m];
    if (k.k1 == 0 && k.k2 == 0) {
      slot_[m] = kmax;  // (0, 0) slot in row 0
      sin_channel_[m] = 0;
      synth_scale_[m] = 1.0 / std::sqrt(v);
      ana_scale_[m] = std::sqrt(v);
    } else if (canonical_mode(k)) {
      slot_[m] = k.k1 * cols + (k.k2 + kmax);
      sin_channel_[m] = 0;
      synth_scale_[m] = std::sqrt(2.0 / v);
      ana_scale_[m] = std::sqrt(2.0 * v);
    } else {
      // sine partner lives in the imaginary part of the negated slot
      slot_[m] = (-k.k1) * cols + (-k.k2 + kmax);
      sin_channel_[m] = 1;
      synth_scale_[m] = -std::sqrt(2.0 / v);
      ana_scale_[m] = -std::sqrt(2.0 * v);
    }
  }
}

GridWork GridTransform::make_work() const {
  GridWork w;
  const std::size_t lat = static_cast<std::size_t>(kmax + 1) * lattice_cols();
  w.wre.resize(lat);
  w.wim.resize(lat);
  w.tre.resize(static_cast<std::size_t>(kmax + 1) * n);
  w.tim.resize(static_cast<std::size_t>(kmax + 1) * n);
  return w;
}

void GridTransform::scatter_coeffs(const ScalarField& field, GridWork& work) const {
  std::fill(work.wre.begin(), work.wre.end(), 0.0);
  std::fill(work.wim.begin(), work.wim.end(), 0.0);
  const double* c = field.coeffs.data();
  for (std::size_t m = 0; m < field.coeffs.size(); ++m) {
    double* dst = sin_channel_[m] ? work.wim.data() : work.wre.data();
    dst[slot_[m]] += c[m] * synth_scale_[m];
  }
}

// stage 1: T(a, j) = sum_b w(a, b) e^{i k2(b) y_j} over the requested j range
void GridTransform::row_stage(int j0, int nj, GridWork& work) const {
  const int cols = lattice_cols();
  for (int a = 0; a <= kmax; ++a) {
    const double* wr = work.wre.data() + static_cast<std::size_t>(a) * cols;
    const double* wi = work.wim.data() + static_cast<std::size_t>(a) * cols;
    double* tr = work.tre.data() + static_cast<std::size_t>(a) * n;
    double* ti = work.tim.data() + static_cast<std::size_t>(a) * n;
    for (int jj = 0; jj < nj; ++jj) {
      const int j = ((j0 + jj) % n + n) % n;
      const double* er = ey_re_.data() + static_cast<std::size_t>(j) * cols;
      const double* ei = ey_im_.data() + static_cast<std::size_t>(j) * cols;
      double sr = 0.0, si = 0.0;
      for (int b = 0; b < cols; ++b) {
        sr += wr[b] * er[b] - wi[b] * ei[b];
        si += wr[b] * ei[b] + wi[b] * er[b];
      }
      tr[jj] = sr;
      ti[jj] = si;
    }
  }
}

void GridTransform::synthesize(const ScalarField& field, GridField& out,
                               GridWork& work) const {
  out.resolution = n;
  out.samples.assign(static_cast<std::size_t>(n) * n, 0.0);
  scatter_coeffs(field, work);
  row_stage(0, n, work);
  // stage 2: u(i, j) = Re T(0, j) + sum_{a>=1} [Re T cos(a x_i) - Im T sin(a x_i)]
  for (int i = 0; i < n; ++i) {
    double* row = out.samples.data() + static_cast<std::size_t>(i) * n;
    const double* t0 = work.tre.data();
    for (int j = 0; j < n; ++j) row[j] = t0[j];
    const double* cxi = cx_.data() + static_cast<std::size_t>(i) * (kmax + 1);
    const double* sxi = sx_.data() + static_cast<std::size_t>(i) * (kmax + 1);
    for (int a = 1; a <= kmax; ++a) {
      const double cc = cxi[a], ss = sxi[a];
      const double* tr = work.tre.data() + static_cast<std::size_t>(a) * n;
      const double* ti = work.tim.data() + static_cast<std::size_t>(a) * n;
      for (int j = 0; j < n; ++j) row[j] += cc * tr[j] - ss * ti[j];
    }
  }
}

void GridTransform::synthesize_box(const ScalarField& field, int i0, int ni,
                                   int j0, int nj, std::vector<double>& out,
                                   GridWork& work) const {
  out.assign(static_cast<std::size_t>(ni) * nj, 0.0);
  scatter_coeffs(field, work);
  row_stage(j0, nj, work);
  for (int ii = 0; ii < ni; ++ii) {
    const int i = ((i0 + ii) % n + n) % n;
    double* row = out.data() + static_cast<std::size_t>(ii) * nj;
    const double* t0 = work.tre.data();
    for (int j = 0; j < nj; ++j) row[j] = t0[j];
    const double* cxi = cx_.data() + static_cast<std::size_t>(i) * (kmax + 1);
    const double* sxi = sx_.data() + static_cast<std::size_t>(i) * (kmax + 1);
    for (int a = 1; a <= kmax; ++a) {
      const double cc = cxi[a], ss = sxi[a];
      const double* tr = work.tre.data() + static_cast<std::size_t>(a) * n;
      const double* ti = work.tim.data() + static_cast<std::size_t>(a) * n;
      for (int j = 0; j < nj; ++j) row[j] += cc * tr[j] - ss * ti[j];
    }
  }
}

void GridTransform::analyze(const GridField& grid, ScalarField& out,
                            GridWork& work) const {
  require(grid.resolution == n, "analyze: grid resolution mismatch");
  const int cols = lattice_cols();
  // stage A: R(a, j) = sum_i g(i, j) e^{-i a x_i}
  std::fill(work.tre.begin(), work.tre.end(), 0.0);
  std::fill(work.tim.begin(), work.tim.end(), 0.0);
  for (int a = 0; a <= kmax; ++a) {
    double* rr = work.tre.data() + static_cast<std::size_t>(a) * n;
    double* ri = work.tim.data() + static_cast<std::size_t>(a) * n;
    for (int i = 0; i < n; ++i) {
      const double cc = cx_[static_cast<std::size_t>(i) * (kmax + 1) + a];
      const double ss = sx_[static_cast<std::size_t>(i) * (kmax + 1) + a];
      const double* g = grid.samples.data() + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) {
        rr[j] += cc * g[j];
        ri[j] -= ss * g[j];
      }
    }
  }
  // stage B: chat(a, b) = (1/n^2) sum_j R(a, j) e^{-i k2(b) y_j}
  std::fill(work.wre.begin(), work.wre.end(), 0.0);
  std::fill(work.wim.begin(), work.wim.end(), 0.0);
  const double inv = 1.0 / (static_cast<double>(n) * n);
  for (int a = 0; a <= kmax; ++a) {
    const double* rr = work.tre.data() + static_cast<std::size_t>(a) * n;
    const double* ri = work.tim.data() + static_cast<std::size_t>(a) * n;
    double* wr = work.wre.data() + static_cast<std::size_t>(a) * cols;
    double* wi = work.wim.data() + static_cast<std::size_t>(a) * cols;
    for (int j = 0; j < n; ++j) {
      const double* er = ey_re_.data() + static_cast<std::size_t>(j) * cols;
      const double* ei = ey_im_.data() + static_cast<std::size_t>(j) * cols;
      const double xr = rr[j] * inv, xi = ri[j] * inv;
      for (int b = 0; b < cols; ++b) {
        wr[b] += xr * er[b] + xi * ei[b];
        wi[b] += xi * er[b] - xr * ei[b];
      }
    }
  }
  out.basis = basis;
  out.coeffs.resize(basis->dim());
  for (std::size_t m = 0; m < out.coeffs.size(); ++m) {
    const double* src = sin_channel_[m] ? work.wim.data() : work.wre.data();
    out.coeffs[m] = src[slot_[m]] * ana_scale_[m];
  }
}

int recommended_resolution(const SpectralBasis& basis) {
  const int k = basis.max_wavenumber();
  int n = 4 * k;
  n += (4 - n % 4) % 4;
  return std::max(16, n);
}

}  // namespace lqg
