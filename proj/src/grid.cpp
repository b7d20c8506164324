#include "helibox/grid.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <string>

#include "helibox/errors.hpp"

namespace helibox {

namespace {
// FFTW's planner is not thread-safe; executing plans on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
} // namespace

Grid::Grid(int n, double L) : n_(n), L_(L) {
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("Grid: n must be even and >= 8, got " +
                                std::to_string(n));
  if (!(L > 0.0))
    throw std::invalid_argument("Grid: box length must be positive");
  dx_ = L_ / n_;

  modes_.resize(n_);
  kphys_.resize(n_);
  kderiv_.resize(n_);
  cut_.resize(n_);
  const double k0 = two_pi / L_;
  for (int i = 0; i < n_; ++i) {
    const int m = (i < n_ / 2) ? i : i - n_;
    modes_[i] = m;
    kphys_[i] = k0 * m;
    kderiv_[i] = (i == n_ / 2) ? 0.0 : k0 * m;
    cut_[i] = (3 * std::abs(m) >= n_) ? 1 : 0;
  }

  std::vector<double> rbuf(size());
  std::vector<std::complex<double>> cbuf(spec_size());
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_UNALIGNED lets the plans run on any heap buffer via the new-array
  // execute interface.
  plan_fwd_ = fftw_plan_dft_r2c_3d(
      n_, n_, n_, rbuf.data(), reinterpret_cast<fftw_complex*>(cbuf.data()),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_bwd_ = fftw_plan_dft_c2r_3d(
      n_, n_, n_, reinterpret_cast<fftw_complex*>(cbuf.data()), rbuf.data(),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan_fwd_ || !plan_bwd_)
    throw SolverError("Grid: FFTW plan creation failed");
}

Grid::~Grid() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

void Grid::forward(const double* in, std::complex<double>* out) const {
  // Out-of-place r2c preserves its input.
  fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_fwd_),
                       const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
  const double scale = 1.0 / static_cast<double>(size());
  const std::size_t m = spec_size();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(m); ++i) out[i] *= scale;
}

void Grid::inverse(const std::complex<double>* in, double* out) const {
  std::vector<std::complex<double>> scratch(in, in + spec_size());
  fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_bwd_),
                       reinterpret_cast<fftw_complex*>(scratch.data()), out);
}

GridPtr make_grid(int n, double L) { return std::make_shared<const Grid>(n, L); }

} // namespace helibox
