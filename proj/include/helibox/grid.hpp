#pragma once

//----------------------------------------------------------------------------
// Uniform periodic cubic grid and the real <-> spectral transform pair.
//
// Physical storage is x-fastest: index = ix + n*(iy + n*iz), x_i = i*dx.
// Spectral storage is the half-complex layout of a real-to-complex DFT:
// kx runs over 0..n/2, ky and kz over the full signed set
// {0,...,n/2-1, -n/2,...,-1} scaled by 2*pi/L. Forward transforms are
// normalized by 1/n^3 so spectral entries are Fourier-series coefficients.
//----------------------------------------------------------------------------

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace helibox {

inline constexpr double two_pi = 6.28318530717958647692528676655900577;

class Grid {
public:
  Grid(int n, double L);
  ~Grid();
  Grid(const Grid&) = delete;
  Grid& operator=(const Grid&) = delete;

  int n() const { return n_; }
  double box_length() const { return L_; }
  double dx() const { return dx_; }
  double cell_volume() const { return dx_ * dx_ * dx_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }
  std::size_t spec_size() const {
    return static_cast<std::size_t>(n_) * n_ * (n_ / 2 + 1);
  }
  int nx_spec() const { return n_ / 2 + 1; }

  // Signed integer mode and physical wavenumber for a 1-d index in [0, n).
  // The same tables serve the halved x axis (indices 0..n/2).
  int mode(int idx) const { return modes_[idx]; }
  double wavenumber(int idx) const { return kphys_[idx]; }
  // Wavenumber used in derivatives: identical except the Nyquist mode is
  // dropped, which keeps odd derivatives of real data symmetric.
  double deriv_wavenumber(int idx) const { return kderiv_[idx]; }
  // Per-axis 2/3-rule mask: true when the mode is removed by dealiasing.
  bool cut(int idx) const { return cut_[idx] != 0; }

  std::size_t phys_index(int ix, int iy, int iz) const {
    return static_cast<std::size_t>(ix) +
           static_cast<std::size_t>(n_) * (iy + static_cast<std::size_t>(n_) * iz);
  }
  std::size_t spec_index(int ix, int iy, int iz) const {
    return static_cast<std::size_t>(ix) +
           static_cast<std::size_t>(nx_spec()) *
               (iy + static_cast<std::size_t>(n_) * iz);
  }
  double coord(int i) const { return dx_ * i; }

  // out[k] = (1/n^3) * DFT(in). Input is preserved.
  void forward(const double* in, std::complex<double>* out) const;
  // out[x] = sum_k in[k] exp(i k.x). Input is preserved (copied internally:
  // multidimensional c2r transforms would otherwise scribble on it).
  void inverse(const std::complex<double>* in, double* out) const;

private:
  int n_ = 0;
  double L_ = 0, dx_ = 0;
  std::vector<int> modes_;
  std::vector<double> kphys_, kderiv_;
  std::vector<char> cut_;
  void* plan_fwd_ = nullptr; // fftw_plan, kept opaque in the public header
  void* plan_bwd_ = nullptr;
};

using GridPtr = std::shared_ptr<const Grid>;

// n must be even and at least 8; L must be positive.
GridPtr make_grid(int n, double L = two_pi);

} // namespace helibox
