#include "helibox/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace helibox {

namespace {

using cplx = std::complex<double>;

// Compensated (Kahan) serial sum: keeps quadrature error near rounding
// level independent of grid size and thread count.
double kahan_sum(const double* p, std::size_t m) {
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double y = p[i] - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

template <class F>
double kahan_sum_of(const double* p, std::size_t m, F f) {
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double y = f(p[i]) - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

// Applies op(kx, ky, kz, in_value) over the half-complex lattice.
template <class Op>
void spectral_apply(const Grid& g, const cplx* in, cplx* out, Op op) {
  const int n = g.n();
  const int nxs = g.nx_spec();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) collapse(2)
#endif
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy) {
      const double ky = g.deriv_wavenumber(iy);
      const double kz = g.deriv_wavenumber(iz);
      const std::size_t row = g.spec_index(0, iy, iz);
      for (int ix = 0; ix < nxs; ++ix) {
        const double kx = g.deriv_wavenumber(ix);
        out[row + ix] = op(kx, ky, kz, in[row + ix]);
      }
    }
}

inline cplx times_ik(double k, cplx v) { return cplx(-k * v.imag(), k * v.real()); }

} // namespace

ScalarField to_spectral(const ScalarField& f) {
  if (f.space() == Space::spectral) return f;
  ScalarField out(f.grid_ptr(), Space::spectral);
  f.grid().forward(f.phys(), out.spec());
  return out;
}

ScalarField to_physical(const ScalarField& f) {
  if (f.space() == Space::physical) return f;
  ScalarField out(f.grid_ptr(), Space::physical);
  f.grid().inverse(f.spec(), out.phys());
  return out;
}

VectorField to_physical(const VectorField& v) {
  VectorField out;
  out.x = to_physical(v.x);
  out.y = to_physical(v.y);
  out.z = to_physical(v.z);
  return out;
}

ScalarField derivative(const ScalarField& s, int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("derivative: bad axis");
  ScalarField sh = to_spectral(s);
  const Grid& g = s.grid();
  ScalarField dh(s.grid_ptr(), Space::spectral);
  spectral_apply(g, sh.spec(), dh.spec(), [axis](double kx, double ky, double kz, cplx v) {
    const double k = axis == 0 ? kx : (axis == 1 ? ky : kz);
    return times_ik(k, v);
  });
  return to_physical(dh);
}

VectorField gradient(const ScalarField& s) {
  ScalarField sh = to_spectral(s);
  const Grid& g = s.grid();
  VectorField out;
  for (int axis = 0; axis < 3; ++axis) {
    ScalarField dh(s.grid_ptr(), Space::spectral);
    spectral_apply(g, sh.spec(), dh.spec(),
                   [axis](double kx, double ky, double kz, cplx v) {
                     const double k = axis == 0 ? kx : (axis == 1 ? ky : kz);
                     return times_ik(k, v);
                   });
    out.comp(axis) = to_physical(dh);
  }
  return out;
}

ScalarField divergence(const VectorField& v) {
  const Grid& g = v.grid();
  ScalarField xh = to_spectral(v.x);
  ScalarField yh = to_spectral(v.y);
  ScalarField zh = to_spectral(v.z);
  ScalarField dh(v.grid_ptr(), Space::spectral);
  const cplx* px = xh.spec();
  const cplx* py = yh.spec();
  const cplx* pz = zh.spec();
  cplx* pd = dh.spec();
  const int n = g.n();
  const int nxs = g.nx_spec();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) collapse(2)
#endif
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy) {
      const double ky = g.deriv_wavenumber(iy);
      const double kz = g.deriv_wavenumber(iz);
      const std::size_t row = g.spec_index(0, iy, iz);
      for (int ix = 0; ix < nxs; ++ix) {
        const double kx = g.deriv_wavenumber(ix);
        pd[row + ix] = times_ik(kx, px[row + ix]) + times_ik(ky, py[row + ix]) +
                       times_ik(kz, pz[row + ix]);
      }
    }
  return to_physical(dh);
}

VectorField curl(const VectorField& v) {
  const Grid& g = v.grid();
  ScalarField xh = to_spectral(v.x);
  ScalarField yh = to_spectral(v.y);
  ScalarField zh = to_spectral(v.z);
  VectorField outh(v.grid_ptr(), Space::spectral);
  const cplx* px = xh.spec();
  const cplx* py = yh.spec();
  const cplx* pz = zh.spec();
  cplx* ox = outh.x.spec();
  cplx* oy = outh.y.spec();
  cplx* oz = outh.z.spec();
  const int n = g.n();
  const int nxs = g.nx_spec();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) collapse(2)
#endif
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy) {
      const double ky = g.deriv_wavenumber(iy);
      const double kz = g.deriv_wavenumber(iz);
      const std::size_t row = g.spec_index(0, iy, iz);
      for (int ix = 0; ix < nxs; ++ix) {
        const double kx = g.deriv_wavenumber(ix);
        const std::size_t i = row + ix;
        ox[i] = times_ik(ky, pz[i]) - times_ik(kz, py[i]);
        oy[i] = times_ik(kz, px[i]) - times_ik(kx, pz[i]);
        oz[i] = times_ik(kx, py[i]) - times_ik(ky, px[i]);
      }
    }
  return to_physical(outh);
}

ScalarField dealias(const ScalarField& f) {
  const Grid& g = f.grid();
  const bool was_physical = (f.space() == Space::physical);
  ScalarField h = was_physical ? to_spectral(f) : f;
  cplx* p = h.spec();
  const int n = g.n();
  const int nxs = g.nx_spec();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) collapse(2)
#endif
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy) {
      const bool cyz = g.cut(iy) || g.cut(iz);
      const std::size_t row = g.spec_index(0, iy, iz);
      for (int ix = 0; ix < nxs; ++ix)
        if (cyz || g.cut(ix)) p[row + ix] = cplx(0.0, 0.0);
    }
  return was_physical ? to_physical(h) : h;
}

VectorField dealias(const VectorField& f) {
  VectorField out;
  out.x = dealias(f.x);
  out.y = dealias(f.y);
  out.z = dealias(f.z);
  return out;
}

ScalarField inverse_laplacian_zero_mean(const ScalarField& s) {
  const Grid& g = s.grid();
  ScalarField sp = to_physical(s); // for the max-norm in the precondition
  const double* p = sp.phys();
  double mx = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) mx = std::max(mx, std::abs(p[i]));
  ScalarField sh = to_spectral(s);
  const double mean = std::abs(sh.spec()[0]);
  if (mean > 1e-10 * std::max(mx, 1e-300))
    throw std::invalid_argument(
        "inverse_laplacian_zero_mean: input mean " + std::to_string(mean) +
        " exceeds 1e-10 * max-norm " + std::to_string(mx));
  ScalarField out(s.grid_ptr(), Space::spectral);
  spectral_apply(g, sh.spec(), out.spec(), [](double kx, double ky, double kz, cplx v) {
    const double k2 = kx * kx + ky * ky + kz * kz;
    return k2 == 0.0 ? cplx(0.0, 0.0) : v / (-k2);
  });
  return to_physical(out);
}

VectorField project_solenoidal(const VectorField& v) {
  const Grid& g = v.grid();
  ScalarField xh = to_spectral(v.x);
  ScalarField yh = to_spectral(v.y);
  ScalarField zh = to_spectral(v.z);
  cplx* px = xh.spec();
  cplx* py = yh.spec();
  cplx* pz = zh.spec();
  const int n = g.n();
  const int nxs = g.nx_spec();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) collapse(2)
#endif
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy) {
      const double ky = g.deriv_wavenumber(iy);
      const double kz = g.deriv_wavenumber(iz);
      const std::size_t row = g.spec_index(0, iy, iz);
      for (int ix = 0; ix < nxs; ++ix) {
        const double kx = g.deriv_wavenumber(ix);
        const double k2 = kx * kx + ky * ky + kz * kz;
        if (k2 == 0.0) continue;
        const std::size_t i = row + ix;
        const cplx kd = (kx * px[i] + ky * py[i] + kz * pz[i]) / k2;
        px[i] -= kx * kd;
        py[i] -= ky * kd;
        pz[i] -= kz * kd;
      }
    }
  VectorField out;
  out.x = to_physical(xh);
  out.y = to_physical(yh);
  out.z = to_physical(zh);
  return out;
}

double volume_integral(const ScalarField& s) {
  require_physical(s, "volume_integral");
  return s.grid().cell_volume() * kahan_sum(s.phys(), s.grid().size());
}

double max_norm(const ScalarField& s) {
  require_physical(s, "max_norm");
  const double* p = s.phys();
  double mx = 0.0;
  for (std::size_t i = 0; i < s.grid().size(); ++i)
    mx = std::max(mx, std::abs(p[i]));
  return mx;
}

double max_norm(const VectorField& v) {
  require_physical(v.x, "max_norm");
  require_physical(v.y, "max_norm");
  require_physical(v.z, "max_norm");
  const double* px = v.x.phys();
  const double* py = v.y.phys();
  const double* pz = v.z.phys();
  double mx = 0.0;
  for (std::size_t i = 0; i < v.grid().size(); ++i) {
    const double m2 = px[i] * px[i] + py[i] * py[i] + pz[i] * pz[i];
    mx = std::max(mx, m2);
  }
  return std::sqrt(mx);
}

double l2_norm(const ScalarField& s) {
  require_physical(s, "l2_norm");
  const double sum2 =
      kahan_sum_of(s.phys(), s.grid().size(), [](double x) { return x * x; });
  return std::sqrt(s.grid().cell_volume() * sum2);
}

double l1_norm(const ScalarField& s) {
  require_physical(s, "l1_norm");
  const double sum =
      kahan_sum_of(s.phys(), s.grid().size(), [](double x) { return std::abs(x); });
  return s.grid().cell_volume() * sum;
}

double mean_value(const ScalarField& s) {
  require_physical(s, "mean_value");
  return kahan_sum(s.phys(), s.grid().size()) / static_cast<double>(s.grid().size());
}

double min_value(const ScalarField& s) {
  require_physical(s, "min_value");
  const double* p = s.phys();
  double mn = p[0];
  for (std::size_t i = 1; i < s.grid().size(); ++i) mn = std::min(mn, p[i]);
  return mn;
}

double gradient_max_norm(const VectorField& v) {
  double mx = 0.0;
  for (int j = 0; j < 3; ++j) {
    VectorField gj = gradient(v.comp(j));
    for (int i = 0; i < 3; ++i) mx = std::max(mx, max_norm(gj.comp(i)));
  }
  return mx;
}

double spectral_energy(const ScalarField& s) {
  ScalarField sh = to_spectral(s);
  const Grid& g = s.grid();
  const cplx* p = sh.spec();
  const int n = g.n();
  const int nxs = g.nx_spec();
  double sum = 0.0, comp = 0.0;
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy) {
      const std::size_t row = g.spec_index(0, iy, iz);
      for (int ix = 0; ix < nxs; ++ix) {
        const double w = (ix == 0 || ix == n / 2) ? 1.0 : 2.0;
        const double term = w * std::norm(p[row + ix]);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
      }
    }
  const double L = g.box_length();
  return L * L * L * sum;
}

} // namespace helibox
