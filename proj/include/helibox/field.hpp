#pragma once

// Scalar and vector fields tied to a Grid. A field is in exactly one
// representation at a time; transforms produce new fields. Pointwise
// arithmetic requires physical space and matching grids.

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "helibox/grid.hpp"

namespace helibox {

enum class Space { physical, spectral };

class ScalarField {
public:
  ScalarField() = default;
  explicit ScalarField(GridPtr g, Space s = Space::physical);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  Space space() const { return space_; }
  bool empty() const { return grid_ == nullptr; }

  double* phys();
  const double* phys() const;
  std::complex<double>* spec();
  const std::complex<double>* spec() const;

  std::vector<double>& phys_vec() { return phys_; }
  const std::vector<double>& phys_vec() const { return phys_; }
  std::vector<std::complex<double>>& spec_vec() { return spec_; }
  const std::vector<std::complex<double>>& spec_vec() const { return spec_; }

private:
  GridPtr grid_;
  Space space_ = Space::physical;
  std::vector<double> phys_;
  std::vector<std::complex<double>> spec_;
};

struct VectorField {
  ScalarField x, y, z;

  VectorField() = default;
  explicit VectorField(GridPtr g, Space s = Space::physical)
      : x(g, s), y(g, s), z(g, s) {}
  VectorField(ScalarField cx, ScalarField cy, ScalarField cz)
      : x(std::move(cx)), y(std::move(cy)), z(std::move(cz)) {}

  ScalarField& comp(int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const ScalarField& comp(int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  const Grid& grid() const { return x.grid(); }
  const GridPtr& grid_ptr() const { return x.grid_ptr(); }
};

void require_same_grid(const ScalarField& a, const ScalarField& b);
void require_physical(const ScalarField& f, const char* where);

// Pointwise sampling of f(x, y, z) on the grid.
template <class F>
ScalarField sample_field(const GridPtr& g, F&& f) {
  ScalarField out(g, Space::physical);
  const int n = g->n();
  double* p = out.phys();
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix)
        p[g->phys_index(ix, iy, iz)] = f(g->coord(ix), g->coord(iy), g->coord(iz));
  return out;
}

template <class Fx, class Fy, class Fz>
VectorField sample_vector(const GridPtr& g, Fx&& fx, Fy&& fy, Fz&& fz) {
  VectorField out;
  out.x = sample_field(g, fx);
  out.y = sample_field(g, fy);
  out.z = sample_field(g, fz);
  return out;
}

// Pointwise arithmetic (physical space).
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double c, const ScalarField& a);
ScalarField operator-(const ScalarField& a);
ScalarField operator+(const ScalarField& a, double c);

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double c, const VectorField& a);
VectorField operator*(const ScalarField& s, const VectorField& v);

void axpy(ScalarField& y, double a, const ScalarField& x); // y += a*x
void axpy(VectorField& y, double a, const VectorField& x);

ScalarField dot(const VectorField& a, const VectorField& b);
VectorField cross(const VectorField& a, const VectorField& b);
ScalarField magnitude_squared(const VectorField& v);

// 1/s pointwise (no zero guard; callers enforce positivity floors).
ScalarField reciprocal(const ScalarField& s);
// s^p pointwise.
ScalarField pow_field(const ScalarField& s, double p);

} // namespace helibox
