#include "helibox/field.hpp"

#include <cmath>
#include <stdexcept>

namespace helibox {

ScalarField::ScalarField(GridPtr g, Space s) : grid_(std::move(g)), space_(s) {
  if (!grid_) throw std::invalid_argument("ScalarField: null grid");
  if (space_ == Space::physical)
    phys_.assign(grid_->size(), 0.0);
  else
    spec_.assign(grid_->spec_size(), std::complex<double>(0.0, 0.0));
}

double* ScalarField::phys() {
  if (space_ != Space::physical)
    throw std::logic_error("ScalarField: physical data requested from spectral field");
  return phys_.data();
}
const double* ScalarField::phys() const {
  if (space_ != Space::physical)
    throw std::logic_error("ScalarField: physical data requested from spectral field");
  return phys_.data();
}
std::complex<double>* ScalarField::spec() {
  if (space_ != Space::spectral)
    throw std::logic_error("ScalarField: spectral data requested from physical field");
  return spec_.data();
}
const std::complex<double>* ScalarField::spec() const {
  if (space_ != Space::spectral)
    throw std::logic_error("ScalarField: spectral data requested from physical field");
  return spec_.data();
}

void require_same_grid(const ScalarField& a, const ScalarField& b) {
  if (a.grid().n() != b.grid().n() ||
      a.grid().box_length() != b.grid().box_length())
    throw std::invalid_argument("fields live on different grids");
}

void require_physical(const ScalarField& f, const char* where) {
  if (f.space() != Space::physical)
    throw std::invalid_argument(std::string(where) +
                                ": expected a physical-space field");
}

namespace {
template <class Op>
ScalarField zip(const ScalarField& a, const ScalarField& b, Op op) {
  require_same_grid(a, b);
  require_physical(a, "field arithmetic");
  require_physical(b, "field arithmetic");
  ScalarField out(a.grid_ptr(), Space::physical);
  const double* pa = a.phys();
  const double* pb = b.phys();
  double* po = out.phys();
  const long long m = static_cast<long long>(a.grid().size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < m; ++i) po[i] = op(pa[i], pb[i]);
  return out;
}

template <class Op>
ScalarField map(const ScalarField& a, Op op) {
  require_physical(a, "field arithmetic");
  ScalarField out(a.grid_ptr(), Space::physical);
  const double* pa = a.phys();
  double* po = out.phys();
  const long long m = static_cast<long long>(a.grid().size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < m; ++i) po[i] = op(pa[i]);
  return out;
}
} // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return zip(a, b, [](double x, double y) { return x + y; });
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return zip(a, b, [](double x, double y) { return x - y; });
}
ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return zip(a, b, [](double x, double y) { return x * y; });
}
ScalarField operator*(double c, const ScalarField& a) {
  return map(a, [c](double x) { return c * x; });
}
ScalarField operator-(const ScalarField& a) {
  return map(a, [](double x) { return -x; });
}
ScalarField operator+(const ScalarField& a, double c) {
  return map(a, [c](double x) { return x + c; });
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField out;
  out.x = a.x + b.x;
  out.y = a.y + b.y;
  out.z = a.z + b.z;
  return out;
}
VectorField operator-(const VectorField& a, const VectorField& b) {
  VectorField out;
  out.x = a.x - b.x;
  out.y = a.y - b.y;
  out.z = a.z - b.z;
  return out;
}
VectorField operator*(double c, const VectorField& a) {
  VectorField out;
  out.x = c * a.x;
  out.y = c * a.y;
  out.z = c * a.z;
  return out;
}
VectorField operator*(const ScalarField& s, const VectorField& v) {
  VectorField out;
  out.x = s * v.x;
  out.y = s * v.y;
  out.z = s * v.z;
  return out;
}

void axpy(ScalarField& y, double a, const ScalarField& x) {
  require_same_grid(y, x);
  require_physical(y, "axpy");
  require_physical(x, "axpy");
  double* py = y.phys();
  const double* px = x.phys();
  const long long m = static_cast<long long>(y.grid().size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < m; ++i) py[i] += a * px[i];
}

void axpy(VectorField& y, double a, const VectorField& x) {
  axpy(y.x, a, x.x);
  axpy(y.y, a, x.y);
  axpy(y.z, a, x.z);
}

ScalarField dot(const VectorField& a, const VectorField& b) {
  ScalarField out = a.x * b.x;
  axpy(out, 1.0, a.y * b.y);
  axpy(out, 1.0, a.z * b.z);
  return out;
}

VectorField cross(const VectorField& a, const VectorField& b) {
  VectorField out;
  out.x = a.y * b.z - a.z * b.y;
  out.y = a.z * b.x - a.x * b.z;
  out.z = a.x * b.y - a.y * b.x;
  return out;
}

ScalarField magnitude_squared(const VectorField& v) { return dot(v, v); }

ScalarField reciprocal(const ScalarField& s) {
  return map(s, [](double x) { return 1.0 / x; });
}

ScalarField pow_field(const ScalarField& s, double p) {
  return map(s, [p](double x) { return std::pow(x, p); });
}

} // namespace helibox
