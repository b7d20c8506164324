#include "helibox/trig_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace helibox {

namespace {
double eval_factor(const TrigFactor& f, double coord) {
  switch (f.fn) {
    case TrigFn::one: return 1.0;
    case TrigFn::sin: return std::sin(f.mode * coord);
    case TrigFn::cos: return std::cos(f.mode * coord);
  }
  return 0.0;
}
} // namespace

TrigPoly TrigPoly::constant(double c) {
  if (c == 0.0) return TrigPoly();
  TrigTerm t;
  t.coef = c;
  return TrigPoly({t});
}

TrigPoly TrigPoly::term(double c, TrigFn fx, int mx, TrigFn fy, int my, TrigFn fz,
                        int mz) {
  TrigTerm t;
  t.coef = c;
  t.f[0] = {fx, fx == TrigFn::one ? 0 : mx};
  t.f[1] = {fy, fy == TrigFn::one ? 0 : my};
  t.f[2] = {fz, fz == TrigFn::one ? 0 : mz};
  for (const auto& f : t.f)
    if (f.fn != TrigFn::one && f.mode <= 0)
      throw std::invalid_argument("TrigPoly: sin/cos factors need a positive mode");
  return TrigPoly({t});
}

int TrigPoly::max_mode() const {
  int m = 0;
  for (const auto& t : terms_)
    for (const auto& f : t.f) m = std::max(m, f.mode);
  return m;
}

TrigPoly TrigPoly::derivative(int axis) const {
  if (axis < 0 || axis > 2) throw std::invalid_argument("TrigPoly: bad axis");
  std::vector<TrigTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const TrigFactor& f = t.f[axis];
    if (f.fn == TrigFn::one) continue; // constant factor differentiates away
    TrigTerm d = t;
    if (f.fn == TrigFn::sin) {
      d.coef = t.coef * f.mode;
      d.f[axis].fn = TrigFn::cos;
    } else {
      d.coef = -t.coef * f.mode;
      d.f[axis].fn = TrigFn::sin;
    }
    out.push_back(d);
  }
  return TrigPoly(std::move(out));
}

double TrigPoly::eval(double x, double y, double z) const {
  double s = 0.0;
  for (const auto& t : terms_)
    s += t.coef * eval_factor(t.f[0], x) * eval_factor(t.f[1], y) *
         eval_factor(t.f[2], z);
  return s;
}

ScalarField TrigPoly::sample(const GridPtr& g) const {
  if (std::abs(g->box_length() - two_pi) > 1e-12 * two_pi)
    throw std::invalid_argument("TrigPoly::sample: recipes assume a 2*pi box");
  const int n = g->n();
  ScalarField out(g, Space::physical);
  double* p = out.phys();
  // Per-axis tables turn each term into one fused pass over the cube.
  std::vector<double> tx(n), ty(n), tz(n);
  for (const auto& t : terms_) {
    for (int i = 0; i < n; ++i) {
      const double c = g->coord(i);
      tx[i] = eval_factor(t.f[0], c);
      ty[i] = eval_factor(t.f[1], c);
      tz[i] = eval_factor(t.f[2], c);
    }
    for (int iz = 0; iz < n; ++iz)
      for (int iy = 0; iy < n; ++iy) {
        const double cyz = t.coef * ty[iy] * tz[iz];
        double* row = p + g->phys_index(0, iy, iz);
        for (int ix = 0; ix < n; ++ix) row[ix] += cyz * tx[ix];
      }
  }
  return out;
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const {
  std::vector<TrigTerm> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return TrigPoly(std::move(out));
}

TrigPoly TrigPoly::operator-(const TrigPoly& other) const {
  return *this + other.scaled(-1.0);
}

TrigPoly TrigPoly::scaled(double c) const {
  std::vector<TrigTerm> out = terms_;
  for (auto& t : out) t.coef *= c;
  return TrigPoly(std::move(out));
}

TrigVec TrigVec::curl() const {
  TrigVec out;
  out.x = z.derivative(1) - y.derivative(2);
  out.y = x.derivative(2) - z.derivative(0);
  out.z = y.derivative(0) - x.derivative(1);
  return out;
}

TrigPoly TrigVec::divergence() const {
  return x.derivative(0) + y.derivative(1) + z.derivative(2);
}

VectorField TrigVec::sample(const GridPtr& g) const {
  VectorField out;
  out.x = x.sample(g);
  out.y = y.sample(g);
  out.z = z.sample(g);
  return out;
}

int TrigVec::max_mode() const {
  return std::max(x.max_mode(), std::max(y.max_mode(), z.max_mode()));
}

TrigVec gradient(const TrigPoly& p) {
  TrigVec out;
  out.x = p.derivative(0);
  out.y = p.derivative(1);
  out.z = p.derivative(2);
  return out;
}

} // namespace helibox
