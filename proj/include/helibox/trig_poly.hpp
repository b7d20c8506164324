#pragma once

// Closed-form trigonometric polynomials on the 2*pi periodic box: finite sums
// of c * f1(m1 x) * f2(m2 y) * f3(m3 z) with f in {1, sin, cos} and integer
// modes. The family is closed under differentiation, so every derivative
// needed by an identity check is available exactly.

#include <array>
#include <cstdint>
#include <vector>

#include "helibox/field.hpp"

namespace helibox {

enum class TrigFn : std::uint8_t { one, sin, cos };

struct TrigFactor {
  TrigFn fn = TrigFn::one;
  int mode = 0;
};

struct TrigTerm {
  double coef = 0.0;
  std::array<TrigFactor, 3> f{};
};

class TrigPoly {
public:
  TrigPoly() = default;
  explicit TrigPoly(std::vector<TrigTerm> terms) : terms_(std::move(terms)) {}

  static TrigPoly constant(double c);
  // c * fx(mx x) * fy(my y) * fz(mz z); mode 0 with fn != one is invalid.
  static TrigPoly term(double c, TrigFn fx, int mx, TrigFn fy, int my, TrigFn fz,
                       int mz);

  const std::vector<TrigTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int max_mode() const;

  TrigPoly derivative(int axis) const;
  double eval(double x, double y, double z) const;
  // Samples on the grid; requires L = 2*pi (recipes are unit-box).
  ScalarField sample(const GridPtr& g) const;

  TrigPoly operator+(const TrigPoly& other) const;
  TrigPoly operator-(const TrigPoly& other) const;
  TrigPoly scaled(double c) const;

private:
  std::vector<TrigTerm> terms_;
};

struct TrigVec {
  TrigPoly x, y, z;

  const TrigPoly& comp(int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  TrigPoly& comp(int i) { return i == 0 ? x : (i == 1 ? y : z); }

  TrigVec curl() const;
  TrigPoly divergence() const;
  VectorField sample(const GridPtr& g) const;
  int max_mode() const;
};

TrigVec gradient(const TrigPoly& p);

} // namespace helibox
