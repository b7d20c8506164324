#include "helibox/manufactured.hpp"

#include <random>
#include <stdexcept>

namespace helibox {

namespace {

TrigFn random_fn(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) ? TrigFn::sin
                                                       : TrigFn::cos;
}

// One random term c * f1(m1 x) f2(m2 y) f3(m3 z) with |c| <= amp, c a dyadic
// rational (k/64), and one to three active axes with modes in {1, 2, 3}.
TrigPoly random_term(std::mt19937_64& rng, double amp) {
  std::uniform_int_distribution<int> mode_dist(1, 3);
  std::uniform_int_distribution<int> coef_dist(1, 64);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::uniform_int_distribution<int> axis_dist(0, 2);
  std::uniform_int_distribution<int> extra_dist(0, 2);

  const double c = (sign_dist(rng) ? 1.0 : -1.0) * amp *
                   static_cast<double>(coef_dist(rng)) / 64.0;

  TrigFn fn[3] = {TrigFn::one, TrigFn::one, TrigFn::one};
  int mode[3] = {0, 0, 0};
  const int active = axis_dist(rng);
  fn[active] = random_fn(rng);
  mode[active] = mode_dist(rng);
  // Possibly activate more axes so mixed-direction derivatives are exercised.
  for (int a = 0; a < 3; ++a) {
    if (a != active && extra_dist(rng) == 0) {
      fn[a] = random_fn(rng);
      mode[a] = mode_dist(rng);
    }
  }
  return TrigPoly::term(c, fn[0], mode[0], fn[1], mode[1], fn[2], mode[2]);
}

TrigPoly random_poly(std::mt19937_64& rng, int terms, double base, double amp) {
  TrigPoly p = TrigPoly::constant(base);
  for (int i = 0; i < terms; ++i)
    p = p + random_term(rng, amp / terms);
  return p;
}

TrigVec random_vec(std::mt19937_64& rng, int terms, double amp) {
  TrigVec v;
  for (int i = 0; i < 3; ++i)
    v.comp(i) = random_poly(rng, terms, 0.0, amp);
  return v;
}

} // namespace

ManufacturedFieldSet generate_fields(std::uint64_t seed, int mode_budget) {
  if (mode_budget < 1)
    throw std::invalid_argument("generate_fields: mode_budget must be >= 1");

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ seed);
  ManufacturedFieldSet f;
  // Perturbation amplitudes keep min rho and min e at or above 0.5: the
  // terms of a recipe sum to at most `amp` in magnitude.
  f.rho = random_poly(rng, mode_budget, 1.0, 0.5);
  f.u = random_vec(rng, mode_budget, 1.0);
  f.P = random_poly(rng, mode_budget, 1.0, 1.0);
  f.B = random_vec(rng, mode_budget, 1.0).curl();
  f.e = random_poly(rng, mode_budget, 1.0, 0.5);
  return f;
}

} // namespace helibox
