#pragma once

//----------------------------------------------------------------------------
// Spectral calculus on periodic fields: derivatives, dealiasing, inverse
// Laplacian, solenoidal projection, and quadrature/norm reductions.
//
// Derivative operators accept fields in either space and return physical
// fields. All reductions are serial compensated sums, so results do not
// depend on the thread count.
//----------------------------------------------------------------------------

#include "helibox/field.hpp"

namespace helibox {

ScalarField to_spectral(const ScalarField& f);
ScalarField to_physical(const ScalarField& f);
VectorField to_physical(const VectorField& v);

// grad(s)_j = ifft( i k_j fft(s) )
VectorField gradient(const ScalarField& s);
// div(v) = ifft( i k . fft(v) )
ScalarField divergence(const VectorField& v);
// curl(v) = ifft( i k x fft(v) )
VectorField curl(const VectorField& v);
// Single-axis derivative (0 = x, 1 = y, 2 = z).
ScalarField derivative(const ScalarField& s, int axis);

// Sharp 2/3-rule truncation: modes with 3*|m_j| >= n on any axis are zeroed.
// Result stays in the input's representation.
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& f);

// Solves lap(p) = s for the zero-mean solution. The input must have zero
// mean up to 1e-10 * max|s|; otherwise the call is rejected.
ScalarField inverse_laplacian_zero_mean(const ScalarField& s);

// Removes the irrotational part: v - grad(invlap(div v)). Mean flow is kept.
VectorField project_solenoidal(const VectorField& v);

// dx^3 * sum of samples; exact quadrature for resolved band-limited fields.
// Requires physical space.
double volume_integral(const ScalarField& s);
double max_norm(const ScalarField& s);
double max_norm(const VectorField& v); // max over grid of |v|
double l2_norm(const ScalarField& s);  // sqrt(integral of s^2)
double l1_norm(const ScalarField& s);  // integral of |s|
double mean_value(const ScalarField& s);
double min_value(const ScalarField& s);
// max over the nine components d_i v_j of their max norms
double gradient_max_norm(const VectorField& v);

// L^3 * sum_k w_k |c_k|^2 with Hermitian weights; Parseval partner of
// volume_integral(s*s).
double spectral_energy(const ScalarField& s);

} // namespace helibox
