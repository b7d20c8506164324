#pragma once

// Independent derivative oracle for tests: 8th-order centered finite
// differences on the periodic grid.  Deliberately shares no code with the
// spectral operators it cross-checks.

#include "helibox/field.hpp"

namespace helibox::testing {

ScalarField fd_derivative(const ScalarField& f, int axis);
VectorField fd_gradient(const ScalarField& f);
ScalarField fd_divergence(const VectorField& v);
VectorField fd_curl(const VectorField& v);

} // namespace helibox::testing
