#pragma once

#include <vector>

#include "branchcut/ode.hpp"

namespace branchcut {

// Taylor coefficients u_k = y^(k)(x0)/k! at an ordinary point, extended from
// the leading `order` coefficients by the operator's recurrence.
std::vector<Complex> extend_taylor(const std::vector<CPoly>& shifted_coeffs, std::vector<Complex> u,
                                   int count);

// Taylor coefficients of the solution pinned by ics at its base point. Works
// at ordinary base points (exactly order-many values) and at apparent
// singular ones, where values up to the largest local exponent are required
// and the constrained ones are checked for consistency.
std::vector<Complex> solution_series(const DifferentialOperator& op, const InitialConditions& ics,
                                     int count);

// Derivative values y^(k)(x0) for k = 0..count-1 of the solution of the
// inhomogeneous ODE, from its order-many initial values. Requires the leading
// coefficient and the rhs denominator to be nonzero at x0.
std::vector<Complex> inhomogeneous_derivatives(const LinearODE& ode, const InitialConditions& ics,
                                               int count);

}  // namespace branchcut
