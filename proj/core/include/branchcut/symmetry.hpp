#pragma once

#include <optional>
#include <vector>

#include "branchcut/ode.hpp"

namespace branchcut {

inline constexpr int kAffineTruncation = 40;

struct AffineSymmetry {
    Complex lambda, mu;  // y(w x) = lambda y(x) + mu
};

struct SymmetryProfile {
    bool conjugation = false;
    int rotation_order = 1;       // largest m with operator invariance under x -> w x
    bool infinite_order = false;  // operator is scaling-homogeneous: invariant for every m
    std::optional<AffineSymmetry> affine;  // verified at the primitive rotation, base point 0
};

// Largest m such that x -> wx, D -> w^-1 D maps the operator to a scalar
// multiple of itself (w a primitive m-th root of unity). The substitution maps
// the monomial x^c D^i to w^(c-i) x^c D^i, so invariance up to a scalar is a
// congruence condition on the exponent differences c - i; the test needs no
// root of unity and is exact for every m. Returns 0 with infinite=true for
// scaling-homogeneous operators.
int detect_rotation_order(const DifferentialOperator& op, bool& infinite);

// True iff all operator coefficients, the base point and every initial value
// are real.
bool detect_conjugation(const DifferentialOperator& op, const InitialConditions& ics);

// Solve lambda from the first nonvanishing Taylor coefficient of the solution
// at 0 and mu from the constant term, then verify y(wx) = lambda y(x) + mu on
// every coefficient up to order N. Base point must be 0 for w != 1.
std::optional<AffineSymmetry> solution_affine_symmetry(const DifferentialOperator& op,
                                                       const InitialConditions& ics, const Complex& w,
                                                       int truncation = kAffineTruncation);

SymmetryProfile detect_symmetries(const DifferentialOperator& op, const InitialConditions& ics);

}  // namespace branchcut
