#pragma once

#include "branchcut/continuation.hpp"
#include "branchcut/ode.hpp"
#include "branchcut/singularities.hpp"
#include "branchcut/symmetry.hpp"

namespace branchcut {

struct Problem {
    LinearODE ode;
    InitialConditions ics;
};

// Everything the commands need: the homogenized operator, initial conditions
// extended to it, the singularity classification and the symmetry profile.
struct Analysis {
    DifferentialOperator op;
    InitialConditions ics;  // extended to the homogenized operator
    SingularityReport report;
    SymmetryProfile profile;
};

// Exact derivative values y^(k)(x0), k = 0..count-1, of the solution of the
// inhomogeneous ODE. Initial values of the form a + b*pi stay in that form
// because the recurrence is linear with Gaussian-rational coefficients.
std::vector<PiGaussian> exact_derivatives(const LinearODE& ode, const InitialConditions& ics, int count);

Analysis analyze(const Problem& problem, const Real& root_tol);
Analysis analyze(const Problem& problem);

Engine make_engine(const Analysis& analysis, ContinuationOptions opts = {});

}  // namespace branchcut
