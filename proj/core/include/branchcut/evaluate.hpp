#pragma once

#include "branchcut/continuation.hpp"
#include "branchcut/cuts.hpp"

namespace branchcut {

struct EvaluateOptions {
    double on_cut_tol = 1e-12;  // relative distance below which z counts as on a cut
    double on_cut_eta = 1e-6;   // relative one-sided displacement for adherence limits
    bool require_single_valued = true;
};

struct EvalResult {
    Complex value;
    Real error_estimate = Real(0);
    Jet jet;          // full jet at the target
    bool on_cut = false;
    std::vector<Complex> route;  // polyline actually continued along
};

// Principal value of the solution at z in the plane cut by `system`:
// crossing-free detour routing around cut endpoints, counter-clockwise or
// clockwise adherence on the cuts themselves via one-sided displacement and
// eta -> 0 extrapolation.
EvalResult evaluate(const Engine& engine, const Solution& solution, const CutSystem& system,
                    const SingularityReport& report, const Complex& z,
                    const EvaluateOptions& opts = {});

}  // namespace branchcut
