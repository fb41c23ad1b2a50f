#pragma once

#include <optional>
#include <vector>

#include "branchcut/ode.hpp"
#include "branchcut/singularities.hpp"

namespace branchcut {

// Piecewise-linear continuation path given by its vertices; the first vertex
// must be the current expansion point.
struct Path {
    std::vector<Complex> vertices;
};

// Solution value and first order-1 derivatives at a point, the unit of
// analytic continuation.
struct Jet {
    Complex point;
    std::vector<Complex> values;
    Real error_estimate = Real(0);
};

struct ContinuationOptions {
    double step_ratio = 0.5;      // step <= ratio * distance to nearest non-apparent singularity
    double step_epsilon = 1e-25;  // relative tail target per step
    double clearance = 1e-8;      // minimum distance of paths from non-apparent singularities
    long max_terms = 10000;       // tail budget per step
};

struct MonodromyResult {
    std::vector<std::vector<Complex>> matrix;  // continued basis in terms of the original
    Real deviation_from_identity = Real(0);
    Real condition = Real(1);
    Real error_estimate = Real(0);
};

// Locations the continuation engine must keep clear of (non-apparent), plus
// apparent points, which only matter for expansion-point placement.
struct SingularSet {
    std::vector<Complex> blocking;
    std::vector<Complex> apparent;

    Real distance(const Complex& z) const;
    Real apparent_distance(const Complex& z) const;
};

SingularSet singular_set(const SingularityReport& report);

class Engine {
public:
    Engine(DifferentialOperator op, SingularSet sing, ContinuationOptions opts = {});

    const DifferentialOperator& op() const { return op_; }
    const SingularSet& singular() const { return sing_; }
    const ContinuationOptions& options() const { return opts_; }
    int order() const { return op_.order(); }

    Real clearance_radius(const Complex& z) const { return sing_.distance(z); }

    // Taylor coefficients at the jet's (ordinary) expansion point; the first
    // order-many are the jet values divided by factorials.
    std::vector<Complex> taylor_coeffs(const Jet& jet, int count) const;

    // One Taylor step; |target - point| must satisfy the step-ratio rule.
    Jet step(const Jet& jet, const Complex& target) const;

    // Continuation along a polyline, legs auto-subdivided by the ratio rule.
    // series_at_start supplies precomputed coefficients valid at the first
    // vertex (needed when it is an apparent singularity); start_step_limit
    // caps the first step to the range those coefficients were sized for.
    Jet continue_along(Jet jet, const Path& path, const std::vector<Complex>* series_at_start = nullptr,
                       const Real* start_step_limit = nullptr) const;

    // Monodromy along a closed loop, by continuing basis jets at the first
    // vertex; identity within tolerance means trivial monodromy.
    MonodromyResult monodromy(const Path& loop,
                              const std::vector<Jet>* basis_jets = nullptr) const;

    void validate_path(const Path& path) const;

private:
    Jet step_with_coeffs(const Jet& jet, const std::vector<Complex>& coeffs, const Complex& target) const;

    DifferentialOperator op_;
    SingularSet sing_;
    ContinuationOptions opts_;
};

// A solved initial value problem: jet at the base point plus its Taylor
// series there, long enough for a first continuation step up to
// base_step_limit even when the base point is an apparent singularity.
struct Solution {
    Jet base;
    std::vector<Complex> base_series;
    Real base_step_limit = Real(0);
};

Solution make_solution(const Engine& engine, const InitialConditions& ics);

// Continue the solution from its base point along a path anchored there.
Jet continue_solution(const Engine& engine, const Solution& sol, const Path& path);

}  // namespace branchcut
