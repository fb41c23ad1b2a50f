#pragma once

#include <optional>
#include <vector>

#include "branchcut/ode.hpp"

namespace branchcut {

// One truncated Frobenius solution at an expansion point:
//   sum_{k=0..N} sum_{l=0..log_degree} coeff[k][l] * t^(nu+k) * ln(t)^l / l!
// Numeric coefficients are always populated; exact ones only on the exact path.
struct LogSeries {
    Complex nu;                                   // base exponent of its group
    std::optional<GaussianRational> exact_nu;
    int leading_offset = 0;                       // lowest k with a nonzero coefficient
    int log_degree = 0;
    std::vector<std::vector<Complex>> coeff;
    std::vector<std::vector<GaussianRational>> exact_coeff;
    bool exact = false;

    Complex exponent() const { return nu + Complex(static_cast<long>(leading_offset)); }
};

struct LocalBasis {
    Complex point;
    std::optional<GaussianRational> exact_point;
    int truncation = 0;
    bool exact = false;
    std::vector<LogSeries> solutions;

    bool has_log() const {
        for (const auto& s : solutions)
            if (s.log_degree > 0) return true;
        return false;
    }
};

// Indicial polynomial q_0 in the local variable, from the theta-form
// t^sigma L = sum_j t^j q_j(theta). Errors (Usage) at ordinary points.
Poly indicial_polynomial(const DifferentialOperator& op, const GaussianRational& s);
CPoly indicial_polynomial_numeric(const DifferentialOperator& op, const Complex& s);

// Full basis of truncated Frobenius solutions; exact when the expansion point
// and every local exponent are Gaussian rationals. Errors on irregular points.
LocalBasis local_basis(const DifferentialOperator& op, const GaussianRational& s, int truncation);
LocalBasis local_basis_numeric(const DifferentialOperator& op, const Complex& s, int truncation);

// True iff the local exponents are distinct nonnegative integers and the full
// basis is log-free to the truncation (default max exponent + order + 8).
bool is_apparent(const DifferentialOperator& op, const GaussianRational& s, int truncation = -1);

// Fuchs test: does the theta-form have full-degree indicial polynomial at s?
bool is_regular_singular(const DifferentialOperator& op, const GaussianRational& s);
bool is_regular_singular_numeric(const DifferentialOperator& op, const Complex& s);

// Exponent clusters of a numeric indicial polynomial (centers + multiplicity).
std::vector<std::pair<Complex, int>> indicial_root_clusters(const CPoly& q0);

// Zero out numerically-dead coefficients of a shifted operator coefficient;
// threshold is relative to the largest coefficient magnitude.
CPoly clean_cpoly(const CPoly& p, const Real& rel_threshold);

}  // namespace branchcut
