#pragma once

#include <optional>
#include <vector>

#include "branchcut/poly.hpp"

namespace branchcut {

inline const double kDefaultRootTol = 1e-12;

struct Root {
    Complex location;
    int multiplicity = 1;
    Poly factor;  // exact squarefree factor this root belongs to
    std::optional<GaussianRational> exact;  // set when the root reconstructs and verifies exactly
};

// All roots of p with multiplicities from the exact squarefree decomposition,
// each approximated to |p(r)| < tol * max|coeff| * max(1,|r|)^deg, sorted
// lexicographically by (re, im) on a tol-grid.
std::vector<Root> find_roots(const Poly& p, const Real& tol);
std::vector<Root> find_roots(const Poly& p);

// Simple roots of a squarefree numeric polynomial (Durand-Kerner + Newton
// polish). Deterministic seeding; Numeric error after the iteration budget.
std::vector<Complex> roots_squarefree(const CPoly& p, const Real& tol);

// Nearest rational with small denominator if it is within eps, via continued
// fractions. Used to recognize exact singularity locations.
std::optional<Rational> reconstruct_rational(const Real& x, const Real& eps, long max_den = 1000000L);

// Gaussian-rational reconstruction of z verified exactly against p (p(z)==0).
std::optional<GaussianRational> reconstruct_verified_root(const Complex& z, const Poly& p);

// deterministic (re, im) ordering on a tol-grid
bool complex_before(const Complex& a, const Complex& b, const Real& tol);

}  // namespace branchcut
