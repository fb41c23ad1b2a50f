#pragma once

#include <vector>

#include "branchcut/poly.hpp"

namespace branchcut {

// Rational function p/q over Q(i)[x], reduced and with monic denominator.
struct RationalFunction {
    Poly num, den = Poly::constant(GaussianRational(1));

    RationalFunction() = default;
    RationalFunction(Poly n, Poly d);

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RationalFunction operator-(const RationalFunction& a) { return {-a.num, a.den}; }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num == b.num && a.den == b.den;
    }

    RationalFunction derivative() const {
        return {num.derivative() * den - num * den.derivative(), den * den};
    }
};

// Linear ODE  sum c_i y^(i) = rhs  with polynomial coefficients and a rational
// right-hand side; normalized so the c_i carry no common content.
struct LinearODE {
    std::vector<Poly> coeffs;  // c_0 .. c_n
    RationalFunction rhs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Poly& leading() const { return coeffs.back(); }
    void normalize();
    friend bool operator==(const LinearODE& a, const LinearODE& b) {
        return a.coeffs == b.coeffs && a.rhs == b.rhs;
    }
};

// Homogeneous operator sum c_i D^i, content-normalized with the leading
// polynomial made monic.
struct DifferentialOperator {
    std::vector<Poly> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Poly& leading() const { return coeffs.back(); }

    friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) {
        return a.coeffs == b.coeffs;
    }

    bool has_real_coefficients() const;

    // coefficients of c_i shifted to x = s + t, as numeric polynomials in t
    std::vector<CPoly> shifted_coeffs(const Complex& s) const;
    std::vector<Poly> shifted_coeffs_exact(const GaussianRational& s) const;
};

DifferentialOperator normalized_operator(std::vector<Poly> coeffs);

// Homogeneous equivalent: unchanged (after normalization) for rhs == 0,
// otherwise order + 1 via clearing denominators in (D - d'/d) L.
DifferentialOperator homogenize(const LinearODE& ode);

// Operator after x -> 1/x, polynomial coefficients, normalized. Used to
// classify the point at infinity (as t = 0 of the result).
DifferentialOperator reciprocal_transform(const DifferentialOperator& op);

// Operator after x -> w x (with D -> w^-1 D), for exact Gaussian-rational w.
DifferentialOperator scale_transform(const DifferentialOperator& op, const GaussianRational& w);

// Initial data at an exact base point. `values` may be longer than the
// operator order: at an apparent-singular base point the solution needs
// derivatives up to the largest local exponent to be pinned down.
struct InitialConditions {
    GaussianRational base_point;
    std::vector<PiGaussian> values;

    Complex base_complex() const { return Complex(base_point); }
    bool all_real() const;
    friend bool operator==(const InitialConditions& a, const InitialConditions& b) {
        return a.base_point == b.base_point && a.values == b.values;
    }
};

}  // namespace branchcut
