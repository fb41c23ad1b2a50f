#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>

#include "branchcut/errors.hpp"

namespace branchcut {

namespace mp = boost::multiprecision;

// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer = mp::number<mp::gmp_int, mp::et_off>;

// Working-precision real. Precision is set per thread; call set_working_digits
// on every thread that touches the numeric engine.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline constexpr unsigned kMinWorkingDigits = 30;
inline constexpr unsigned kDefaultWorkingDigits = 50;

void set_working_digits(unsigned digits);
unsigned working_digits();

// pi at the current working precision
Real real_pi();

// 10^(-k) at working precision
Real pow10(long k);

Real rational_to_real(const Rational& q);

// Exact complex scalar over Q: the coefficient field of the symbolic layer.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(long r) : re(r) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm();
        if (n == 0) fail(ErrorKind::Numeric, "division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational pow(long e) const;

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    std::string str() const;
};

// Working-precision complex value. NaN/infinity are treated as failures and
// never stored deliberately; check_finite guards the entry points.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(int r) : re(r), im(0) {}
    Complex(long r) : re(r), im(0) {}
    Complex(double r) : re(r), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const GaussianRational& g)
        : re(rational_to_real(g.re)), im(rational_to_real(g.im)) {}

    Complex conj() const { return {re, -im}; }
    Real norm_sq() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex& operator+=(const Complex& b) { return *this = *this + b; }
    Complex& operator-=(const Complex& b) { return *this = *this - b; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }
    Complex& operator/=(const Complex& b) { return *this = *this / b; }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    static Complex i() { return {Real(0), Real(1)}; }

    std::string str(unsigned digits = 0) const;
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex unit(const Complex& z);         // z/|z|, error on zero
Complex root_of_unity(long k, long m);  // exp(2*pi*i*k/m) at working precision
void check_finite(const Complex& z, const char* where);

// Exactly representable initial value of the form a + b*pi with Gaussian
// rational a, b. Covers every initial condition in the corpus (pi/2 etc.)
// while keeping parse/format round trips exact.
struct PiGaussian {
    GaussianRational a;  // rational part
    GaussianRational b;  // coefficient of pi

    PiGaussian() = default;
    PiGaussian(GaussianRational a_) : a(std::move(a_)) {}
    PiGaussian(GaussianRational a_, GaussianRational b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_exact_rational() const { return b.is_zero(); }
    bool is_real() const { return a.is_real() && b.is_real(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    Complex to_complex() const;

    // Values of this form are a module over the Gaussian rationals, which is
    // all a linear recurrence with rational coefficients needs.
    friend PiGaussian operator+(const PiGaussian& x, const PiGaussian& y) { return {x.a + y.a, x.b + y.b}; }
    friend PiGaussian operator-(const PiGaussian& x, const PiGaussian& y) { return {x.a - y.a, x.b - y.b}; }
    friend PiGaussian operator-(const PiGaussian& x) { return {-x.a, -x.b}; }
    friend PiGaussian operator*(const GaussianRational& c, const PiGaussian& x) { return {c * x.a, c * x.b}; }
    friend PiGaussian operator/(const PiGaussian& x, const GaussianRational& c) { return {x.a / c, x.b / c}; }

    friend bool operator==(const PiGaussian& x, const PiGaussian& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const PiGaussian& x, const PiGaussian& y) { return !(x == y); }

    std::string str() const;
};

std::string real_str(const Real& x, unsigned digits = 0);
std::string rational_str(const Rational& q);

}  // namespace branchcut
