#include "branchcut/scalar.hpp"

#include <sstream>

namespace branchcut {

namespace {
thread_local unsigned g_digits = 0;
}

void set_working_digits(unsigned digits) {
    if (digits < kMinWorkingDigits) digits = kMinWorkingDigits;
    Real::default_precision(digits);
    g_digits = digits;
}

unsigned working_digits() {
    if (g_digits == 0) set_working_digits(kDefaultWorkingDigits);
    return g_digits;
}

Real real_pi() {
    working_digits();
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real pow10(long k) {
    working_digits();
    Real r = pow(Real(10), Real(k));
    return r;
}

Real rational_to_real(const Rational& q) {
    working_digits();
    return Real(q);
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return GaussianRational(1) / pow(-e);
    GaussianRational acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string GaussianRational::str() const {
    if (im == 0) return rational_str(re);
    std::ostringstream os;
    if (re != 0) os << re;
    if (im > 0 && re != 0) os << "+";
    if (im == -1)
        os << "-";
    else if (im != 1)
        os << im << "*";
    os << "i";
    return os.str();
}

Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.norm_sq();
    if (n == 0) fail(ErrorKind::Numeric, "complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Real abs(const Complex& z) {
    if (z.im == 0) return abs(z.re);
    if (z.re == 0) return abs(z.im);
    return sqrt(z.norm_sq());
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex unit(const Complex& z) {
    Real a = abs(z);
    if (a == 0) fail(ErrorKind::Numeric, "direction of zero vector");
    return {z.re / a, z.im / a};
}

Complex root_of_unity(long k, long m) {
    if (m <= 0) fail(ErrorKind::Usage, "root of unity needs positive order");
    Real t = real_pi() * Real(2 * k) / Real(m);
    return {cos(t), sin(t)};
}

void check_finite(const Complex& z, const char* where) {
    if (!isfinite(z.re) || !isfinite(z.im))
        fail(ErrorKind::Numeric, std::string("non-finite value in ") + where);
}

std::string real_str(const Real& x, unsigned digits) {
    if (digits == 0) digits = working_digits();
    return x.str(digits);
}

std::string Complex::str(unsigned digits) const {
    std::string r = real_str(re, digits);
    std::string i = real_str(im, digits);
    return r + (im < 0 ? "" : "+") + i + "i";
}

Complex PiGaussian::to_complex() const {
    Complex va(a);
    if (b.is_zero()) return va;
    return va + Complex(b) * Complex(real_pi());
}

std::string PiGaussian::str() const {
    if (b.is_zero()) return a.str();
    std::string s;
    if (!a.is_zero()) s = a.str() + "+";
    if (b.is_one())
        s += "pi";
    else
        s += "(" + b.str() + ")*pi";
    return s;
}

}  // namespace branchcut
