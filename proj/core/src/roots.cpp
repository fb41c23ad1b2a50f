#include "branchcut/roots.hpp"

#include <algorithm>

namespace branchcut {

bool complex_before(const Complex& a, const Complex& b, const Real& tol) {
    Real scale = tol * 2;
    if (abs(a.re - b.re) > scale) return a.re < b.re;
    if (abs(a.im - b.im) > scale) return a.im < b.im;
    return false;
}

namespace {

Real max_coeff_abs(const CPoly& p) {
    Real m(0);
    for (const auto& a : p.c) m = std::max(m, abs(a));
    return m;
}

Complex horner(const CPoly& p, const Complex& x) { return p.eval(x); }

}  // namespace

std::vector<Complex> roots_squarefree(const CPoly& p, const Real& tol) {
    int n = p.degree();
    if (n <= 0) return {};
    CPoly m = p;
    Complex lead = m.c.back();
    for (auto& a : m.c) a /= lead;
    if (n == 1) return {-m.c[0]};

    // Cauchy-style root bound
    Real bound(0);
    for (int k = 0; k < n; ++k) bound = std::max(bound, abs(m.c[k]));
    bound += 1;

    // deterministic seeds: powers of a non-real direction, scaled inside the bound
    std::vector<Complex> z(n);
    Complex seed(Real("0.4"), Real("0.9"));
    Complex acc = seed;
    for (int k = 0; k < n; ++k) {
        z[k] = acc * bound;
        acc *= seed;
    }

    CPoly dm = m.derivative();
    Real target = pow10(-static_cast<long>(working_digits()) + 6);
    long budget = 200L * n;
    bool converged = false;
    for (long it = 0; it < budget; ++it) {
        Real worst(0);
        for (int k = 0; k < n; ++k) {
            Complex num = horner(m, z[k]);
            Complex den(1);
            for (int j = 0; j < n; ++j)
                if (j != k) den *= (z[k] - z[j]);
            if (den.is_zero()) {
                z[k] += Complex(Real("1e-3"), Real("1e-3"));
                worst = std::max(worst, Real(1));
                continue;
            }
            Complex delta = num / den;
            z[k] -= delta;
            worst = std::max(worst, abs(delta));
        }
        if (worst < target) {
            converged = true;
            break;
        }
    }
    if (!converged) fail(ErrorKind::Numeric, "root iteration did not converge within budget");

    // Newton polish to working precision
    for (int k = 0; k < n; ++k) {
        for (int it = 0; it < 4; ++it) {
            Complex d = horner(dm, z[k]);
            if (d.is_zero()) break;
            z[k] -= horner(m, z[k]) / d;
        }
    }

    // residual check per the documented bound
    Real mc = max_coeff_abs(m);
    for (int k = 0; k < n; ++k) {
        Real allowed = tol * mc * pow(std::max(Real(1), abs(z[k])), n);
        if (abs(horner(m, z[k])) >= allowed)
            fail(ErrorKind::Numeric, "root residual exceeds tolerance");
    }
    return z;
}

std::optional<Rational> reconstruct_rational(const Real& x, const Real& eps, long max_den) {
    // continued-fraction convergents, stopping once one lands within eps
    Real fl = floor(x);
    Integer p0(1), q0(0);
    Integer p1 = fl.convert_to<Integer>(), q1(1);
    Real frac = x - fl;
    for (int it = 0; it < 64; ++it) {
        if (q1 > max_den) return std::nullopt;
        Rational cand = Rational(p1) / Rational(q1);
        if (abs(x - rational_to_real(cand)) <= eps) return cand;
        if (frac <= eps) return std::nullopt;
        Real r = Real(1) / frac;
        fl = floor(r);
        if (fl > Real(1e15)) return std::nullopt;
        Integer a = fl.convert_to<Integer>();
        frac = r - fl;
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return std::nullopt;
}

std::optional<GaussianRational> reconstruct_verified_root(const Complex& z, const Poly& p) {
    Real eps = pow10(-static_cast<long>(working_digits()) + 12);
    auto re = reconstruct_rational(z.re, eps);
    if (!re) return std::nullopt;
    auto im = reconstruct_rational(z.im, eps);
    if (!im) return std::nullopt;
    GaussianRational g(*re, *im);
    if (!p.eval(g).is_zero()) return std::nullopt;
    return g;
}

std::vector<Root> find_roots(const Poly& p, const Real& tol) {
    if (p.is_zero()) fail(ErrorKind::Usage, "cannot find roots of the zero polynomial");
    std::vector<Root> out;
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
        auto zs = roots_squarefree(to_cpoly(factor), tol);
        for (auto& z : zs) {
            Root r;
            r.location = z;
            r.multiplicity = mult;
            r.factor = factor;
            r.exact = reconstruct_verified_root(z, factor);
            if (r.exact) r.location = Complex(*r.exact);
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Root& a, const Root& b) { return complex_before(a.location, b.location, tol); });
    return out;
}

std::vector<Root> find_roots(const Poly& p) { return find_roots(p, Real(kDefaultRootTol)); }

}  // namespace branchcut
