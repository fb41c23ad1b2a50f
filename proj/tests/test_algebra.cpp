#include <doctest.h>

#include <branchcut/poly.hpp>
#include <branchcut/roots.hpp>
#include <random>

#include "corpus.hpp"

using namespace branchcut;
using corpus::dd;

namespace {

struct Setup {
    Setup() { set_working_digits(50); }
} setup;

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-9, 9);
    Poly p;
    int d = deg(rng);
    for (int k = 0; k <= d; ++k) p.c.emplace_back(Rational(coeff(rng)), Rational(coeff(rng)));
    p.trim();
    return p;
}

// schoolbook reference implementations
Poly naive_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, GaussianRational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

Poly naive_add(const Poly& a, const Poly& b) {
    Poly r;
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t k = 0; k < n; ++k) r.c.push_back(a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k)));
    r.trim();
    return r;
}

}  // namespace

TEST_CASE("gaussian rational field ops") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z * z.conj() == GaussianRational(z.norm()));
    CHECK(z / z == GaussianRational(1));
    CHECK(z.pow(3) == z * z * z);
    CHECK_THROWS_AS(z / GaussianRational(0), Error);
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(from_real_coeffs({-1, 0, 1})) == from_real_coeffs({-1, 0, 1}));
    CHECK(squarefree_part(from_real_coeffs({1, 2, 1})) == from_real_coeffs({1, 1}));
}

TEST_CASE("gcd by hand-factored oracle") {
    // x^3 + x = x (x^2 + 1), so gcd with x^2 + 1 is x^2 + 1
    Poly g = poly_gcd(from_real_coeffs({1, 0, 1}), from_real_coeffs({0, 1, 0, 1}));
    CHECK(g == from_real_coeffs({1, 0, 1}));
}

TEST_CASE("exact division errors on non-divisible input") {
    CHECK_THROWS_AS(exact_divide(from_real_coeffs({1, 0, 1}), from_real_coeffs({1, 1})), Error);
}

TEST_CASE("substitutions") {
    Poly p = from_real_coeffs({1, 0, 1});  // x^2 + 1
    CHECK(p.scaled(GaussianRational::i()) == from_real_coeffs({1, 0, -1}));
    CHECK(p.reciprocal() == from_real_coeffs({1, 0, 1}));
    CHECK(from_real_coeffs({-2, 0, 0, 1}).reciprocal() == from_real_coeffs({1, 0, 0, -2}));
}

TEST_CASE("exact ops agree with schoolbook reference on random polys") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        Poly a = random_poly(rng, 8), b = random_poly(rng, 8);
        CHECK(a * b == naive_mul(a, b));
        CHECK(a + b == naive_add(a, b));
        if (!b.is_zero()) {
            auto [q, r] = divrem(a, b);
            CHECK(naive_add(naive_mul(q, b), r) == a);
            CHECK((r.is_zero() || r.degree() < b.degree()));
        }
        if (!a.is_zero() && !b.is_zero()) {
            Poly g = poly_gcd(a, b);
            CHECK(divrem(a, g).second.is_zero());
            CHECK(divrem(b, g).second.is_zero());
        }
    }
}

TEST_CASE("derivative product rule on random polys") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Poly a = random_poly(rng, 6), b = random_poly(rng, 6);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("roots of x^2+1") {
    auto roots = find_roots(from_real_coeffs({1, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(corpus::dist(roots[0].location, 0, -1) < 1e-12);
    CHECK(corpus::dist(roots[1].location, 0, 1) < 1e-12);
    CHECK(roots[0].exact.has_value());
    CHECK(roots[1].multiplicity == 1);
}

TEST_CASE("roots of x(x^4+1) match the closed form") {
    // z = (+-1 +- i)/sqrt(2)
    auto roots = find_roots(from_real_coeffs({0, 1, 0, 0, 0, 1}));
    REQUIRE(roots.size() == 5);
    double h = dd(Real(1) / sqrt(Real(2)));
    int matched = 0;
    for (double sr : {-1.0, 1.0})
        for (double si : {-1.0, 1.0})
            for (const auto& r : roots)
                if (corpus::dist(r.location, sr * h, si * h) < 1e-12) ++matched;
    CHECK(matched == 4);
    bool has_zero = false;
    for (const auto& r : roots)
        if (r.exact && r.exact->is_zero()) has_zero = true;
    CHECK(has_zero);
}

TEST_CASE("double root carries multiplicity from the exact decomposition") {
    auto roots = find_roots(from_real_coeffs({1, 2, 1}));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 2);
    CHECK(corpus::dist(roots[0].location, -1, 0) < 1e-12);
}

TEST_CASE("root residuals and total count on random polys") {
    std::mt19937 rng(99);
    Real tol(kDefaultRootTol);
    for (int trial = 0; trial < 12; ++trial) {
        Poly p = random_poly(rng, 6);
        if (p.is_zero() || p.degree() < 1) continue;
        auto roots = find_roots(p, tol);
        int total = 0;
        Real maxc(0);
        for (const auto& c : p.c) maxc = std::max(maxc, abs(Complex(c)));
        for (const auto& r : roots) {
            total += r.multiplicity;
            Real bound = tol * maxc * pow(std::max(Real(1), abs(r.location)), p.degree());
            CHECK(dd(abs(to_cpoly(p).eval(r.location))) < dd(bound));
        }
        CHECK(total == p.degree());
    }
}

TEST_CASE("rational reconstruction round trip") {
    Real x = rational_to_real(Rational(-22, 7));
    auto q = reconstruct_rational(x, pow10(-30));
    REQUIRE(q.has_value());
    CHECK(*q == Rational(-22, 7));
    CHECK(!reconstruct_rational(sqrt(Real(2)), pow10(-30)).has_value());
}
