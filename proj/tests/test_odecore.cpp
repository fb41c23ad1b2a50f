#include <doctest.h>

#include <branchcut/frobenius.hpp>
#include <branchcut/series.hpp>
#include <branchcut/singularities.hpp>
#include <random>

#include "corpus.hpp"

using namespace branchcut;
using corpus::dd;
using corpus::gr;

namespace {

struct Setup {
    Setup() { set_working_digits(50); }
} setup;

DifferentialOperator arctan_op() {
    return normalized_operator({Poly{}, from_real_coeffs({0, 2}), from_real_coeffs({1, 0, 1})});
}
DifferentialOperator harder_op() {
    return normalized_operator({Poly{}, from_real_coeffs({-1, 0, 0, 0, 3}), from_real_coeffs({0, 1, 0, 0, 0, 1})});
}
DifferentialOperator log_op() {
    return normalized_operator({Poly{}, from_real_coeffs({1}), from_real_coeffs({0, 1})});
}
DifferentialOperator sqrt_op() {
    return normalized_operator({Poly::constant(gr(-1, 2)), from_real_coeffs({0, 1})});
}

}  // namespace

TEST_CASE("homogenize the harder example") {
    // (1+x^4) f' = 2x  ->  x(1+x^4) f'' + (3x^4-1) f' = 0, coefficient exact
    LinearODE ode;
    ode.coeffs = {Poly{}, from_real_coeffs({1, 0, 0, 0, 1})};
    ode.rhs = RationalFunction(from_real_coeffs({0, 2}), from_real_coeffs({1}));
    ode.normalize();
    CHECK(homogenize(ode) == harder_op());
}

TEST_CASE("homogenize constant and rational rhs") {
    // y' = 1 -> y'' = 0
    LinearODE ode1;
    ode1.coeffs = {Poly{}, from_real_coeffs({1})};
    ode1.rhs = RationalFunction(from_real_coeffs({1}), from_real_coeffs({1}));
    ode1.normalize();
    CHECK(homogenize(ode1) == normalized_operator({Poly{}, Poly{}, from_real_coeffs({1})}));

    // x y' = 5 -> x y'' + y' = 0 (differentiate by hand)
    LinearODE ode2;
    ode2.coeffs = {Poly{}, from_real_coeffs({0, 1})};
    ode2.rhs = RationalFunction(from_real_coeffs({5}), from_real_coeffs({1}));
    ode2.normalize();
    CHECK(homogenize(ode2) == log_op());
}

TEST_CASE("homogeneous input is returned cleared") {
    LinearODE ode;
    ode.coeffs = {Poly::constant(gr(-1, 2)) * gr(3), from_real_coeffs({0, 3})};
    ode.rhs = RationalFunction{};
    ode.normalize();
    CHECK(homogenize(ode) == sqrt_op());
}

TEST_CASE("arctan singularities at +-i, ordinary infinity") {
    auto rep = singularities(arctan_op());
    REQUIRE(rep.finite.size() == 2);
    CHECK(corpus::dist(rep.finite[0].location, 0, -1) < 1e-12);
    CHECK(corpus::dist(rep.finite[1].location, 0, 1) < 1e-12);
    for (const auto& p : rep.finite) {
        CHECK(p.cls == PointClass::Regular);
        CHECK(p.has_log);
    }
    CHECK(rep.infinity == InfinityClass::Ordinary);
}

TEST_CASE("harder example: apparent origin, four regular points, no singularity at infinity") {
    auto rep = singularities(harder_op());
    REQUIRE(rep.finite.size() == 5);
    int apparent = 0, regular = 0;
    for (const auto& p : rep.finite) {
        if (p.cls == PointClass::Apparent) {
            ++apparent;
            CHECK(dd(abs(p.location)) < 1e-12);
        }
        if (p.cls == PointClass::Regular) ++regular;
    }
    CHECK(apparent == 1);
    CHECK(regular == 4);
    CHECK(rep.infinity == InfinityClass::Ordinary);
    CHECK(rep.infinity_apparent);
    CHECK(rep.non_apparent().size() == 4);
}

TEST_CASE("y''=0 has no finite singularities") {
    auto op = normalized_operator({Poly{}, Poly{}, from_real_coeffs({1})});
    auto rep = singularities(op);
    CHECK(rep.finite.empty());
}

TEST_CASE("classification is invariant under scalar multiples") {
    auto op = harder_op();
    std::vector<Poly> scaled;
    for (const auto& c : op.coeffs) scaled.push_back(c * GaussianRational(Rational(-7, 3)));
    auto rep1 = singularities(op);
    auto rep2 = singularities(normalized_operator(std::move(scaled)));
    REQUIRE(rep1.finite.size() == rep2.finite.size());
    for (size_t k = 0; k < rep1.finite.size(); ++k) CHECK(rep1.finite[k].cls == rep2.finite[k].cls);
}

TEST_CASE("indicial polynomials") {
    CHECK(indicial_polynomial(sqrt_op(), gr(0)) == Poly({gr(-1, 2), gr(1)}));
    CHECK(indicial_polynomial(harder_op(), gr(0)) == Poly({gr(0), gr(-2), gr(1)}));
    CHECK(indicial_polynomial(log_op(), gr(0)) == Poly({gr(0), gr(0), gr(1)}));
    CHECK_THROWS_AS(indicial_polynomial(arctan_op(), gr(0)), Error);  // ordinary point
}

TEST_CASE("local basis of the log operator at 0") {
    auto basis = local_basis(log_op(), gr(0), 12);
    REQUIRE(basis.solutions.size() == 2);
    CHECK(basis.exact);
    CHECK(basis.solutions[0].log_degree == 0);
    CHECK(basis.solutions[1].log_degree == 1);
    // first solution is the constant 1
    CHECK(basis.solutions[0].exact_coeff[0][0] == gr(1));
    for (size_t k = 1; k < basis.solutions[0].exact_coeff.size(); ++k)
        CHECK(basis.solutions[0].exact_coeff[k][0].is_zero());
    // second solution is exactly ln t
    CHECK(basis.solutions[1].exact_coeff[0][1] == gr(1));
    CHECK(basis.solutions[1].exact_coeff[0][0].is_zero());
}

TEST_CASE("local basis of the harder example at 0 is log-free with exponents 0 and 2") {
    auto basis = local_basis(harder_op(), gr(0), 12);
    REQUIRE(basis.solutions.size() == 2);
    CHECK(!basis.has_log());
    CHECK(basis.solutions[0].leading_offset == 0);
    CHECK(basis.solutions[1].leading_offset == 2);
    // the exponent-2 solution is the series of arctan(t^2): t^2 - t^6/3 + ...
    const auto& s = basis.solutions[1].exact_coeff;
    CHECK(s[2][0] == gr(1));
    CHECK(s[6][0] == gr(-1, 3));
    CHECK(s[4][0].is_zero());
}

TEST_CASE("local basis at an ordinary point is the Taylor basis") {
    auto basis = local_basis(arctan_op(), gr(0), 9);
    REQUIRE(basis.solutions.size() == 2);
    CHECK(!basis.has_log());
    const auto& t = basis.solutions[1].exact_coeff;  // x - x^3/3 + x^5/5 ...
    CHECK(t[1][0] == gr(1));
    CHECK(t[3][0] == gr(-1, 3));
    CHECK(t[5][0] == gr(1, 5));
}

TEST_CASE("apparent-singularity predicate") {
    CHECK(is_apparent(harder_op(), gr(0)));
    CHECK(!is_apparent(sqrt_op(), gr(0)));  // exponent 1/2
    CHECK(!is_apparent(log_op(), gr(0)));   // log term
}

TEST_CASE("operator applied to truncated basis elements vanishes to the truncation") {
    // remainder order must exceed N - order
    auto op = harder_op();
    int N = 16;
    auto basis = local_basis(op, gr(0), N);
    for (const auto& sol : basis.solutions) {
        if (sol.log_degree > 0) continue;
        // p(t) = truncated series; apply sum c_i p^(i) and check low-order terms vanish
        Poly p;
        p.c.assign(N + 1, gr(0));
        for (int k = 0; k <= N; ++k) p.c[k] = sol.exact_coeff[k][0];
        p.trim();
        Poly image;
        Poly der = p;
        for (int i = 0; i <= op.order(); ++i) {
            image = image + op.coeffs[i] * der;
            der = der.derivative();
        }
        int lowest = image.valuation();
        if (!image.is_zero()) CHECK(lowest > N - op.order());
    }
}

TEST_CASE("homogenized operators reproduce the inhomogeneous solution") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> small(-4, 4);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 20; ++trial) {
        // random first-order c1 y' = p/q with c1(0) != 0, q(0) != 0
        Poly c1{gr(small(rng)), gr(small(rng)), gr(small(rng))};
        c1.trim();
        if (c1.is_zero() || c1.coeff(0).is_zero()) continue;
        Poly p{gr(small(rng)), gr(small(rng)), gr(small(rng))};
        p.trim();
        if (p.is_zero()) continue;
        Poly q{gr(1), gr(small(rng)), gr(small(rng))};
        q.trim();
        if (q.coeff(0).is_zero()) continue;

        ProblemSpec spec;
        spec.ode.coeffs = {Poly{}, c1};
        spec.ode.rhs = RationalFunction(p, q);
        spec.ode.normalize();
        spec.ics.base_point = gr(0);
        spec.ics.values = {PiGaussian(gr(small(rng)))};

        Analysis an;
        try {
            an = analyze(spec);
        } catch (const Error&) {
            continue;  // degenerate random instance (e.g. singular base)
        }
        Engine engine = make_engine(an);
        Solution sol = make_solution(engine, an.ics);

        // independent oracle: the inhomogeneous Taylor series of the input,
        // summed directly inside its disk of convergence
        auto derivs = exact_derivatives(spec.ode, spec.ics, 220);
        Real rad = engine.clearance_radius(Complex(0));
        if (rad > pow10(6)) rad = Real(4);
        for (int s = 0; s < 5; ++s) {
            Complex z = root_of_unity(2 * s + 1, 10) * Complex(rad * Real("0.35"));
            Complex oracle(0), zp(1);
            Real fact(1);
            for (int k = 0; k < 220; ++k) {
                if (k > 0) fact *= k;
                oracle += derivs[k].to_complex() / Complex(fact) * zp;
                zp *= z;
            }
            Path path;
            path.vertices = {Complex(0), z};
            Jet jet = continue_solution(engine, sol, path);
            CHECK(dd(abs(jet.values[0] - oracle)) < 1e-10);
        }
        ++done;
    }
    CHECK(done == 20);
}
