#include <doctest.h>

#include <branchcut/series.hpp>
#include <branchcut/symmetry.hpp>

#include "corpus.hpp"

using namespace branchcut;
using corpus::dd;
using corpus::gr;
using corpus::pg;

namespace {

struct Setup {
    Setup() { set_working_digits(50); }
} setup;

}  // namespace

TEST_CASE("rotation orders of the corpus operators") {
    bool inf = false;
    corpus::Instance harder(corpus::harder_spec());
    CHECK(detect_rotation_order(harder.analysis.op, inf) == 4);
    CHECK(!inf);
    corpus::Instance at(corpus::arctan_spec());
    CHECK(detect_rotation_order(at.analysis.op, inf) == 2);
    CHECK(!inf);
    corpus::Instance lg(corpus::log_spec());
    detect_rotation_order(lg.analysis.op, inf);
    CHECK(inf);  // scaling-homogeneous operator
}

TEST_CASE("rotation invariance is an exact operator identity") {
    // substituted operator normalizes to the identical canonical form
    corpus::Instance harder(corpus::harder_spec());
    CHECK(scale_transform(harder.analysis.op, GaussianRational::i()) == harder.analysis.op);
    corpus::Instance at(corpus::arctan_spec());
    CHECK(scale_transform(at.analysis.op, gr(-1)) == at.analysis.op);
}

TEST_CASE("conjugation detection") {
    corpus::Instance at(corpus::arctan_spec());
    CHECK(detect_conjugation(at.analysis.op, at.analysis.ics));

    InitialConditions imag_ics{gr(0), {PiGaussian(GaussianRational::i()), pg(1)}};
    CHECK(!detect_conjugation(at.analysis.op, imag_ics));

    auto op = normalized_operator({Poly{GaussianRational(Rational(0)), GaussianRational::i()},
                                   from_real_coeffs({1})});  // coefficient x*i is not real
    InitialConditions real_ics{gr(0), {pg(1)}};
    CHECK(!detect_conjugation(op, real_ics));
}

TEST_CASE("conjugation implies real Taylor coefficients") {
    corpus::Instance at(corpus::arctan_spec());
    REQUIRE(detect_conjugation(at.analysis.op, at.analysis.ics));
    auto series = solution_series(at.analysis.op, at.analysis.ics, 40);
    for (const auto& c : series) CHECK(dd(abs(c.im)) < 1e-40);
}

TEST_CASE("arctan is odd") {
    corpus::Instance at(corpus::arctan_spec());
    auto aff = solution_affine_symmetry(at.analysis.op, at.analysis.ics, Complex(-1));
    REQUIRE(aff.has_value());
    CHECK(dd(abs(aff->lambda - Complex(-1))) < 1e-30);
    CHECK(dd(abs(aff->mu)) < 1e-30);
}

TEST_CASE("arccot_1 is odd apart from the constant pi") {
    corpus::Instance ac(corpus::arccot1_spec());
    auto aff = solution_affine_symmetry(ac.analysis.op, ac.analysis.ics, Complex(-1));
    REQUIRE(aff.has_value());
    CHECK(dd(abs(aff->lambda - Complex(-1))) < 1e-30);
    CHECK(dd(abs(aff->mu - Complex(real_pi()))) < 1e-30);
}

TEST_CASE("harder example satisfies f(ix) = -f(x)") {
    corpus::Instance harder(corpus::harder_spec());
    auto aff = solution_affine_symmetry(harder.analysis.op, harder.analysis.ics, Complex::i());
    REQUIRE(aff.has_value());
    CHECK(dd(abs(aff->lambda - Complex(-1))) < 1e-30);
    CHECK(dd(abs(aff->mu)) < 1e-30);
}

TEST_CASE("affine symmetry applied twice is consistent") {
    // y(w^2 x) = lambda^2 y(x) + (lambda + 1) mu, checked on the coefficients
    corpus::Instance ac(corpus::arccot1_spec());
    Complex w(-1);
    auto aff = solution_affine_symmetry(ac.analysis.op, ac.analysis.ics, w);
    REQUIRE(aff.has_value());
    int N = 40;
    auto t = solution_series(ac.analysis.op, ac.analysis.ics, N + 1);
    Complex w2 = w * w;
    Complex lam2 = aff->lambda * aff->lambda;
    Complex mu2 = (aff->lambda + Complex(1)) * aff->mu;
    Complex wk(1);
    for (int k = 0; k <= N; ++k) {
        Complex lhs = t[k] * wk;
        Complex rhs = lam2 * t[k] + (k == 0 ? mu2 : Complex(0));
        CHECK(dd(abs(lhs - rhs)) < 1e-30);
        wk *= w2;
    }
}

TEST_CASE("generic initial conditions break the odd symmetry") {
    corpus::Instance at(corpus::arctan_spec());
    // y(0) = 0, y'(0) = 1 plus a quadratic kick is not odd-up-to-constant
    auto op3 = normalized_operator({Poly{}, Poly{}, Poly{}, from_real_coeffs({1})});  // y''' = 0
    InitialConditions ics{gr(0), {pg(0), pg(1), pg(1)}};
    auto aff = solution_affine_symmetry(op3, ics, Complex(-1));
    CHECK(!aff.has_value());  // y = x + x^2/2 has both parities
}

TEST_CASE("nontrivial rotation requires base point 0") {
    corpus::Instance sq(corpus::sqrt_spec());
    CHECK_THROWS_AS(solution_affine_symmetry(sq.analysis.op, sq.analysis.ics, Complex(-1)), Error);
}

TEST_CASE("profile aggregates the pieces") {
    corpus::Instance harder(corpus::harder_spec());
    const auto& prof = harder.analysis.profile;
    CHECK(prof.conjugation);
    CHECK(prof.rotation_order == 4);
    CHECK(!prof.infinite_order);
    REQUIRE(prof.affine.has_value());
    CHECK(dd(abs(prof.affine->lambda - Complex(-1))) < 1e-30);
}
