#include <doctest.h>

#include <branchcut/series.hpp>
#include <cmath>
#include <thread>

#include "corpus.hpp"

using namespace branchcut;
using corpus::dd;
using corpus::gr;
using corpus::pg;

namespace {

struct Setup {
    Setup() { set_working_digits(50); }
} setup;

Path diamond_loop() {
    // (1, i, -1, -i, 1) counter-clockwise around 0
    return Path{{Complex(1), Complex::i(), Complex(-1), Complex(0) - Complex::i(), Complex(1)}};
}

}  // namespace

TEST_CASE("taylor coefficients at the base point") {
    corpus::Instance at(corpus::arctan_spec());
    Jet jet{Complex(0), {Complex(0), Complex(1)}, Real(0)};
    auto u = at.engine.taylor_coeffs(jet, 6);
    Complex expect[] = {Complex(0), Complex(1),          Complex(0),
                        Complex(Real(-1) / 3), Complex(0), Complex(Real(1) / 5)};
    for (int k = 0; k < 6; ++k) CHECK(dd(abs(u[k] - expect[k])) < 1e-40);
}

TEST_CASE("taylor coefficients of y''=0 terminate") {
    auto op = normalized_operator({Poly{}, Poly{}, from_real_coeffs({1})});
    Engine eng(op, SingularSet{});
    Jet jet{Complex(0), {Complex(3), Complex(-2)}, Real(0)};
    auto u = eng.taylor_coeffs(jet, 8);
    CHECK(dd(abs(u[0] - Complex(3))) < 1e-40);
    CHECK(dd(abs(u[1] - Complex(-2))) < 1e-40);
    for (int k = 2; k < 8; ++k) CHECK(dd(abs(u[k])) < 1e-40);
}

TEST_CASE("series through the apparent origin equals the arctan(x^2) expansion") {
    corpus::Instance harder(corpus::harder_spec());
    const auto& s = harder.solution.base_series;
    CHECK(dd(abs(s[2] - Complex(1))) < 1e-40);
    CHECK(dd(abs(s[6] - Complex(Real(-1) / 3))) < 1e-38);
    CHECK(dd(abs(s[10] - Complex(Real(1) / 5))) < 1e-38);
    CHECK(dd(abs(s[0])) < 1e-40);
    CHECK(dd(abs(s[4])) < 1e-40);
}

TEST_CASE("single steps against library oracles") {
    corpus::Instance lg(corpus::log_spec());
    Path p1{{Complex(1), Complex(Real(1) / 2)}};
    Jet j1 = continue_solution(lg.engine, lg.solution, p1);
    CHECK(dd(abs(j1.values[0] - Complex(Real(std::log(0.5))))) < 1e-15);

    corpus::Instance at(corpus::arctan_spec());
    Path p2{{Complex(0), Complex(Real(1) / 2)}};
    Jet j2 = continue_solution(at.engine, at.solution, p2);
    CHECK(dd(abs(j2.values[0] - Complex(Real(std::atan(0.5))))) < 1e-15);

    corpus::Instance sq(corpus::sqrt_spec());
    Path p3{{Complex(1), Complex(Real(3) / 2)}};
    Jet j3 = continue_solution(sq.engine, sq.solution, p3);
    CHECK(dd(abs(j3.values[0] - Complex(sqrt(Real(3) / 2)))) < 1e-15);
}

TEST_CASE("step-ratio precondition is enforced") {
    corpus::Instance at(corpus::arctan_spec());
    Jet jet{Complex(0), {Complex(0), Complex(1)}, Real(0)};
    CHECK_THROWS_AS(at.engine.step(jet, Complex(Real("0.9"))), Error);  // 0.9 > rho * 1
    CHECK_NOTHROW(at.engine.step(jet, Complex(Real("0.45"))));
}

TEST_CASE("square root changes sign around the loop and returns after two turns") {
    corpus::Instance sq(corpus::sqrt_spec());
    Jet once = continue_solution(sq.engine, sq.solution, diamond_loop());
    CHECK(dd(abs(once.values[0] - Complex(-1))) < 1e-12);

    Path twice = diamond_loop();
    auto more = diamond_loop();
    twice.vertices.insert(twice.vertices.end(), more.vertices.begin() + 1, more.vertices.end());
    Jet back = continue_solution(sq.engine, sq.solution, twice);
    CHECK(dd(abs(back.values[0] - Complex(1))) < 1e-12);
}

TEST_CASE("logarithm picks up 2 pi i around the origin") {
    corpus::Instance lg(corpus::log_spec());
    Jet j = continue_solution(lg.engine, lg.solution, diamond_loop());
    CHECK(dd(abs(j.values[0] - Complex::i() * Complex(Real(2) * real_pi()))) < 1e-20);
}

TEST_CASE("paths need clearance and distinct vertices") {
    corpus::Instance lg(corpus::log_spec());
    Path through_origin{{Complex(1), Complex(-1)}};
    CHECK_THROWS_AS(continue_solution(lg.engine, lg.solution, through_origin), Error);
    Path stutter{{Complex(1), Complex(1)}};
    CHECK_THROWS_AS(continue_solution(lg.engine, lg.solution, stutter), Error);
    Path wrong_anchor{{Complex(2), Complex(3)}};
    CHECK_THROWS_AS(continue_solution(lg.engine, lg.solution, wrong_anchor), Error);
}

TEST_CASE("monodromy matrices") {
    corpus::Instance sq(corpus::sqrt_spec());
    auto m = sq.engine.monodromy(diamond_loop());
    REQUIRE(m.matrix.size() == 1);
    CHECK(dd(abs(m.matrix[0][0] - Complex(-1))) < 1e-12);

    // loop around both lower singularities of the harder example: trivial
    corpus::Instance harder(corpus::harder_spec());
    double h = dd(Real(1) / sqrt(Real(2)));
    Path loop{{Complex(Real(-1.5), Real(-0.2)), Complex(Real(1.5), Real(-0.2)),
               Complex(Real(1.5), Real(-1.3)), Complex(Real(-1.5), Real(-1.3)),
               Complex(Real(-1.5), Real(-0.2))}};
    (void)h;
    auto mh = harder.engine.monodromy(loop);
    CHECK(dd(mh.deviation_from_identity) < 1e-10);
    CHECK(dd(mh.condition) < 10);

    Path degenerate{{Complex(2), Complex(2)}};
    CHECK_THROWS_AS(harder.engine.monodromy(degenerate), Error);
}

TEST_CASE("monodromy of sqrt squared is the identity") {
    corpus::Instance sq(corpus::sqrt_spec());
    auto m = sq.engine.monodromy(diamond_loop());
    Complex sq_val = m.matrix[0][0] * m.matrix[0][0];
    CHECK(dd(abs(sq_val - Complex(1))) < 1e-12);
}

TEST_CASE("homotopy invariance: diamond around a regular region returns the jet") {
    corpus::Instance at(corpus::arctan_spec());
    // (0, 1+i, 2, 1-i, 0): diamond-shaped clockwise path around 1, no
    // singularity inside
    Path diamond{{Complex(0), Complex(Real(1), Real(1)), Complex(2), Complex(Real(1), Real(-1)), Complex(0)}};
    Jet j = continue_solution(at.engine, at.solution, diamond);
    CHECK(dd(abs(j.values[0] - at.solution.base.values[0])) < 1e-20);
    CHECK(dd(abs(j.values[1] - at.solution.base.values[1])) < 1e-20);
}

TEST_CASE("subdivision invariance: halving the step ratio stays within the error budget") {
    ContinuationOptions fine;
    fine.step_ratio = 0.25;
    corpus::Instance coarse(corpus::arctan_spec());
    corpus::Instance refined(corpus::arctan_spec(), fine);

    Path p{{Complex(0), Complex(Real(2), Real(2)), Complex(Real(-3), Real(1))}};
    Jet a = continue_solution(coarse.engine, coarse.solution, p);
    Jet b = continue_solution(refined.engine, refined.solution, p);
    Real budget = 10 * (a.error_estimate + b.error_estimate);
    CHECK(dd(abs(a.values[0] - b.values[0])) < dd(budget));

    corpus::Instance sq_c(corpus::sqrt_spec());
    corpus::Instance sq_f(corpus::sqrt_spec(), fine);
    Jet sa = continue_solution(sq_c.engine, sq_c.solution, diamond_loop());
    Jet sb = continue_solution(sq_f.engine, sq_f.solution, diamond_loop());
    CHECK(dd(abs(sa.values[0] - sb.values[0])) < dd(10 * (sa.error_estimate + sb.error_estimate)));
}

TEST_CASE("engine is safe to use from multiple threads") {
    corpus::Instance at(corpus::arctan_spec());
    Complex r1, r2;
    auto worker = [&](Complex target, Complex* out) {
        set_working_digits(50);
        Path p{{Complex(0), target}};
        *out = continue_solution(at.engine, at.solution, p).values[0];
    };
    std::thread t1(worker, Complex(2), &r1);
    std::thread t2(worker, Complex(-2), &r2);
    t1.join();
    t2.join();
    CHECK(dd(abs(r1 - Complex(Real(std::atan(2.0))))) < 1e-14);
    CHECK(dd(abs(r2 + Complex(Real(std::atan(2.0))))) < 1e-14);
}
