#include <benchmark/benchmark.h>

#include <branchcut/dsl.hpp>
#include <branchcut/evaluate.hpp>
#include <branchcut/roots.hpp>

using namespace branchcut;

namespace {

struct Fixture {
    ProblemSpec spec = parse_ode("(1+x^2)*D = 1 ; y(0)=0");
    Analysis analysis = analyze(spec);
    Engine engine = make_engine(analysis);
    Solution solution = make_solution(engine, analysis.ics);
    CutSystem cuts = propose_cuts(analysis.report, analysis.profile, analysis.ics);
};

Fixture& fixture() {
    set_working_digits(50);
    static Fixture f;
    return f;
}

}  // namespace

static void SingleStep(benchmark::State& state) {
    Fixture& f = fixture();
    Jet jet{Complex(0), {Complex(0), Complex(1)}, Real(0)};
    for (auto _ : state) {
        Jet out = f.engine.step(jet, Complex(Real(1) / 2));
        benchmark::DoNotOptimize(out.values[0]);
    }
}
BENCHMARK(SingleStep);

static void EvaluateOffCut(benchmark::State& state) {
    Fixture& f = fixture();
    Complex z(Real(2), Real(1));
    for (auto _ : state) {
        auto r = evaluate(f.engine, f.solution, f.cuts, f.analysis.report, z);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(EvaluateOffCut);

static void EvaluateOnCut(benchmark::State& state) {
    Fixture& f = fixture();
    Complex z(Real(0), Real(2));
    for (auto _ : state) {
        auto r = evaluate(f.engine, f.solution, f.cuts, f.analysis.report, z);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(EvaluateOnCut);

static void RootsDegreeEight(benchmark::State& state) {
    set_working_digits(50);
    Poly p = from_real_coeffs({-3, 0, 1, 2, 0, 0, 5, 0, 1});
    for (auto _ : state) {
        auto roots = find_roots(p);
        benchmark::DoNotOptimize(roots.size());
    }
}
BENCHMARK(RootsDegreeEight);

static void AnalyzeHarder(benchmark::State& state) {
    set_working_digits(50);
    ProblemSpec spec = parse_ode("x*(1+x^4)*D^2 + (3*x^4-1)*D = 0 ; y(0)=0, y'(0)=0, y''(0)=2");
    for (auto _ : state) {
        Analysis an = analyze(spec);
        benchmark::DoNotOptimize(an.report.finite.size());
    }
}
BENCHMARK(AnalyzeHarder);

BENCHMARK_MAIN();
