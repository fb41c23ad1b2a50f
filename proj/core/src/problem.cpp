#include "branchcut/problem.hpp"

#include <algorithm>

#include "branchcut/roots.hpp"

namespace branchcut {

std::vector<PiGaussian> exact_derivatives(const LinearODE& ode, const InitialConditions& ics, int count) {
    int n = ode.order();
    if (static_cast<int>(ics.values.size()) != n)
        fail(ErrorKind::Usage, "inhomogeneous ODE needs exactly order-many initial values");
    const GaussianRational& x0 = ics.base_point;
    if (ode.leading().eval(x0).is_zero())
        fail(ErrorKind::Usage, "base point is singular for the input ODE");
    if (ode.rhs.den.eval(x0).is_zero())
        fail(ErrorKind::Usage, "base point is a pole of the right-hand side");

    int extra = std::max(0, count - n);

    // local series of d = p/q at x0
    Poly p = ode.rhs.num.shifted(x0);
    Poly q = ode.rhs.den.shifted(x0);
    std::vector<GaussianRational> d(extra + 1, GaussianRational(0));
    GaussianRational q0 = q.coeff(0);
    for (int M = 0; M <= extra; ++M) {
        GaussianRational acc = p.coeff(M);
        for (int j = 1; j <= M; ++j) acc -= q.coeff(j) * d[M - j];
        d[M] = acc / q0;
    }

    std::vector<Poly> a;
    a.reserve(ode.coeffs.size());
    for (const auto& c : ode.coeffs) a.push_back(c.shifted(x0));
    GaussianRational an0 = a[n].coeff(0);

    auto falling = [](int K, int i) {
        GaussianRational f(1);
        for (int j = 0; j < i; ++j) f *= GaussianRational(K - j);
        return f;
    };
    auto factorial = [](int k) {
        GaussianRational f(1);
        for (int j = 2; j <= k; ++j) f *= GaussianRational(j);
        return f;
    };

    std::vector<PiGaussian> u;
    for (int k = 0; k < n; ++k) u.push_back(ics.values[k] / factorial(k));
    for (int M = static_cast<int>(u.size()) - n; static_cast<int>(u.size()) < count; ++M) {
        PiGaussian acc;
        for (int i = 0; i <= n; ++i)
            for (int c = 0; c <= a[i].degree(); ++c) {
                if (i == n && c == 0) continue;
                int K = M - c + i;
                if (K < 0 || K >= static_cast<int>(u.size()) || K < i) continue;
                GaussianRational v = a[i].coeff(c);
                if (v.is_zero()) continue;
                acc = acc + (v * falling(K, i)) * u[K];
            }
        PiGaussian rhsM = M <= extra ? PiGaussian(d[M]) : PiGaussian();
        u.push_back((rhsM - acc) / (an0 * falling(M + n, n)));
    }

    std::vector<PiGaussian> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) out.push_back(factorial(k) * u[k]);
    return out;
}

Analysis analyze(const Problem& problem, const Real& root_tol) {
    Analysis out;
    out.op = homogenize(problem.ode);
    out.report = singularities(out.op, root_tol);

    out.ics = problem.ics;
    int needed = out.op.order();
    for (const auto& pt : out.report.finite) {
        if (pt.cls != PointClass::Apparent || !pt.exact || *pt.exact != problem.ics.base_point) continue;
        long maxexp = 0;
        for (const auto& e : pt.exact_exponents)
            maxexp = std::max(maxexp, numerator(e.re).convert_to<long>());
        needed = std::max(needed, static_cast<int>(maxexp) + 1);
    }
    if (static_cast<int>(out.ics.values.size()) < needed) {
        if (problem.ode.rhs.is_zero())
            fail(ErrorKind::Usage,
                 "initial conditions are too short for the operator (need " + std::to_string(needed) +
                     " values) and cannot be extended for a homogeneous input");
        out.ics.values = exact_derivatives(problem.ode, problem.ics, needed);
    }

    out.profile = detect_symmetries(out.op, out.ics);
    return out;
}

Analysis analyze(const Problem& problem) { return analyze(problem, Real(kDefaultRootTol)); }

Engine make_engine(const Analysis& analysis, ContinuationOptions opts) {
    return Engine(analysis.op, singular_set(analysis.report), opts);
}

}  // namespace branchcut
