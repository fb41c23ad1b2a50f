#include "branchcut/series.hpp"

#include <algorithm>

#include "branchcut/frobenius.hpp"

namespace branchcut {

namespace {

Real series_check_eps() { return pow10(-static_cast<long>(working_digits()) + 15); }

Real factorial_real(int k) {
    Real f(1);
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
}

// falling factorial K(K-1)...(K-i+1)
Real ff(int K, int i) {
    if (K < i) return Real(0);
    Real f(1);
    for (int j = 0; j < i; ++j) f *= (K - j);
    return f;
}

}  // namespace

std::vector<Complex> extend_taylor(const std::vector<CPoly>& a, std::vector<Complex> u, int count) {
    int n = static_cast<int>(a.size()) - 1;
    Complex an0 = a[n].coeff(0);
    if (an0.is_zero()) fail(ErrorKind::Internal, "taylor recurrence at a singular expansion point");
    if (static_cast<int>(u.size()) < n) fail(ErrorKind::Internal, "taylor recurrence needs order-many seeds");
    u.resize(std::max<size_t>(u.size(), n));
    for (int M = static_cast<int>(u.size()) - n; static_cast<int>(u.size()) < count; ++M) {
        Complex acc(0);
        for (int i = 0; i <= n; ++i)
            for (int c = 0; c <= a[i].degree(); ++c) {
                if (i == n && c == 0) continue;
                int K = M - c + i;
                if (K < 0 || K >= static_cast<int>(u.size()) || K < i) continue;
                Complex v = a[i].coeff(c);
                if (v.is_zero() || u[K].is_zero()) continue;
                acc += v * u[K] * Complex(ff(K, i));
            }
        u.push_back(-acc / (an0 * Complex(ff(M + n, n))));
    }
    u.resize(count);
    return u;
}

namespace {

std::vector<Complex> series_at_apparent_base(const DifferentialOperator& op, const InitialConditions& ics,
                                             int count) {
    // match initial derivatives against the analytic local basis
    int n = op.order();
    int want = count;
    LocalBasis basis = local_basis(op, ics.base_point, std::max(want + 4, n + 8));
    if (basis.has_log())
        fail(ErrorKind::Usage, "initial conditions are placed at a non-apparent singular point");

    struct Col {
        long lead;                    // absolute leading exponent
        std::vector<Complex> coeff;   // absolute Taylor coefficients
    };
    std::vector<Col> cols;
    long max_lead = 0;
    for (const auto& s : basis.solutions) {
        Complex e = s.exponent();
        Real r = round(e.re);
        if (abs(e.im) > 1e-9 || abs(e.re - r) > 1e-9 || r < 0)
            fail(ErrorKind::Usage, "initial conditions are placed at a non-apparent singular point");
        Col col;
        col.lead = r.convert_to<long>();
        max_lead = std::max(max_lead, col.lead);
        long nu = col.lead - s.leading_offset;  // base exponent of the group
        col.coeff.assign(basis.truncation + 1, Complex(0));
        for (size_t k = 0; k < s.coeff.size(); ++k) {
            long absk = nu + static_cast<long>(k);
            if (absk >= 0 && absk <= basis.truncation) col.coeff[absk] = s.coeff[k][0];
        }
        cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) { return a.lead < b.lead; });

    int given = static_cast<int>(ics.values.size());
    if (given < static_cast<int>(max_lead) + 1)
        fail(ErrorKind::Usage,
             "insufficient initial data at an apparent singularity: derivatives up to order " +
                 std::to_string(max_lead) + " are required");

    std::vector<Complex> target(given);
    Real scale(1);
    for (int r = 0; r < given; ++r) {
        target[r] = ics.values[r].to_complex() / Complex(factorial_real(r));
        scale = std::max(scale, abs(target[r]));
    }

    // sequential solve on the leading-exponent rows, then consistency check
    std::vector<Complex> beta(cols.size(), Complex(0));
    for (size_t j = 0; j < cols.size(); ++j) {
        Complex acc = target[cols[j].lead];
        for (size_t j2 = 0; j2 < j; ++j2) acc -= beta[j2] * cols[j2].coeff[cols[j].lead];
        beta[j] = acc / cols[j].coeff[cols[j].lead];
    }
    Real eps = series_check_eps() * scale;
    for (int r = 0; r < given; ++r) {
        Complex acc(0);
        for (size_t j = 0; j < cols.size(); ++j)
            if (r < static_cast<int>(cols[j].coeff.size())) acc += beta[j] * cols[j].coeff[r];
        if (abs(acc - target[r]) > eps)
            fail(ErrorKind::Usage, "initial conditions are inconsistent at the apparent singularity");
    }

    std::vector<Complex> u(count, Complex(0));
    for (int m = 0; m < count; ++m)
        for (size_t j = 0; j < cols.size(); ++j)
            if (m < static_cast<int>(cols[j].coeff.size())) u[m] += beta[j] * cols[j].coeff[m];
    return u;
}

}  // namespace

std::vector<Complex> solution_series(const DifferentialOperator& op, const InitialConditions& ics,
                                     int count) {
    int n = op.order();
    if (static_cast<int>(ics.values.size()) < n)
        fail(ErrorKind::Usage, "initial conditions must supply at least order-many values");
    if (count < n) count = n;

    bool base_singular = op.leading().eval(ics.base_point).is_zero();
    if (base_singular) return series_at_apparent_base(op, ics, count);

    std::vector<Complex> u;
    Real scale(1);
    for (int k = 0; k < n; ++k) {
        u.push_back(ics.values[k].to_complex() / Complex(factorial_real(k)));
        scale = std::max(scale, abs(u.back()));
    }
    auto shifted = op.shifted_coeffs(ics.base_complex());
    int need = std::max<int>(count, static_cast<int>(ics.values.size()));
    u = extend_taylor(shifted, std::move(u), need);

    // surplus values are consistency data
    Real eps = series_check_eps() * scale;
    for (size_t k = n; k < ics.values.size(); ++k) {
        Complex expect = ics.values[k].to_complex() / Complex(factorial_real(static_cast<int>(k)));
        if (abs(u[k] - expect) > eps)
            fail(ErrorKind::Usage, "surplus initial values are inconsistent with the operator");
    }
    u.resize(count);
    return u;
}

std::vector<Complex> inhomogeneous_derivatives(const LinearODE& ode, const InitialConditions& ics,
                                               int count) {
    int n = ode.order();
    if (static_cast<int>(ics.values.size()) != n)
        fail(ErrorKind::Usage, "inhomogeneous ODE needs exactly order-many initial values");
    if (ode.leading().eval(ics.base_point).is_zero())
        fail(ErrorKind::Usage, "base point is singular for the input ODE");
    if (ode.rhs.den.eval(ics.base_point).is_zero())
        fail(ErrorKind::Usage, "base point is a pole of the right-hand side");

    Complex x0 = ics.base_complex();
    int extra = std::max(0, count - n);

    // local series of d = p/q
    CPoly p = to_cpoly(ode.rhs.num).shifted(x0);
    CPoly q = to_cpoly(ode.rhs.den).shifted(x0);
    std::vector<Complex> d(extra + 1, Complex(0));
    Complex q0 = q.coeff(0);
    for (int M = 0; M <= extra; ++M) {
        Complex acc = p.coeff(M);
        for (int j = 1; j <= M; ++j) acc -= q.coeff(j) * d[M - j];
        d[M] = acc / q0;
    }

    std::vector<CPoly> a;
    for (const auto& c : ode.coeffs) a.push_back(to_cpoly(c).shifted(x0));
    Complex an0 = a[n].coeff(0);

    std::vector<Complex> u;
    for (int k = 0; k < n; ++k) u.push_back(ics.values[k].to_complex() / Complex(factorial_real(k)));
    for (int M = 0; static_cast<int>(u.size()) < count; ++M) {
        Complex acc(0);
        for (int i = 0; i <= n; ++i)
            for (int c = 0; c <= a[i].degree(); ++c) {
                if (i == n && c == 0) continue;
                int K = M - c + i;
                if (K < 0 || K >= static_cast<int>(u.size()) || K < i) continue;
                Complex v = a[i].coeff(c);
                if (v.is_zero() || u[K].is_zero()) continue;
                acc += v * u[K] * Complex(ff(K, i));
            }
        Complex rhsM = M <= extra ? d[M] : Complex(0);
        u.push_back((rhsM - acc) / (an0 * Complex(ff(M + n, n))));
    }

    std::vector<Complex> out(count);
    for (int k = 0; k < count; ++k) out[k] = u[k] * Complex(factorial_real(k));
    return out;
}

}  // namespace branchcut
