#include "branchcut/continuation.hpp"

#include <algorithm>

#include "branchcut/geometry.hpp"
#include "branchcut/series.hpp"

namespace branchcut {

namespace {

Real huge_radius() { return pow10(30); }

Real factorial_real(int k) {
    Real f(1);
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
}

Real ff(int K, int i) {
    if (K < i) return Real(0);
    Real f(1);
    for (int j = 0; j < i; ++j) f *= (K - j);
    return f;
}

}  // namespace

Real SingularSet::distance(const Complex& z) const {
    Real d = huge_radius();
    for (const auto& p : blocking) d = std::min(d, abs(z - p));
    return d;
}

Real SingularSet::apparent_distance(const Complex& z) const {
    Real d = huge_radius();
    for (const auto& p : apparent) d = std::min(d, abs(z - p));
    return d;
}

SingularSet singular_set(const SingularityReport& report) {
    SingularSet s;
    for (const auto& p : report.finite) {
        if (p.cls == PointClass::Apparent)
            s.apparent.push_back(p.location);
        else
            s.blocking.push_back(p.location);
    }
    return s;
}

Engine::Engine(DifferentialOperator op, SingularSet sing, ContinuationOptions opts)
    : op_(std::move(op)), sing_(std::move(sing)), opts_(opts) {}

std::vector<Complex> Engine::taylor_coeffs(const Jet& jet, int count) const {
    if (clearance_radius(jet.point) <= Real(opts_.clearance))
        fail(ErrorKind::Numeric, "expansion point is too close to a singularity");
    int n = order();
    if (static_cast<int>(jet.values.size()) != n)
        fail(ErrorKind::Usage, "jet length must equal the operator order");
    std::vector<Complex> u(n);
    for (int k = 0; k < n; ++k) u[k] = jet.values[k] / Complex(factorial_real(k));
    if (count <= n) {
        u.resize(count);
        return u;
    }
    return extend_taylor(op_.shifted_coeffs(jet.point), std::move(u), count);
}

Jet Engine::step_with_coeffs(const Jet& jet, const std::vector<Complex>& base_coeffs,
                             const Complex& target) const {
    int n = order();
    Complex h = target - jet.point;
    if (h.is_zero()) {
        Jet out = jet;
        out.point = target;
        return out;
    }

    std::vector<Complex> shifted_u = base_coeffs;  // may be extended lazily below
    bool can_extend = false;
    std::vector<CPoly> shifted;
    if (shifted_u.empty()) {
        shifted = op_.shifted_coeffs(jet.point);
        shifted_u.assign(jet.values.begin(), jet.values.end());
        for (int k = 0; k < n; ++k) shifted_u[k] /= Complex(factorial_real(k));
        can_extend = true;
    }

    std::vector<Complex> sums(n, Complex(0));
    std::vector<Complex> hpow{Complex(1)};  // h^k
    Real habs = abs(h);

    Real value_scale(1);
    for (const auto& v : jet.values) value_scale = std::max(value_scale, abs(v));
    Real eps(opts_.step_epsilon);
    int window = n + 2;
    int small_run = 0;
    Real tail(0);

    long k = 0;
    for (; k < opts_.max_terms; ++k) {
        if (k >= static_cast<int>(shifted_u.size())) {
            if (!can_extend)
                fail(ErrorKind::Numeric, "base series exhausted before the step tail converged");
            shifted_u = extend_taylor(shifted, std::move(shifted_u),
                                      static_cast<int>(shifted_u.size()) + 32);
        }
        if (k > 0) hpow.push_back(hpow.back() * h);
        const Complex& uk = shifted_u[k];
        for (int j = 0; j < n; ++j)
            if (k >= j) sums[j] += uk * Complex(ff(static_cast<int>(k), j)) * hpow[k - j];

        Real term = abs(uk) * pow(habs, static_cast<int>(k));
        Real scale = std::max(value_scale, abs(sums[0]));
        if (k >= n && term < eps * scale) {
            if (++small_run >= window) {
                tail = term * window;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    if (k >= opts_.max_terms)
        fail(ErrorKind::Numeric, "Taylor tail did not decay within the term budget");

    Jet out;
    out.point = target;
    out.values = std::move(sums);
    out.error_estimate = jet.error_estimate + tail + Real(opts_.step_epsilon) * value_scale;
    for (const auto& v : out.values) check_finite(v, "continuation step");
    return out;
}

Jet Engine::step(const Jet& jet, const Complex& target) const {
    Real rad = clearance_radius(jet.point);
    if (abs(target - jet.point) > Real(opts_.step_ratio) * rad * (1 + pow10(-20)))
        fail(ErrorKind::Usage, "step target violates the step-ratio rule");
    return step_with_coeffs(jet, {}, target);
}

void Engine::validate_path(const Path& path) const {
    if (path.vertices.size() < 1) fail(ErrorKind::Usage, "empty path");
    Real delta(opts_.clearance);
    for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Complex& a = path.vertices[i];
        const Complex& b = path.vertices[i + 1];
        if (abs(b - a) <= pow10(-30))
            fail(ErrorKind::Usage, "path has coincident consecutive vertices at leg " + std::to_string(i));
        for (const auto& s : sing_.blocking)
            if (dist_point_segment(s, a, b) < delta)
                fail(ErrorKind::Usage,
                     "path leg " + std::to_string(i) + " passes within the clearance of a singularity");
    }
}

Jet Engine::continue_along(Jet jet, const Path& path, const std::vector<Complex>* series_at_start,
                           const Real* start_step_limit) const {
    if (path.vertices.empty()) return jet;
    if (abs(path.vertices.front() - jet.point) > pow10(-25) * std::max(Real(1), abs(jet.point)))
        fail(ErrorKind::Usage, "path does not start at the jet's expansion point");
    validate_path(path);

    bool first_expansion = true;
    long guard = 0;
    for (size_t leg = 0; leg + 1 < path.vertices.size(); ++leg) {
        const Complex& target = path.vertices[leg + 1];
        while (jet.point != target) {
            if (++guard > 200000) fail(ErrorKind::Numeric, "continuation failed to advance along the path");
            Real rad = clearance_radius(jet.point);
            Complex rem = target - jet.point;
            Real rem_abs = abs(rem);
            Real allowed = Real(opts_.step_ratio) * rad;
            if (first_expansion && series_at_start != nullptr && start_step_limit != nullptr)
                allowed = std::min(allowed, *start_step_limit);
            Complex next;
            if (rem_abs <= allowed)
                next = target;
            else {
                Complex dir = rem / Complex(rem_abs);
                next = jet.point + Complex(allowed) * dir;
                // keep intermediate expansion points away from apparent
                // singularities, where the plain recurrence degenerates
                if (sing_.apparent_distance(next) < Real("1e-3") * allowed)
                    next = jet.point + Complex(allowed * Real("0.7")) * dir;
            }
            if (first_expansion && series_at_start != nullptr)
                jet = step_with_coeffs(jet, *series_at_start, next);
            else
                jet = step_with_coeffs(jet, {}, next);
            first_expansion = false;
        }
    }
    return jet;
}

MonodromyResult Engine::monodromy(const Path& loop, const std::vector<Jet>* basis_jets) const {
    if (loop.vertices.size() < 2) fail(ErrorKind::Usage, "monodromy loop needs at least two vertices");
    if (abs(loop.vertices.front() - loop.vertices.back()) > pow10(-25))
        fail(ErrorKind::Usage, "monodromy loop is not closed");
    int n = order();
    const Complex& base = loop.vertices.front();

    std::vector<Jet> basis;
    if (basis_jets) {
        basis = *basis_jets;
        if (static_cast<int>(basis.size()) != n) fail(ErrorKind::Usage, "basis must have order-many jets");
    } else {
        for (int j = 0; j < n; ++j) {
            Jet e;
            e.point = base;
            e.values.assign(n, Complex(0));
            e.values[j] = Complex(1);
            basis.push_back(std::move(e));
        }
    }

    // V beta = continued jet values; with the standard basis V is the identity
    std::vector<std::vector<Complex>> V(n, std::vector<Complex>(n));
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) V[r][j] = basis[j].values[r];

    MonodromyResult result;
    result.matrix.assign(n, std::vector<Complex>(n, Complex(0)));
    std::vector<std::vector<Complex>> continued(n);
    Real err(0);
    for (int j = 0; j < n; ++j) {
        Jet c = continue_along(basis[j], loop);
        continued[j] = c.values;
        err = std::max(err, c.error_estimate);
    }
    result.error_estimate = err;

    // solve V M = continued column by column (n is tiny)
    std::vector<std::vector<Complex>> A = V;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    // LU with partial pivoting
    for (int col = 0; col < n; ++col) {
        int piv = col;
        Real best = abs(A[col][col]);
        for (int r = col + 1; r < n; ++r)
            if (abs(A[r][col]) > best) {
                best = abs(A[r][col]);
                piv = r;
            }
        if (best == 0) fail(ErrorKind::Numeric, "basis jets are numerically degenerate");
        std::swap(A[col], A[piv]);
        std::swap(perm[col], perm[piv]);
        for (int r = col + 1; r < n; ++r) {
            Complex f = A[r][col] / A[col][col];
            A[r][col] = f;
            for (int c2 = col + 1; c2 < n; ++c2) A[r][c2] -= f * A[col][c2];
        }
    }
    Real normV(0), normVinv(0);
    for (int r = 0; r < n; ++r) {
        Real rowsum(0);
        for (int c2 = 0; c2 < n; ++c2) rowsum += abs(V[r][c2]);
        normV = std::max(normV, rowsum);
    }
    for (int j = 0; j < n; ++j) {
        // forward/back substitution on the permuted rhs
        std::vector<Complex> y(n);
        for (int r = 0; r < n; ++r) y[r] = continued[j][perm[r]];
        for (int r = 0; r < n; ++r)
            for (int c2 = 0; c2 < r; ++c2) y[r] -= A[r][c2] * y[c2];
        for (int r = n - 1; r >= 0; --r) {
            for (int c2 = r + 1; c2 < n; ++c2) y[r] -= A[r][c2] * y[c2];
            y[r] /= A[r][r];
        }
        for (int r = 0; r < n; ++r) result.matrix[r][j] = y[r];
    }
    // inverse norm estimate via the identity columns
    for (int j = 0; j < n; ++j) {
        std::vector<Complex> y(n, Complex(0));
        y[j] = Complex(1);
        std::vector<Complex> yp(n);
        for (int r = 0; r < n; ++r) yp[r] = y[perm[r]];
        for (int r = 0; r < n; ++r)
            for (int c2 = 0; c2 < r; ++c2) yp[r] -= A[r][c2] * yp[c2];
        for (int r = n - 1; r >= 0; --r) {
            for (int c2 = r + 1; c2 < n; ++c2) yp[r] -= A[r][c2] * yp[c2];
            yp[r] /= A[r][r];
        }
        Real colsum(0);
        for (int r = 0; r < n; ++r) colsum += abs(yp[r]);
        normVinv = std::max(normVinv, colsum);
    }
    result.condition = normV * normVinv;
    if (result.condition > pow10(12)) fail(ErrorKind::Numeric, "basis jets are numerically degenerate");

    Real dev(0);
    for (int r = 0; r < n; ++r)
        for (int c2 = 0; c2 < n; ++c2) {
            Complex expect = (r == c2) ? Complex(1) : Complex(0);
            dev = std::max(dev, abs(result.matrix[r][c2] - expect));
        }
    result.deviation_from_identity = dev;
    return result;
}

Solution make_solution(const Engine& engine, const InitialConditions& ics) {
    const auto& op = engine.op();
    int n = op.order();
    Real rad = engine.clearance_radius(ics.base_complex());
    if (rad <= Real(engine.options().clearance))
        fail(ErrorKind::Usage, "base point coincides with a non-apparent singularity");

    // series long enough for a worst-case first step at the ratio rule; the
    // tail criterion here is against scale 1, at least as strict as any
    // scale the step routine will later use
    Real hmax = Real(engine.options().step_ratio) * rad;
    if (hmax > pow10(12)) hmax = Real(1);  // no singularity anywhere: entire solution
    Real eps(engine.options().step_epsilon);
    int count = std::max(2 * n + 8, 16);
    std::vector<Complex> series;
    for (;;) {
        series = solution_series(op, ics, count);
        int window = n + 2, run = 0;
        bool ok = false;
        Real hp(1);
        for (int k = 0; k < count; ++k) {
            if (abs(series[k]) * hp < eps && k >= n) {
                if (++run >= window) {
                    ok = true;
                    break;
                }
            } else
                run = 0;
            hp *= hmax;
        }
        if (ok || count >= engine.options().max_terms) break;
        count *= 2;
    }

    Solution sol;
    sol.base.point = ics.base_complex();
    sol.base.values.resize(n);
    Real fact(1);
    for (int k = 0; k < n; ++k) {
        if (k > 0) fact *= k;
        sol.base.values[k] = series[k] * Complex(fact);
    }
    sol.base_series = std::move(series);
    sol.base_step_limit = hmax;
    return sol;
}

Jet continue_solution(const Engine& engine, const Solution& sol, const Path& path) {
    return engine.continue_along(sol.base, path, &sol.base_series, &sol.base_step_limit);
}

}  // namespace branchcut
