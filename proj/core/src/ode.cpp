#include "branchcut/ode.hpp"

namespace branchcut {

RationalFunction::RationalFunction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) fail(ErrorKind::Numeric, "rational function with zero denominator");
    if (num.is_zero()) {
        den = Poly::constant(GaussianRational(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = exact_divide(num, g);
        den = exact_divide(den, g);
    }
    GaussianRational lc = den.leading();
    num = num * (GaussianRational(1) / lc);
    den = den * (GaussianRational(1) / lc);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) fail(ErrorKind::Numeric, "rational function division by zero");
    return {a.num * b.den, a.den * b.num};
}

namespace {

// divide out common polynomial content and make the leading poly monic
std::vector<Poly> normalize_coeffs(std::vector<Poly> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) fail(ErrorKind::Usage, "zero differential operator");
    Poly g = poly_gcd_list(coeffs);
    if (g.degree() > 0)
        for (auto& c : coeffs) c = exact_divide(c, g);
    GaussianRational lc = coeffs.back().leading();
    for (auto& c : coeffs) c = c * (GaussianRational(1) / lc);
    return coeffs;
}

}  // namespace

void LinearODE::normalize() {
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty() || coeffs.back().is_zero())
        fail(ErrorKind::Usage, "ODE has zero leading coefficient");
    if (order() < 1) fail(ErrorKind::Usage, "ODE must have order at least 1");
    std::vector<Poly> all = coeffs;
    Poly g = poly_gcd_list(all);
    if (g.degree() > 0) {
        for (auto& c : coeffs) c = exact_divide(c, g);
        rhs = rhs / RationalFunction(g, Poly::constant(GaussianRational(1)));
    }
    GaussianRational lc = coeffs.back().leading();
    for (auto& c : coeffs) c = c * (GaussianRational(1) / lc);
    rhs = RationalFunction(rhs.num, rhs.den * Poly::constant(lc));
}

DifferentialOperator normalized_operator(std::vector<Poly> coeffs) {
    DifferentialOperator op;
    op.coeffs = normalize_coeffs(std::move(coeffs));
    if (op.order() < 1) fail(ErrorKind::Usage, "operator must have order at least 1");
    return op;
}

DifferentialOperator homogenize(const LinearODE& ode) {
    if (ode.coeffs.empty() || ode.leading().is_zero())
        fail(ErrorKind::Usage, "cannot homogenize: zero leading coefficient");
    if (ode.rhs.is_zero()) return normalized_operator(ode.coeffs);

    // M = p q (D o L) - (p' q - p q') L, clearing denominators of d = p/q
    const Poly& p = ode.rhs.num;
    const Poly& q = ode.rhs.den;
    Poly pq = p * q;
    Poly w = p.derivative() * q - p * q.derivative();
    int n = ode.order();
    std::vector<Poly> out(n + 2);
    for (int j = 0; j <= n + 1; ++j) {
        Poly cj = j <= n ? ode.coeffs[j] : Poly{};
        Poly cjm1 = (j >= 1 && j - 1 <= n) ? ode.coeffs[j - 1] : Poly{};
        out[j] = pq * (cj.derivative() + cjm1) - w * cj;
    }
    return normalized_operator(std::move(out));
}

DifferentialOperator reciprocal_transform(const DifferentialOperator& op) {
    int n = op.order();
    // S_i = (-t^2 D)^i as sum_j s_{i,j}(t) D^j
    std::vector<std::vector<Poly>> S(n + 1);
    S[0] = {Poly::constant(GaussianRational(1))};
    Poly mt2({GaussianRational(0), GaussianRational(0), GaussianRational(-1)});
    for (int i = 1; i <= n; ++i) {
        S[i].assign(i + 1, Poly{});
        for (int j = 0; j <= i; ++j) {
            Poly prev_d = j <= i - 1 ? S[i - 1][j].derivative() : Poly{};
            Poly prev_lo = (j >= 1 && j - 1 <= i - 1) ? S[i - 1][j - 1] : Poly{};
            S[i][j] = mt2 * (prev_d + prev_lo);
        }
    }
    int dmax = 0;
    for (const auto& c : op.coeffs) dmax = std::max(dmax, c.degree());
    std::vector<Poly> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (op.coeffs[i].is_zero()) continue;
        // c_i(1/t) * t^dmax = t^(dmax - deg) * reverse(c_i)
        Poly lifted = op.coeffs[i].reciprocal().shift_up(dmax - op.coeffs[i].degree());
        for (int j = 0; j <= i; ++j) out[j] = out[j] + lifted * S[i][j];
    }
    return normalized_operator(std::move(out));
}

DifferentialOperator scale_transform(const DifferentialOperator& op, const GaussianRational& w) {
    if (w.is_zero()) fail(ErrorKind::Usage, "scale substitution needs nonzero factor");
    std::vector<Poly> out(op.coeffs.size());
    GaussianRational winv_pow(1);
    GaussianRational winv = GaussianRational(1) / w;
    for (size_t i = 0; i < op.coeffs.size(); ++i) {
        out[i] = op.coeffs[i].scaled(w) * winv_pow;
        winv_pow *= winv;
    }
    return normalized_operator(std::move(out));
}

bool DifferentialOperator::has_real_coefficients() const {
    for (const auto& c : coeffs)
        for (const auto& a : c.c)
            if (a.im != 0) return false;
    return true;
}

std::vector<CPoly> DifferentialOperator::shifted_coeffs(const Complex& s) const {
    std::vector<CPoly> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(to_cpoly(c).shifted(s));
    return out;
}

std::vector<Poly> DifferentialOperator::shifted_coeffs_exact(const GaussianRational& s) const {
    std::vector<Poly> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.shifted(s));
    return out;
}

bool InitialConditions::all_real() const {
    if (base_point.im != 0) return false;
    for (const auto& v : values)
        if (!v.is_real()) return false;
    return true;
}

}  // namespace branchcut
