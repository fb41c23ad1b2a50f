#include "branchcut/frobenius.hpp"

#include <algorithm>

#include "branchcut/roots.hpp"

namespace branchcut {

CPoly clean_cpoly(const CPoly& p, const Real& rel_threshold) {
    Real m(0);
    for (const auto& a : p.c) m = std::max(m, abs(a));
    CPoly r = p;
    if (m == 0) {
        r.c.clear();
        return r;
    }
    Real cut = m * rel_threshold;
    for (auto& a : r.c)
        if (abs(a) <= cut) a = Complex(0);
    r.trim();
    return r;
}

namespace {

template <class K>
struct FT;

template <>
struct FT<GaussianRational> {
    static bool is_small(const GaussianRational& x, const Real&) { return x.is_zero(); }
    static Real mag(const GaussianRational& x) { return abs(Complex(x)); }
    static Complex to_complex(const GaussianRational& x) { return Complex(x); }
};

template <>
struct FT<Complex> {
    static bool is_small(const Complex& x, const Real& eps) { return abs(x) <= eps; }
    static Real mag(const Complex& x) { return abs(x); }
    static Complex to_complex(const Complex& x) { return x; }
};

template <class K>
struct Theta {
    std::vector<BasicPoly<K>> q;  // theta-polynomials q[j]
    int sigma = 0;
    int order = 0;
};

// t^sigma L = sum_j t^j q_j(theta), from coefficients local to the expansion
// point: D^i = t^-i theta(theta-1)...(theta-i+1), and monomial t-powers slide
// to the left of theta-polynomials without correction terms.
template <class K>
Theta<K> theta_form(const std::vector<BasicPoly<K>>& a, const Real& clean_rel) {
    int n = static_cast<int>(a.size()) - 1;
    int dmax = 0;
    for (const auto& p : a) dmax = std::max(dmax, p.degree());

    std::vector<BasicPoly<K>> ff(n + 1);
    ff[0] = BasicPoly<K>::constant(K(1));
    for (int i = 1; i <= n; ++i) ff[i] = ff[i - 1] * BasicPoly<K>({K(-(i - 1L)), K(1)});

    std::vector<BasicPoly<K>> bucket(dmax + n + 1);
    for (int i = 0; i <= n; ++i)
        for (int c = 0; c <= a[i].degree(); ++c) {
            K v = a[i].coeff(c);
            if (v.is_zero()) continue;
            bucket[c - i + n] = bucket[c - i + n] + ff[i] * v;
        }

    if constexpr (std::is_same_v<K, Complex>) {
        Real gmax(0);
        for (const auto& b : bucket)
            for (const auto& v : b.c) gmax = std::max(gmax, abs(v));
        if (gmax > 0) {
            Real cut = gmax * clean_rel;
            for (auto& b : bucket) {
                for (auto& v : b.c)
                    if (abs(v) <= cut) v = Complex(0);
                b.trim();
            }
        }
    }

    size_t emin = 0;
    while (emin < bucket.size() && bucket[emin].is_zero()) ++emin;
    if (emin == bucket.size()) fail(ErrorKind::Internal, "theta form of zero operator");
    Theta<K> th;
    th.sigma = n - static_cast<int>(emin);
    th.order = n;
    th.q.assign(bucket.begin() + emin, bucket.end());
    while (th.q.size() > 1 && th.q.back().is_zero()) th.q.pop_back();
    return th;
}

Real numeric_clean_rel() { return pow10(-static_cast<long>(working_digits()) + 10); }
Real numeric_compat_eps() { return pow10(-static_cast<long>(working_digits()) + 14); }

// one congruence class of exponents: base exponent nu and ascending integer
// offsets where the indicial polynomial vanishes, with multiplicities
template <class K>
struct Group {
    K nu;
    std::vector<std::pair<int, int>> collisions;
    int total_mult() const {
        int m = 0;
        for (auto& [k, mu] : collisions) m += mu;
        return m;
    }
};

template <class K>
struct RawSolution {
    int leading_offset = 0;
    int slot = 0;
    std::vector<std::vector<K>> coeff;  // coeff[k][l] of t^(nu+k) ln^l/l!
};

// March q_0((nu+k)I+U) u_k = -sum_{j>=1} q_j((nu+k-j)I+U) u_{k-j}, where U is
// the nilpotent shift on log coefficients; one pass per free initial slot.
// At a collision of multiplicity mu the system factors as U^mu V u = b with V
// invertible upper triangular, which forces the top mu components of b to
// vanish and leaves mu components of V u free.
template <class K>
std::vector<RawSolution<K>> march_group(const Theta<K>& th, const Group<K>& g, int N, const Real& eps) {
    const int L = g.total_mult() - 1;
    const int J = static_cast<int>(th.q.size()) - 1;

    // scaled derivatives q_j^(r)/r!; q_0 additionally up to the shifted range
    // the collision pivots need
    std::vector<std::vector<BasicPoly<K>>> dq(J + 1);
    for (int j = 0; j <= J; ++j) {
        int top = (j == 0) ? 2 * L + 2 : L;
        dq[j].resize(top + 1);
        dq[j][0] = th.q[j];
        for (int r = 1; r <= top; ++r)
            dq[j][r] = dq[j][r - 1].derivative() * (K(1) / K(static_cast<long>(r)));
    }

    std::vector<RawSolution<K>> out;
    for (auto& [kstar, mustar] : g.collisions) {
        for (int slot = 0; slot < mustar; ++slot) {
            RawSolution<K> sol;
            sol.leading_offset = kstar;
            sol.slot = slot;
            std::vector<std::vector<K>> u(N + 1, std::vector<K>(L + 1, K(0)));
            Real scale(1);
            for (int k = 0; k <= N; ++k) {
                std::vector<K> b(L + 1, K(0));
                for (int j = 1; j <= std::min(k, J); ++j) {
                    K c = g.nu + K(static_cast<long>(k - j));
                    for (int l = 0; l <= L; ++l) {
                        K acc(0);
                        bool any = false;
                        for (int r = 0; r + l <= L; ++r) {
                            const K& prev = u[k - j][l + r];
                            if (prev.is_zero()) continue;
                            acc += dq[j][r].eval(c) * prev;
                            any = true;
                        }
                        if (any) b[l] -= acc;
                    }
                }
                K c = g.nu + K(static_cast<long>(k));
                auto hit = std::find_if(g.collisions.begin(), g.collisions.end(),
                                        [&](const auto& p) { return p.first == k; });
                std::vector<K> unew(L + 1, K(0));
                if (hit != g.collisions.end()) {
                    int mu = hit->second;
                    for (int l = L - mu + 1; l <= L; ++l)
                        if (!FT<K>::is_small(b[l], eps * scale))
                            fail(ErrorKind::Internal, "Frobenius compatibility failed at a collision");
                    std::vector<K> w(L + 1, K(0));
                    for (int m = 0; m < mu; ++m) w[m] = (k == kstar && m == slot) ? K(1) : K(0);
                    for (int m = mu; m <= L; ++m) w[m] = b[m - mu];
                    K d = dq[0][mu].eval(c);
                    if (FT<K>::is_small(d, eps * scale))
                        fail(ErrorKind::Internal, "degenerate Frobenius pivot at collision");
                    for (int l = L; l >= 0; --l) {
                        K acc = w[l];
                        for (int r = 1; r + l <= L; ++r) acc -= dq[0][mu + r].eval(c) * unew[l + r];
                        unew[l] = acc / d;
                    }
                } else {
                    K d = dq[0][0].eval(c);
                    if (FT<K>::is_small(d, eps * scale))
                        fail(ErrorKind::Internal, "unexpected indicial zero off the collision set");
                    for (int l = L; l >= 0; --l) {
                        K acc = b[l];
                        for (int r = 1; r + l <= L; ++r) acc -= dq[0][r].eval(c) * unew[l + r];
                        unew[l] = acc / d;
                    }
                }
                u[k] = std::move(unew);
                for (const auto& v : u[k]) scale = std::max(scale, FT<K>::mag(v));
            }
            sol.coeff = std::move(u);
            out.push_back(std::move(sol));
        }
    }
    return out;
}

// normalize so the highest log component of the leading coefficient is 1
template <class K>
void normalize_solution(RawSolution<K>& s, const Real& eps) {
    int klead = -1, ltop = -1;
    Real m(0);
    for (const auto& row : s.coeff)
        for (const auto& v : row) m = std::max(m, FT<K>::mag(v));
    if (m == 0) fail(ErrorKind::Internal, "zero Frobenius solution");
    for (size_t k = 0; k < s.coeff.size() && klead < 0; ++k)
        for (int l = static_cast<int>(s.coeff[k].size()) - 1; l >= 0; --l)
            if (!FT<K>::is_small(s.coeff[k][l], eps * m)) {
                klead = static_cast<int>(k);
                ltop = l;
                break;
            }
    if (klead < 0) fail(ErrorKind::Internal, "zero Frobenius solution");
    s.leading_offset = klead;
    K pivot = s.coeff[klead][ltop];
    for (auto& row : s.coeff)
        for (auto& v : row) v = v / pivot;
}

template <class K>
int solution_log_degree(const RawSolution<K>& s, const Real& eps) {
    Real m(0);
    for (const auto& row : s.coeff)
        for (const auto& v : row) m = std::max(m, FT<K>::mag(v));
    int deg = 0;
    for (const auto& row : s.coeff)
        for (size_t l = 0; l < row.size(); ++l)
            if (!FT<K>::is_small(row[l], eps * m)) deg = std::max(deg, static_cast<int>(l));
    return deg;
}

bool rational_is_integer(const Rational& q) { return denominator(q) == 1; }

std::optional<long> gaussian_integer_value(const GaussianRational& g) {
    if (g.im != 0 || !rational_is_integer(g.re)) return std::nullopt;
    Integer n = numerator(g.re);
    if (n > 1000000 || n < -1000000) return std::nullopt;
    return n.convert_to<long>();
}

// exact exponent grouping by integer differences
std::vector<Group<GaussianRational>> group_exponents_exact(const std::vector<std::pair<GaussianRational, int>>& roots) {
    std::vector<Group<GaussianRational>> groups;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> members{i};
        used[i] = true;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            GaussianRational d = roots[j].first - roots[i].first;
            if (d.im == 0 && rational_is_integer(d.re)) {
                members.push_back(j);
                used[j] = true;
            }
        }
        // base = member with the smallest offset
        GaussianRational base = roots[members[0]].first;
        for (size_t j : members) {
            Rational off = roots[j].first.re - base.re;
            if (off < 0) base = roots[j].first;
        }
        Group<GaussianRational> g;
        g.nu = base;
        for (size_t j : members) {
            Rational off = roots[j].first.re - base.re;
            g.collisions.emplace_back(numerator(off).convert_to<int>(), roots[j].second);
        }
        std::sort(g.collisions.begin(), g.collisions.end());
        groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return complex_before(Complex(a.nu), Complex(b.nu), Real(1e-12));
    });
    return groups;
}

std::vector<Group<Complex>> group_exponents_numeric(const std::vector<std::pair<Complex, int>>& clusters) {
    Real tol("1e-6");
    std::vector<Group<Complex>> groups;
    std::vector<bool> used(clusters.size(), false);
    for (size_t i = 0; i < clusters.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::pair<long, size_t>> members{{0, i}};
        used[i] = true;
        for (size_t j = i + 1; j < clusters.size(); ++j) {
            if (used[j]) continue;
            Complex d = clusters[j].first - clusters[i].first;
            Real rounded = round(d.re);
            if (abs(d.im) < tol && abs(d.re - rounded) < tol) {
                members.emplace_back(rounded.convert_to<long>(), j);
                used[j] = true;
            }
        }
        long minoff = 0;
        for (auto& [off, j] : members) minoff = std::min(minoff, off);
        Group<Complex> g;
        size_t base_idx = members[0].second;
        for (auto& [off, j] : members)
            if (off == minoff) base_idx = j;
        g.nu = clusters[base_idx].first;
        for (auto& [off, j] : members) g.collisions.emplace_back(static_cast<int>(off - minoff), clusters[j].second);
        std::sort(g.collisions.begin(), g.collisions.end());
        groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return complex_before(a.nu, b.nu, Real(1e-12));
    });
    return groups;
}

Theta<GaussianRational> exact_theta_at(const DifferentialOperator& op, const GaussianRational& s) {
    return theta_form(op.shifted_coeffs_exact(s), Real(0));
}

Theta<Complex> numeric_theta_at(const DifferentialOperator& op, const Complex& s) {
    auto shifted = op.shifted_coeffs(s);
    for (auto& p : shifted) p = clean_cpoly(p, numeric_clean_rel());
    return theta_form(shifted, numeric_clean_rel());
}

void require_singular_exact(const DifferentialOperator& op, const GaussianRational& s) {
    if (!op.leading().eval(s).is_zero())
        fail(ErrorKind::Usage, "point is ordinary: indicial data is only defined at singular points");
}

}  // namespace

Poly indicial_polynomial(const DifferentialOperator& op, const GaussianRational& s) {
    require_singular_exact(op, s);
    return exact_theta_at(op, s).q[0];
}

CPoly indicial_polynomial_numeric(const DifferentialOperator& op, const Complex& s) {
    Real scale(0);
    for (const auto& a : op.leading().c) scale = std::max(scale, abs(Complex(a)));
    Real v = abs(to_cpoly(op.leading()).eval(s));
    if (v > scale * pow10(-static_cast<long>(working_digits()) + 12) * pow(std::max(Real(1), abs(s)), op.leading().degree()))
        fail(ErrorKind::Usage, "point is ordinary: indicial data is only defined at singular points");
    return numeric_theta_at(op, s).q[0];
}

bool is_regular_singular(const DifferentialOperator& op, const GaussianRational& s) {
    return exact_theta_at(op, s).q[0].degree() == op.order();
}

bool is_regular_singular_numeric(const DifferentialOperator& op, const Complex& s) {
    return numeric_theta_at(op, s).q[0].degree() == op.order();
}

std::vector<std::pair<Complex, int>> indicial_root_clusters(const CPoly& q0) {
    int n = q0.degree();
    if (n <= 0) return {};
    // lax Durand-Kerner: multiple roots converge slowly, cluster afterwards
    CPoly m = q0;
    Complex lead = m.c.back();
    for (auto& a : m.c) a /= lead;
    std::vector<Complex> z(n);
    Complex seed(Real("0.4"), Real("0.9"));
    Complex acc = seed;
    Real bound(0);
    for (int k = 0; k < n; ++k) bound = std::max(bound, abs(m.c[k]));
    bound += 1;
    for (int k = 0; k < n; ++k) {
        z[k] = acc * bound;
        acc *= seed;
    }
    Real target("1e-15");
    for (long it = 0; it < 400L * n; ++it) {
        Real worst(0);
        for (int k = 0; k < n; ++k) {
            Complex num = m.eval(z[k]);
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
        if (worst < target) break;
    }
    // cluster
    Real crad("1e-8");
    std::vector<bool> used(n, false);
    std::vector<std::pair<Complex, int>> out;
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        Complex sum = z[i];
        int cnt = 1;
        used[i] = true;
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            if (abs(z[j] - z[i]) < crad * (1 + abs(z[i]))) {
                sum += z[j];
                ++cnt;
                used[j] = true;
            }
        }
        out.emplace_back(sum / Complex(static_cast<long>(cnt)), cnt);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return complex_before(a.first, b.first, Real(1e-10)); });
    return out;
}

LocalBasis local_basis_numeric(const DifferentialOperator& op, const Complex& s, int truncation) {
    if (truncation < op.order()) fail(ErrorKind::Usage, "truncation below operator order");
    auto th = numeric_theta_at(op, s);
    if (th.q[0].degree() < op.order())
        fail(ErrorKind::Irregular, "irregular singular point: no full Frobenius basis");
    auto clusters = indicial_root_clusters(th.q[0]);
    auto groups = group_exponents_numeric(clusters);

    LocalBasis basis;
    basis.point = s;
    basis.truncation = truncation;
    basis.exact = false;
    Real eps = numeric_compat_eps();
    for (const auto& g : groups) {
        auto sols = march_group(th, g, truncation, eps);
        for (auto& raw : sols) {
            normalize_solution(raw, eps);
            LogSeries ls;
            ls.nu = g.nu;
            ls.leading_offset = raw.leading_offset;
            ls.log_degree = solution_log_degree(raw, eps);
            ls.coeff = std::move(raw.coeff);
            ls.exact = false;
            basis.solutions.push_back(std::move(ls));
        }
    }
    return basis;
}

LocalBasis local_basis(const DifferentialOperator& op, const GaussianRational& s, int truncation) {
    if (truncation < op.order()) fail(ErrorKind::Usage, "truncation below operator order");
    auto th = exact_theta_at(op, s);
    if (th.q[0].degree() < op.order())
        fail(ErrorKind::Irregular, "irregular singular point: no full Frobenius basis");

    // exact exponents when every indicial root reconstructs; otherwise the
    // basis is computed numerically
    std::vector<std::pair<GaussianRational, int>> exact_roots;
    bool all_exact = true;
    for (const auto& r : find_roots(th.q[0])) {
        if (!r.exact) {
            all_exact = false;
            break;
        }
        exact_roots.emplace_back(*r.exact, r.multiplicity);
    }
    if (!all_exact) {
        LocalBasis b = local_basis_numeric(op, Complex(s), truncation);
        b.exact_point = s;
        return b;
    }

    auto groups = group_exponents_exact(exact_roots);
    LocalBasis basis;
    basis.point = Complex(s);
    basis.exact_point = s;
    basis.truncation = truncation;
    basis.exact = true;
    for (const auto& g : groups) {
        auto sols = march_group(th, g, truncation, Real(0));
        for (auto& raw : sols) {
            normalize_solution(raw, Real(0));
            LogSeries ls;
            ls.nu = Complex(g.nu);
            ls.exact_nu = g.nu;
            ls.leading_offset = raw.leading_offset;
            ls.log_degree = solution_log_degree(raw, Real(0));
            ls.exact = true;
            ls.exact_coeff = std::move(raw.coeff);
            ls.coeff.reserve(ls.exact_coeff.size());
            for (const auto& row : ls.exact_coeff) {
                std::vector<Complex> crow;
                crow.reserve(row.size());
                for (const auto& v : row) crow.emplace_back(Complex(v));
                ls.coeff.push_back(std::move(crow));
            }
            basis.solutions.push_back(std::move(ls));
        }
    }
    return basis;
}

bool is_apparent(const DifferentialOperator& op, const GaussianRational& s, int truncation) {
    require_singular_exact(op, s);
    auto th = exact_theta_at(op, s);
    if (th.q[0].degree() < op.order()) return false;  // irregular, not apparent

    std::vector<long> exponents;
    for (const auto& r : find_roots(th.q[0])) {
        if (!r.exact) return false;
        auto n = gaussian_integer_value(*r.exact);
        if (!n || *n < 0 || r.multiplicity > 1) return false;
        exponents.push_back(*n);
    }
    long maxexp = *std::max_element(exponents.begin(), exponents.end());
    if (truncation < 0) truncation = static_cast<int>(maxexp) + op.order() + 8;
    auto basis = local_basis(op, s, truncation);
    return !basis.has_log();
}

}  // namespace branchcut
