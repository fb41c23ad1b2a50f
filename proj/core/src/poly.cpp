#include "branchcut/poly.hpp"

#include <sstream>

namespace branchcut {

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::Numeric, "polynomial division by zero");
    Poly q, r = a;
    int db = b.degree();
    if (a.degree() < db) return {q, r};
    q.c.assign(a.degree() - db + 1, GaussianRational(0));
    while (!r.is_zero() && r.degree() >= db) {
        GaussianRational f = r.leading() / b.leading();
        int k = r.degree() - db;
        q.c[k] = f;
        for (int j = 0; j <= db; ++j) r.c[j + k] -= f * b.c[j];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly exact_divide(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) fail(ErrorKind::Numeric, "polynomial division is not exact");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (GaussianRational(1) / a.leading());
    return a;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    Poly g = poly_gcd(p, p.derivative());
    Poly r = exact_divide(p, g);
    return r * (GaussianRational(1) / r.leading()) * p.leading();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    // Yun's algorithm
    Poly a = p * (GaussianRational(1) / p.leading());
    Poly d = a.derivative();
    Poly g = poly_gcd(a, d);
    Poly w = exact_divide(a, g);
    Poly y = exact_divide(d, g);
    int k = 1;
    while (w.degree() > 0) {
        Poly z = y - w.derivative();
        Poly f = poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, k);
        w = exact_divide(w, f);
        y = exact_divide(z, f);
        ++k;
    }
    return out;
}

Poly poly_gcd_list(const std::vector<Poly>& ps) {
    Poly g;
    for (const auto& p : ps) g = poly_gcd(g, p);
    return g;
}

Poly from_real_coeffs(std::initializer_list<long> coeffs) {
    Poly p;
    for (long v : coeffs) p.c.emplace_back(v);
    p.trim();
    return p;
}

std::string poly_str(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        GaussianRational a = p.coeff(k);
        if (a.is_zero()) continue;
        if (!first) {
            if (a.is_real() && a.re < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        first = false;
        std::string coeff = a.is_real() ? a.str() : "(" + a.str() + ")";
        if (k == 0) {
            os << coeff;
            continue;
        }
        if (!a.is_one()) os << coeff << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

CPoly to_cpoly(const Poly& p) {
    CPoly r;
    r.c.reserve(p.c.size());
    for (const auto& a : p.c) r.c.emplace_back(Complex(a));
    return r;
}

}  // namespace branchcut
