#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "branchcut/scalar.hpp"

namespace branchcut {

// Dense univariate polynomial, coefficients lowest degree first. The zero
// polynomial is the empty coefficient vector. K is GaussianRational for the
// exact layer and Complex for shifted numeric coefficients; only exact zeros
// are ever trimmed, so numeric instantiations never lose small coefficients.
template <class K>
struct BasicPoly {
    std::vector<K> c;

    BasicPoly() = default;
    explicit BasicPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    BasicPoly(std::initializer_list<K> coeffs) : c(coeffs) { trim(); }

    static BasicPoly constant(K v) {
        BasicPoly p;
        p.c.push_back(std::move(v));
        p.trim();
        return p;
    }
    static BasicPoly x() { return BasicPoly({K(0), K(1)}); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero poly
    const K& leading() const { return c.back(); }

    // multiplicity of the root 0, i.e. index of the first nonzero coefficient
    int valuation() const {
        for (size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero()) return static_cast<int>(k);
        return -1;
    }

    K coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return K(0);
        return c[k];
    }

    friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        r.trim();
        return r;
    }
    friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
        r.trim();
        return r;
    }
    friend BasicPoly operator-(const BasicPoly& a) {
        BasicPoly r = a;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        BasicPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend BasicPoly operator*(const BasicPoly& a, const K& s) {
        BasicPoly r = a;
        for (auto& v : r.c) v *= s;
        r.trim();
        return r;
    }
    friend BasicPoly operator*(const K& s, const BasicPoly& a) { return a * s; }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c == b.c; }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

    BasicPoly derivative() const {
        BasicPoly r;
        for (size_t k = 1; k < c.size(); ++k) r.c.push_back(c[k] * K(static_cast<long>(k)));
        r.trim();
        return r;
    }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (size_t k = c.size(); k-- > 0;) acc = acc * x + V(c[k]);
        return acc;
    }

    // coefficients of p(x + s), synthetic-division shift
    BasicPoly shifted(const K& s) const {
        BasicPoly r = *this;
        int n = static_cast<int>(r.c.size());
        for (int i = 0; i < n; ++i)
            for (int j = n - 2; j >= i; --j) r.c[j] += r.c[j + 1] * s;
        return r;
    }

    // p(w*x)
    BasicPoly scaled(const K& w) const {
        BasicPoly r = *this;
        K p(1);
        for (size_t k = 0; k < r.c.size(); ++k) {
            r.c[k] *= p;
            p *= w;
        }
        r.trim();
        return r;
    }

    // numerator of p(1/x) after clearing x^deg: plain coefficient reversal
    BasicPoly reciprocal() const {
        BasicPoly r = *this;
        std::reverse(r.c.begin(), r.c.end());
        r.trim();
        return r;
    }

    BasicPoly shift_up(int k) const {  // multiply by x^k
        if (is_zero() || k == 0) return *this;
        BasicPoly r;
        r.c.assign(c.size() + k, K(0));
        std::copy(c.begin(), c.end(), r.c.begin() + k);
        return r;
    }
};

using Poly = BasicPoly<GaussianRational>;
using CPoly = BasicPoly<Complex>;

// ---- exact-only operations on Poly ----

// quotient and remainder; denominator must be nonzero
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

// exact division, error (Numeric) when remainder is nonzero
Poly exact_divide(const Poly& a, const Poly& b);

// monic gcd (gcd of zero polys is zero)
Poly poly_gcd(Poly a, Poly b);

// product of distinct irreducible factors, each to the first power
Poly squarefree_part(const Poly& p);

// squarefree decomposition p = prod f_k^k (Yun), pairs (factor, multiplicity)
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// gcd of a list of polys (used for content normalization of operators)
Poly poly_gcd_list(const std::vector<Poly>& ps);

Poly from_real_coeffs(std::initializer_list<long> coeffs);

std::string poly_str(const Poly& p, const std::string& var = "x");

CPoly to_cpoly(const Poly& p);

}  // namespace branchcut
