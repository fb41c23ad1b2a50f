#include "branchcut/symmetry.hpp"

#include <numeric>

#include "branchcut/series.hpp"

namespace branchcut {

int detect_rotation_order(const DifferentialOperator& op, bool& infinite) {
    // x -> wx maps x^c D^i to w^(c-i) x^c D^i; the operator is a scalar
    // multiple of itself iff all exponent differences c - i agree mod m.
    infinite = false;
    long base = 0;
    bool have_base = false;
    long g = 0;
    for (size_t i = 0; i < op.coeffs.size(); ++i)
        for (int c = 0; c <= op.coeffs[i].degree(); ++c) {
            if (op.coeffs[i].coeff(c).is_zero()) continue;
            long d = c - static_cast<long>(i);
            if (!have_base) {
                base = d;
                have_base = true;
            } else {
                g = std::gcd(g, std::abs(d - base));
            }
        }
    if (!have_base) fail(ErrorKind::Usage, "zero operator");
    if (g == 0) {
        infinite = true;
        return 0;
    }
    return static_cast<int>(g);
}

bool detect_conjugation(const DifferentialOperator& op, const InitialConditions& ics) {
    return op.has_real_coefficients() && ics.all_real();
}

std::optional<AffineSymmetry> solution_affine_symmetry(const DifferentialOperator& op,
                                                       const InitialConditions& ics, const Complex& w,
                                                       int truncation) {
    bool w_is_one = abs(w - Complex(1)) < pow10(-20);
    if (!ics.base_point.is_zero() && !w_is_one)
        fail(ErrorKind::Usage, "affine symmetry detection requires base point 0 for a nontrivial rotation");

    auto t = solution_series(op, ics, truncation + 1);
    Real scale(0);
    for (const auto& c : t) scale = std::max(scale, abs(c));
    if (scale == 0) return AffineSymmetry{Complex(1), Complex(0)};  // zero solution
    Real eps = pow10(-20) * scale;

    int k1 = -1;
    for (int k = 1; k <= truncation; ++k)
        if (abs(t[k]) > eps) {
            k1 = k;
            break;
        }
    if (k1 < 0) return AffineSymmetry{Complex(1), Complex(0)};  // constant solution

    Complex lambda(1);
    for (int j = 0; j < k1; ++j) lambda *= w;
    Complex mu = t[0] * (Complex(1) - lambda);

    // verify t_k (w^k - lambda) = 0 for every k >= 1 up to the truncation
    Complex wk(1);
    for (int k = 1; k <= truncation; ++k) {
        wk *= w;
        if (abs(t[k] * (wk - lambda)) > eps) return std::nullopt;
    }
    return AffineSymmetry{lambda, mu};
}

SymmetryProfile detect_symmetries(const DifferentialOperator& op, const InitialConditions& ics) {
    SymmetryProfile profile;
    profile.conjugation = detect_conjugation(op, ics);
    profile.rotation_order = detect_rotation_order(op, profile.infinite_order);
    if (!profile.infinite_order && profile.rotation_order > 1 && ics.base_point.is_zero()) {
        Complex w = root_of_unity(1, profile.rotation_order);
        profile.affine = solution_affine_symmetry(op, ics, w);
    }
    return profile;
}

}  // namespace branchcut
