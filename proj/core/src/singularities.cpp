#include "branchcut/singularities.hpp"

#include <algorithm>

#include "branchcut/roots.hpp"

namespace branchcut {

namespace {

// truncation that covers every integer exponent collision, so log terms
// cannot hide beyond it
int log_safe_truncation(const std::vector<Complex>& exponents, int order) {
    long maxoff = 0;
    for (size_t a = 0; a < exponents.size(); ++a)
        for (size_t b = 0; b < exponents.size(); ++b) {
            Complex d = exponents[a] - exponents[b];
            Real r = round(d.re);
            if (abs(d.im) < 1e-6 && abs(d.re - r) < 1e-6)
                maxoff = std::max(maxoff, std::abs(r.convert_to<long>()));
        }
    return static_cast<int>(maxoff) + order + 8;
}

void classify_exact(const DifferentialOperator& op, SingularPoint& pt) {
    const GaussianRational& s = *pt.exact;
    if (!is_regular_singular(op, s)) {
        pt.cls = PointClass::Irregular;
        return;
    }
    pt.cls = PointClass::Regular;
    Poly q0 = indicial_polynomial(op, s);
    bool all_exact = true;
    bool integer_candidate = true;
    for (const auto& r : find_roots(q0)) {
        for (int m = 0; m < r.multiplicity; ++m) pt.exponents.push_back(r.location);
        if (r.exact) {
            for (int m = 0; m < r.multiplicity; ++m) pt.exact_exponents.push_back(*r.exact);
            if (r.exact->im != 0 || denominator(r.exact->re) != 1 || r.exact->re < 0 || r.multiplicity > 1)
                integer_candidate = false;
        } else {
            all_exact = false;
            integer_candidate = false;
        }
    }
    pt.exponents_exact = all_exact;
    int N = log_safe_truncation(pt.exponents, op.order());
    pt.has_log = local_basis(op, s, N).has_log();
    if (integer_candidate && !pt.has_log) pt.cls = PointClass::Apparent;
}

void classify_numeric(const DifferentialOperator& op, SingularPoint& pt) {
    if (!is_regular_singular_numeric(op, pt.location)) {
        pt.cls = PointClass::Irregular;
        return;
    }
    pt.cls = PointClass::Regular;
    CPoly q0 = indicial_polynomial_numeric(op, pt.location);
    bool integer_candidate = true;
    for (const auto& [center, mult] : indicial_root_clusters(q0)) {
        for (int m = 0; m < mult; ++m) pt.exponents.push_back(center);
        Real r = round(center.re);
        bool is_int = abs(center.im) < 1e-6 && abs(center.re - r) < 1e-6 && r >= 0;
        if (!is_int || mult > 1) integer_candidate = false;
    }
    pt.exponents_exact = false;
    int N = log_safe_truncation(pt.exponents, op.order());
    pt.has_log = local_basis_numeric(op, pt.location, N).has_log();
    if (integer_candidate && !pt.has_log) pt.cls = PointClass::Apparent;
}

// "Ordinary" means not a singularity of the solutions: a genuinely ordinary
// point of the x -> 1/x transform, or an apparent singularity of it.
InfinityClass classify_infinity(const DifferentialOperator& op, bool& apparent) {
    apparent = false;
    DifferentialOperator rec = reciprocal_transform(op);
    if (rec.leading().valuation() == 0) return InfinityClass::Ordinary;
    GaussianRational zero(0);
    if (!is_regular_singular(rec, zero)) return InfinityClass::Irregular;
    if (is_apparent(rec, zero)) {
        apparent = true;
        return InfinityClass::Ordinary;
    }
    return InfinityClass::Regular;
}

}  // namespace

SingularityReport singularities(const DifferentialOperator& op, const Real& tol) {
    SingularityReport report;
    if (op.leading().degree() > 0) {
        for (const auto& root : find_roots(op.leading(), tol)) {
            SingularPoint pt;
            pt.location = root.location;
            pt.exact = root.exact;
            pt.factor = root.factor;
            pt.multiplicity = root.multiplicity;
            if (pt.exact)
                classify_exact(op, pt);
            else
                classify_numeric(op, pt);
            report.finite.push_back(std::move(pt));
        }
    }
    report.infinity = classify_infinity(op, report.infinity_apparent);
    return report;
}

SingularityReport singularities(const DifferentialOperator& op) {
    return singularities(op, Real(kDefaultRootTol));
}

const char* point_class_name(PointClass c) {
    switch (c) {
        case PointClass::Regular: return "regular";
        case PointClass::Irregular: return "irregular";
        case PointClass::Apparent: return "apparent";
    }
    return "?";
}

const char* infinity_class_name(InfinityClass c) {
    switch (c) {
        case InfinityClass::Ordinary: return "ordinary";
        case InfinityClass::Regular: return "regular";
        case InfinityClass::Irregular: return "irregular";
    }
    return "?";
}

}  // namespace branchcut
