#pragma once

#include <optional>
#include <vector>

#include "branchcut/frobenius.hpp"
#include "branchcut/ode.hpp"

namespace branchcut {

enum class PointClass { Regular, Irregular, Apparent };
enum class InfinityClass { Ordinary, Regular, Irregular };

struct SingularPoint {
    Complex location;
    std::optional<GaussianRational> exact;
    Poly factor;           // exact squarefree factor of the leading coefficient
    int multiplicity = 1;  // as a root of the leading coefficient
    PointClass cls = PointClass::Regular;
    std::vector<Complex> exponents;  // indicial roots, empty for irregular points
    std::vector<GaussianRational> exact_exponents;
    bool exponents_exact = false;
    bool has_log = false;  // local basis carries a log term (regular points only)
};

struct SingularityReport {
    std::vector<SingularPoint> finite;
    InfinityClass infinity = InfinityClass::Ordinary;
    bool infinity_apparent = false;  // infinity is an apparent singularity of the transform

    bool any_irregular() const {
        for (const auto& p : finite)
            if (p.cls == PointClass::Irregular) return true;
        return infinity == InfinityClass::Irregular;
    }
    std::vector<size_t> non_apparent() const {
        std::vector<size_t> idx;
        for (size_t k = 0; k < finite.size(); ++k)
            if (finite[k].cls != PointClass::Apparent) idx.push_back(k);
        return idx;
    }
};

// Finite candidates are exactly the roots of the leading coefficient; each is
// classified by the degree of its indicial polynomial (full degree = regular)
// and regular candidates with distinct nonnegative integer exponents are
// tested for apparentness. Infinity is classified on the x -> 1/x transform.
SingularityReport singularities(const DifferentialOperator& op, const Real& tol);
SingularityReport singularities(const DifferentialOperator& op);

const char* point_class_name(PointClass c);
const char* infinity_class_name(InfinityClass c);

}  // namespace branchcut
