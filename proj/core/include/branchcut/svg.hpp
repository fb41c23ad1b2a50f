#pragma once

#include <string>

#include "branchcut/cuts.hpp"

namespace branchcut {

// Cut-plane diagram: crosses for singularities, open circles for apparent
// points, bold cut lines (rays run to the frame with an arrow head), dashed
// convergence disk around the base point.
std::string render_svg(const CutSystem& system, const SingularityReport& report);

}  // namespace branchcut
