#pragma once

#include <json.hpp>

#include "branchcut/cuts.hpp"
#include "branchcut/problem.hpp"

namespace branchcut {

using Json = nlohmann::ordered_json;

// Complex values are encoded as {"re": "...", "im": "..."} with decimal
// strings, preserving precision beyond 64-bit floats.
Json to_json(const Complex& z);
Json to_json(const SingularityReport& report);
Json to_json(const SymmetryProfile& profile);
Json to_json(const CutSystem& system, const SingularityReport& report);
Json to_json(const Jet& jet);
Json to_json(const MonodromyResult& m);
Json to_json(const ChordSearch& search, const SingularityReport& report);

}  // namespace branchcut
