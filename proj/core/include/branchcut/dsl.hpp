#pragma once

#include <string>

#include "branchcut/continuation.hpp"
#include "branchcut/problem.hpp"

namespace branchcut {

inline bool operator==(const Problem& a, const Problem& b) { return a.ode == b.ode && a.ics == b.ics; }

using ProblemSpec = Problem;

// Text form:  equation ';' ics
//   equation := opexpr '=' ratexpr
//   opexpr   := products of polynomial factors and D^k, combined with + - * /
//   ics      := y['...](point) '=' value {',' ...}
// Constants are exact rationals (decimals included); 'pi' is allowed in
// initial values. Errors carry line:column positions.
ProblemSpec parse_ode(const std::string& text);

// canonical text that reparses to an equal spec
std::string format_spec(const ProblemSpec& spec);

// scalar literals: "1+2i", "-0.5", "pi/2", "3/4*i" ...
PiGaussian parse_scalar_literal(const std::string& text);
Complex parse_complex_literal(const std::string& text);

// "[v1, v2, ...]" with complex literal entries
Path parse_path_literal(const std::string& text);

}  // namespace branchcut
