#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace branchcut {

// Full command dispatch, testable without a process boundary.
// Exit codes: 0 success, 2 parse/usage error, 3 irregular singularity,
// 4 rule failure, 5 numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branchcut
