#pragma once

#include <stdexcept>
#include <string>

namespace branchcut {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorKind {
    Parse,        // exit 2
    Irregular,    // exit 3
    RuleFailure,  // exit 4
    Numeric,      // exit 5
    Usage,        // exit 2
    Internal,     // exit 5
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace branchcut
