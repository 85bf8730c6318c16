#pragma once

#include <stdexcept>
#include <string>

namespace thurston {

enum class ErrorKind {
    Argument,    // bad input value
    Validation,  // spec/config fails structural checks
    Precondition,// operation contract violated by caller
    Budget,      // iteration/size cap exceeded
    Degenerate,  // numerical degeneracy (collapsed configuration etc.)
    NotFound,    // named resource missing
    Io,          // file system failure
    Inconsistent // internal cross-check failed (modeling/tolerance problem)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Argument: return "argument";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::NotFound: return "not_found";
    case ErrorKind::Io: return "io";
    case ErrorKind::Inconsistent: return "inconsistent";
    }
    return "unknown";
}

} // namespace thurston
