#pragma once

#include <stdexcept>
#include <string>

namespace sg {

// Failure classes. The C API and the CLI map these onto their numeric
// code contract: Usage -> 2, Numeric -> 4, everything else -> 3.
enum class ErrorKind {
    Usage,
    Io,
    Format,
    Bounds,
    Dimension,
    Domain,
    Numeric,
    Generation,
    State,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    int code() const {
        switch (kind_) {
        case ErrorKind::Usage: return 2;
        case ErrorKind::Numeric: return 4;
        default: return 3;
        }
    }

private:
    ErrorKind kind_;
};

} // namespace sg
