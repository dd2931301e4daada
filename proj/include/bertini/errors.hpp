#ifndef BERTINI_ERRORS_HPP
#define BERTINI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bertini {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands live in different coefficient fields.
struct FieldMismatchError : Error {
    explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

/// Matrix/vector dimensions do not fit the operation.
struct ShapeError : Error {
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

/// Expression text rejected by the polynomial grammar; `position` is the
/// byte offset of the offending token.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Invalid input configuration: bad point sets, malformed files,
/// out-of-range parameters.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Operation requires a homogeneous form.
struct NonHomogeneousError : Error {
    explicit NonHomogeneousError(const std::string& msg) : Error(msg) {}
};

/// Coordinate change by a singular matrix.
struct InvalidTransformError : Error {
    explicit InvalidTransformError(const std::string& msg) : Error(msg) {}
};

/// A variety failed its Jacobian rank check at a touched point.
struct SmoothnessViolationError : Error {
    explicit SmoothnessViolationError(const std::string& msg) : Error(msg) {}
};

/// Point enumeration would exceed the configured budget.
struct CapExceededError : Error {
    explicit CapExceededError(const std::string& msg) : Error(msg) {}
};

/// A linear system with no nonzero members where one is required.
struct EmptySystemError : Error {
    explicit EmptySystemError(const std::string& msg) : Error(msg) {}
};

}  // namespace bertini

#endif  // BERTINI_ERRORS_HPP
