#ifndef SLP_ERRORS_HPP
#define SLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slp {

enum class ErrorKind {
    NotArtinian,
    ShapeMismatch,
    NonCommutingMaps,
    FieldMismatch,
    DegreeOutOfRange,
    ZeroModule,
    InvalidM,
    InvalidExponent,
    InvalidForm,
    NotPrime,
    NotSymmetric,
    NotSLP,
    NotTotallyOrdered,
    InconsistentDecomposition,
    ParseError,
    InternalInconsistency,
};

const char* error_kind_name(ErrorKind kind);

/// Single exception type for all library failures; `kind()` discriminates.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition)
        fail(kind, message);
}

}  // namespace slp

#endif
