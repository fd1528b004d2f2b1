#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gendet {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible or out-of-range shapes: wide input to a tall-only
/// operation, index outside the matrix, mismatched vector length.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A hard engine limit was exceeded (cofactor oracle beyond 7x7,
/// wedge oracle beyond ambient dimension 10).
class SizeError : public Error {
public:
    using Error::Error;
};

/// The number of maximal minors C(m,n) exceeds the configured cap.
class MinorCapError : public Error {
public:
    MinorCapError(std::uint64_t required, std::uint64_t cap)
        : Error("minor cap exceeded: C(m,n) = " + describe(required) +
                " > cap " + std::to_string(cap)),
          required_(required), cap_(cap) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    static std::string describe(std::uint64_t n);

    std::uint64_t required_;
    std::uint64_t cap_;
};

/// Non-finite floating input, or a Gram determinant negative beyond
/// the rounding tolerance.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Requested a quantity that only exists for solvable systems.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// The direction matrix of a directional determinant has linearly
/// dependent columns.
class DegenerateDirectionError : public Error {
public:
    using Error::Error;
};

/// Malformed CSV/JSON input or scalar literal.
class ParseError : public Error {
public:
    using Error::Error;
};

inline std::string MinorCapError::describe(std::uint64_t n) {
    // UINT64_MAX marks a saturated binomial.
    if (n == UINT64_MAX) return "(overflows 64 bits)";
    return std::to_string(n);
}

} // namespace gendet
