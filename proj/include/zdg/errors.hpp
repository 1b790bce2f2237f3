#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A requested construction would exceed a configured resource cap.
class OrderCapExceededError : public Error {
public:
    using Error::Error;
};

/// Graph operation asked for on a ring that is not commutative.
class NotCommutativeError : public Error {
public:
    using Error::Error;
};

/// Generalized join called with host size != number of parts.
class ArityMismatchError : public Error {
public:
    using Error::Error;
};

/// Edge-set comparison between graphs over different vertex sets.
class VertexSetMismatchError : public Error {
public:
    using Error::Error;
};

/// Vertex argument not present in the graph.
class UnknownVertexError : public Error {
public:
    using Error::Error;
};

/// Isomorphism search on graphs above the vertex cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// Matrix decomposition requested on a ring that is not 2x2 over a finite field
/// with the transpose involution.
class NotM2OverFieldError : public Error {
public:
    using Error::Error;
};

/// Ring-spec text failed to parse; `position` is a 0-based offset into the input.
class SpecParseError : public Error {
public:
    SpecParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Involution suffix does not fit the base ring (e.g. @id on a non-commutative ring).
class IncompatibleInvolutionError : public Error {
public:
    using Error::Error;
};

}  // namespace zdg
