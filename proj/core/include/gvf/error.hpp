#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gvf {

enum class Errc {
    InvalidArgument,
    NonManifoldEdge,
    DegenerateTriangle,
    EmptySourceSet,
    MissingWeights,
    UnreachablePair,
    DisconnectedDomain,
    EmptyGuidingSet,
    DuplicateVertex,
    IndexOutOfRange,
    ElementNotFound,
    InvalidTree,
    InfeasibleGuidingSet,
    InternalIntervalEmpty,
    EmptyCandidateSet,
    DimensionMismatch,
    EmptyFixedSet,
    IsolatedFreeVertex,
    ParseError,
    DuplicateLocation,
    OutOfBounds,
    NonTriangleFace,
};

std::string_view to_string(Errc code) noexcept;

/// Base exception for every failure raised by the library. `code()` is the
/// machine-readable category; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Raised by the text readers. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message);
    ParseError(Errc code, std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace gvf
