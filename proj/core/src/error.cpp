#include "gvf/error.hpp"

namespace gvf {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NonManifoldEdge: return "NonManifoldEdge";
        case Errc::DegenerateTriangle: return "DegenerateTriangle";
        case Errc::EmptySourceSet: return "EmptySourceSet";
        case Errc::MissingWeights: return "MissingWeights";
        case Errc::UnreachablePair: return "UnreachablePair";
        case Errc::DisconnectedDomain: return "DisconnectedDomain";
        case Errc::EmptyGuidingSet: return "EmptyGuidingSet";
        case Errc::DuplicateVertex: return "DuplicateVertex";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::ElementNotFound: return "ElementNotFound";
        case Errc::InvalidTree: return "InvalidTree";
        case Errc::InfeasibleGuidingSet: return "InfeasibleGuidingSet";
        case Errc::InternalIntervalEmpty: return "InternalIntervalEmpty";
        case Errc::EmptyCandidateSet: return "EmptyCandidateSet";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::EmptyFixedSet: return "EmptyFixedSet";
        case Errc::IsolatedFreeVertex: return "IsolatedFreeVertex";
        case Errc::ParseError: return "ParseError";
        case Errc::DuplicateLocation: return "DuplicateLocation";
        case Errc::OutOfBounds: return "OutOfBounds";
        case Errc::NonTriangleFace: return "NonTriangleFace";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : ParseError(Errc::ParseError, line, message) {}

ParseError::ParseError(Errc code, std::size_t line, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace gvf
