#include "topo/error.hpp"

namespace topo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateVertexInSimplex: return "DuplicateVertexInSimplex";
    case ErrorKind::EmptySimplex: return "EmptySimplex";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::ApexCollision: return "ApexCollision";
    case ErrorKind::NotASubcomplex: return "NotASubcomplex";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::BadCover: return "BadCover";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadEmbedding: return "BadEmbedding";
    case ErrorKind::NotSelfMap: return "NotSelfMap";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace topo
