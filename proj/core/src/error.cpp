#include "ghlab/error.hpp"

namespace ghlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorKind::AsymmetricEntry: return "AsymmetricEntry";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::NonpositiveDistance: return "NonpositiveDistance";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::NonpositiveScale: return "NonpositiveScale";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MixedSpaces: return "MixedSpaces";
    case ErrorKind::SamePoint: return "SamePoint";
    case ErrorKind::EmptyRelation: return "EmptyRelation";
    case ErrorKind::BadBlockCount: return "BadBlockCount";
    case ErrorKind::CardinalityMismatch: return "CardinalityMismatch";
    case ErrorKind::TooManySimplexPoints: return "TooManySimplexPoints";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::NonpositiveCoordinate: return "NonpositiveCoordinate";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& detail,
                           const std::vector<std::size_t>& indices) {
  std::string msg(to_string(kind));
  if (!indices.empty()) {
    msg += '(';
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) msg += ',';
      msg += std::to_string(indices[i] + 1);
    }
    msg += ')';
  }
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, std::string detail, std::vector<std::size_t> indices)
    : std::runtime_error(format_message(kind, detail, indices)),
      kind_(kind),
      indices_(std::move(indices)) {}

}  // namespace ghlab
