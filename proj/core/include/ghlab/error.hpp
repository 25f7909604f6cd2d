#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghlab {

enum class ErrorKind {
  NotSquare,
  NonFiniteEntry,
  AsymmetricEntry,
  NonzeroDiagonal,
  NonpositiveDistance,
  TriangleViolation,
  EmptySpace,
  NonpositiveScale,
  TooFewPoints,
  EmptySubset,
  IndexOutOfRange,
  MixedSpaces,
  SamePoint,
  EmptyRelation,
  BadBlockCount,
  CardinalityMismatch,
  TooManySimplexPoints,
  HypothesisUnmet,
  NotInCone,
  NonpositiveCoordinate,
  DimensionMismatch,
  BadPermutation,
  TooLarge,
  BadArgument,
  IoError,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every recoverable failure in the library is reported as a ghlab::Error.
// `indices` carries the 0-based point (or edge) indices that identify the
// offending entry, e.g. (i, j, k) for a triangle violation; the message
// prints them 1-based.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail, std::vector<std::size_t> indices = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> indices_;
};

}  // namespace ghlab
