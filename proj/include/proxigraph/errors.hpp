#ifndef PROXIGRAPH_ERRORS_HPP
#define PROXIGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace proxigraph {

// Every domain failure the library can report. Tests match on the code;
// messages carry the offending labels/indices.
enum class Errc {
  // space validation
  AsymmetricMatrix,
  NegativeDistance,
  NonzeroDiagonal,
  ZeroOffDiagonal,
  DuplicateLabel,
  // space queries
  EmptySet,
  UnknownPoint,
  UnknownPart,
  NotUltrametric,
  NonpositiveShift,
  NotBijective,
  // graph validation and queries
  PartsOverlap,
  EmptyPart,
  EdgeWithinPart,
  UnknownEndpoint,
  EdgesOnInfiniteEmptyClaim,
  EmptyGraph,
  TooLarge,
  // realization
  NotCompletelyDecomposable,
  InvalidIndex,
  WrongFamilyKind,
  // sweeps
  UnknownSuite,
  // cyclic maps
  NotTotal,
  NotCyclic,
  PreconditionFailed,
  NotBestProximityPair,
};

const char* to_string(Errc code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw DomainError(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace proxigraph

#endif
