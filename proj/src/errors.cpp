#include "proxigraph/errors.hpp"

namespace proxigraph {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::AsymmetricMatrix: return "AsymmetricMatrix";
    case Errc::NegativeDistance: return "NegativeDistance";
    case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::EmptySet: return "EmptySet";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::UnknownPart: return "UnknownPart";
    case Errc::NotUltrametric: return "NotUltrametric";
    case Errc::NonpositiveShift: return "NonpositiveShift";
    case Errc::NotBijective: return "NotBijective";
    case Errc::PartsOverlap: return "PartsOverlap";
    case Errc::EmptyPart: return "EmptyPart";
    case Errc::EdgeWithinPart: return "EdgeWithinPart";
    case Errc::UnknownEndpoint: return "UnknownEndpoint";
    case Errc::EdgesOnInfiniteEmptyClaim: return "EdgesOnInfiniteEmptyClaim";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotCompletelyDecomposable: return "NotCompletelyDecomposable";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::WrongFamilyKind: return "WrongFamilyKind";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::NotTotal: return "NotTotal";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotBestProximityPair: return "NotBestProximityPair";
  }
  return "UnknownError";
}

}  // namespace proxigraph
