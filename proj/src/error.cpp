#include "racg/error.hpp"

namespace racg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotRightAngled: return "NotRightAngled";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EmptyIntersectionFamily: return "EmptyIntersectionFamily";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::WrongCardinality: return "WrongCardinality";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::GenerationUnverified: return "GenerationUnverified";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::NoneApplicable: return "NoneApplicable";
    case ErrorKind::RelationCheckFailed: return "RelationCheckFailed";
  }
  return "Unknown";
}

}  // namespace racg
