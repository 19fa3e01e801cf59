#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace racg {

enum class ErrorKind {
  Parse,
  InvalidInput,
  NotRightAngled,
  LetterOutOfRange,
  NotAClique,
  TooLarge,
  EmptyIntersectionFamily,
  DimensionMismatch,
  NotFound,
  WrongCardinality,
  NotInvolution,
  GenerationUnverified,
  NoMatch,
  Ambiguous,
  NotBijective,
  SignatureMismatch,
  NoneApplicable,
  RelationCheckFailed,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is an Error; kind() separates refutations from bad input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace racg
