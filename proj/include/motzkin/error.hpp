#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motzkin {

// Every failure the library reports carries one of these codes so callers
// (and the CLI) can branch on the kind of failure rather than the message.
enum class Errc {
  BadParams,
  NegativeHeight,
  ColorOutOfRange,
  BadDropIndex,
  DepthViolation,
  NotSemialigned,
  EmptyPath,
  EmptyLength,
  ParseError,
  NonzeroInnerConstant,
  NonUnitConstant,
  ZeroConstantA,
  UnboundedResult,
  InsufficientOrder,
  BadA,
  NotProper,
  NegativeColorCount,
  NegativeEntry,
  NotRiordan,
  InvalidScheme,
  SchemeMismatch,
  ColorOutOfCodebook,
  UndecodableBlock,
  NotParityZero,
  WrongParity,
  BadDecomposition,
  InvalidPath,
  InexactDivision,
  TooShort,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace motzkin
