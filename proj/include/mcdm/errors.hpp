#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcdm {

// Every failure the engine can signal. Codes are stable identifiers used by
// the CLI for exit-code mapping and by tests.
enum class Errc {
  // situation validation
  TooFewAlternatives,
  DimensionMismatch,
  IncompatibleCell,
  AllZeroWeights,
  NegativeWeight,
  MissingSortingCategories,
  BadCategories,
  BadScale,
  ZeroCount,
  // requirements
  BadThresholds,
  // registry / selection
  TieNotResolvable,
  StoreUnreadable,
  StoreUnwritable,
  UnknownMethod,
  // methods
  NotReciprocal,
  NotPositive,
  DimensionTooLarge,
  TooManyAlternatives,
  InconsistentMatrix,
  QualitativeDataUnsupported,
  EmptyUtility,
  NegativeSupport,
  UnsupportedProblem,
  MissingConfig,
  NonMonotoneThresholds,
  // io
  ParseError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mcdm
