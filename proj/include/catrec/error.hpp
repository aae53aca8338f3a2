#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catrec {

enum class ErrorKind {
  InvalidInput,
  NotCaterpillar,
  CycleDetected,
  BadCardSize,
  NonIntegerKellyQuotient,
  LengthMismatch,
  WidthExceedsDomain,
  NotInTImage,
  BadPositionSet,
  NotPrime,
  Ambiguous,
  Inconsistent,
  WidthCapExceedsLength,
  InsufficientDeck,
  IndexOutOfCertifiedRange,
  InconsistentDeck,
  NoConsistentSequence,
  CardBudgetExceeded,
  MissingPredecessorDeck,
  NotCaterpillarDegrees,
  NotACaterpillarDeck,
  AmbiguousAtS,
  SearchLimitExceeded,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace catrec
