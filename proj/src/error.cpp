#include "catrec/error.hpp"

namespace catrec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotCaterpillar: return "NotCaterpillar";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::BadCardSize: return "BadCardSize";
    case ErrorKind::NonIntegerKellyQuotient: return "NonIntegerKellyQuotient";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::WidthExceedsDomain: return "WidthExceedsDomain";
    case ErrorKind::NotInTImage: return "NotInTImage";
    case ErrorKind::BadPositionSet: return "BadPositionSet";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::WidthCapExceedsLength: return "WidthCapExceedsLength";
    case ErrorKind::InsufficientDeck: return "InsufficientDeck";
    case ErrorKind::IndexOutOfCertifiedRange: return "IndexOutOfCertifiedRange";
    case ErrorKind::InconsistentDeck: return "InconsistentDeck";
    case ErrorKind::NoConsistentSequence: return "NoConsistentSequence";
    case ErrorKind::CardBudgetExceeded: return "CardBudgetExceeded";
    case ErrorKind::MissingPredecessorDeck: return "MissingPredecessorDeck";
    case ErrorKind::NotCaterpillarDegrees: return "NotCaterpillarDegrees";
    case ErrorKind::NotACaterpillarDeck: return "NotACaterpillarDeck";
    case ErrorKind::AmbiguousAtS: return "AmbiguousAtS";
    case ErrorKind::SearchLimitExceeded: return "SearchLimitExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace catrec
