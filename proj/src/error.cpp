#include "sforest/error.hpp"

namespace sforest {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidName: return "InvalidName";
    case ErrorKind::InvalidRelation: return "InvalidRelation";
    case ErrorKind::DomainOverlap: return "DomainOverlap";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NotFTP: return "NotFTP";
    case ErrorKind::NotPartialOrder: return "NotPartialOrder";
    case ErrorKind::PairConflict: return "PairConflict";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotDiversified: return "NotDiversified";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotInGraph: return "NotInGraph";
    case ErrorKind::MalformedForestSet: return "MalformedForestSet";
    case ErrorKind::NotAForestOf: return "NotAForestOf";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorKind::ParseError, message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace sforest
