#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sforest {

enum class ErrorKind {
  InvalidName,
  InvalidRelation,
  DomainOverlap,
  NotInDomain,
  NotFTP,
  NotPartialOrder,
  PairConflict,
  BudgetExceeded,
  ParseError,
  NotDiversified,
  InvalidGraph,
  NotInGraph,
  MalformedForestSet,
  NotAForestOf,
  DomainMismatch,
  InvalidInput,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every precondition violation in the library is reported as an Error
/// carrying the kind of failure; the message is a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);

  /// Zero-based byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sforest
