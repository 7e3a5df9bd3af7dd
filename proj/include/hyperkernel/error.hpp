#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperkernel {

enum class ErrorKind {
  // core
  EmptyOperand,
  InvalidTable,
  NotAHypergroup,
  NotASemihypergroup,
  InvalidGroupTable,
  SizeExceeded,
  // relations
  CapExceeded,
  BudgetExceeded,
  NotRegular,
  NotStronglyRegular,
  NotASubhypergroup,
  ShapeMismatch,
  // groups
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotNormal,
  FamilyMismatch,
  // quotients
  CensusIncomplete,
  InconsistentHeart,
  InconsistentDerived,
  NotClosed,
  NotCanonical,
  // freeprod
  InvalidLetter,
  IdentityLetter,
  AdjacentSameFactor,
  FactorsNotPolygroups,
  InvariantViolation,
  // file formats
  ParseError,
  DuplicateLabel,
  EmptyCell,
  UnknownLabel,
  UnknownFixture,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and machine
/// readable; `what()` carries the witness in human-readable form.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  /// Budget and cap exhaustion map to a dedicated CLI exit code.
  bool is_resource_limit() const noexcept;

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace hyperkernel
