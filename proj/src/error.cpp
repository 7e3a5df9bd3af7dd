#include "hyperkernel/error.hpp"

namespace hyperkernel {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyOperand: return "EmptyOperand";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NotAHypergroup: return "NotAHypergroup";
    case ErrorKind::NotASemihypergroup: return "NotASemihypergroup";
    case ErrorKind::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotStronglyRegular: return "NotStronglyRegular";
    case ErrorKind::NotASubhypergroup: return "NotASubhypergroup";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::CensusIncomplete: return "CensusIncomplete";
    case ErrorKind::InconsistentHeart: return "InconsistentHeart";
    case ErrorKind::InconsistentDerived: return "InconsistentDerived";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::InvalidLetter: return "InvalidLetter";
    case ErrorKind::IdentityLetter: return "IdentityLetter";
    case ErrorKind::AdjacentSameFactor: return "AdjacentSameFactor";
    case ErrorKind::FactorsNotPolygroups: return "FactorsNotPolygroups";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EmptyCell: return "EmptyCell";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

bool Error::is_resource_limit() const noexcept {
  return kind_ == ErrorKind::CapExceeded || kind_ == ErrorKind::BudgetExceeded ||
         kind_ == ErrorKind::SizeExceeded;
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace hyperkernel
