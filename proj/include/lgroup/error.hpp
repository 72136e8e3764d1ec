#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgroup {

enum class ErrorCode {
  NotALattice,
  NoBounds,
  DuplicateName,
  DanglingCover,
  ForeignElement,
  EmptySubset,
  NotAPermutation,
  SizeBudgetExceeded,
  NotASubgroup,
  NotNested,
  NotAHomomorphism,
  IncompleteGenerators,
  MismatchedCarriers,
  NotAnLSubgroup,
  NotContained,
  PointNotInParent,
  NotProper,
  BudgetExceeded,
  ParseError,
  ValidationError,
  InternalInconsistency,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NoBounds: return "NoBounds";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::DanglingCover: return "DanglingCover";
    case ErrorCode::ForeignElement: return "ForeignElement";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::IncompleteGenerators: return "IncompleteGenerators";
    case ErrorCode::MismatchedCarriers: return "MismatchedCarriers";
    case ErrorCode::NotAnLSubgroup: return "NotAnLSubgroup";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::PointNotInParent: return "PointNotInParent";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures also remember the 1-based line they occurred on.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lgroup
