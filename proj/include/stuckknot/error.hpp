#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stuckknot {

enum class ErrorKind {
  SyntaxError,
  ArcMultiplicityError,
  OrientationError,
  NonPlanarError,
  NotStuck,
  NotClassical,
  ChoiceArityMismatch,
  EmptyDiagram,
  CapExceeded,
  BudgetExceeded,
  NegativeExponentSubstitution,
  InapplicableMove,
  InvariantMismatch,
  UnknownEntry,
};

std::string_view to_string(ErrorKind kind);

// what() reads "<Kind>: <detail>", which is also what the CLI prints.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Parse and validation failures, as opposed to misuse or budget limits.
  bool is_input_error() const noexcept {
    return kind_ == ErrorKind::SyntaxError || kind_ == ErrorKind::ArcMultiplicityError ||
           kind_ == ErrorKind::OrientationError || kind_ == ErrorKind::NonPlanarError ||
           kind_ == ErrorKind::EmptyDiagram || kind_ == ErrorKind::UnknownEntry;
  }

  bool is_budget_error() const noexcept {
    return kind_ == ErrorKind::BudgetExceeded || kind_ == ErrorKind::CapExceeded;
  }

private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::ArcMultiplicityError: return "ArcMultiplicityError";
  case ErrorKind::OrientationError: return "OrientationError";
  case ErrorKind::NonPlanarError: return "NonPlanarError";
  case ErrorKind::NotStuck: return "NotStuck";
  case ErrorKind::NotClassical: return "NotClassical";
  case ErrorKind::ChoiceArityMismatch: return "ChoiceArityMismatch";
  case ErrorKind::EmptyDiagram: return "EmptyDiagram";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  case ErrorKind::NegativeExponentSubstitution: return "NegativeExponentSubstitution";
  case ErrorKind::InapplicableMove: return "InapplicableMove";
  case ErrorKind::InvariantMismatch: return "InvariantMismatch";
  case ErrorKind::UnknownEntry: return "UnknownEntry";
  }
  return "Error";
}

} // namespace stuckknot
