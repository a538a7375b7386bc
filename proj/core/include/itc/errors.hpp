#pragma once

#include <stdexcept>
#include <string>

namespace itc {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InconsistentRegistry : Error { using Error::Error; };
struct NotInDomain : Error { using Error::Error; };
struct InvalidTree : Error { using Error::Error; };
struct CycleDetected : Error { using Error::Error; };
struct NoPredecessor : Error { using Error::Error; };
struct DescriptorNotOwned : Error { using Error::Error; };
struct AgreementFailure : Error { using Error::Error; };
struct WrongModel : Error { using Error::Error; };
struct NotABranch : Error { using Error::Error; };
struct NotASupport : Error { using Error::Error; };
struct PruneFailed : Error { using Error::Error; };
struct NoTau : Error { using Error::Error; };
struct StageInvariantViolation : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Def 1.2 has three clauses; BacktrackMismatch is the Prop 1.3(1) gate.
struct ClauseViolation : Error {
  int clause;
  ClauseViolation(int c, const std::string& msg)
      : Error("tree embedding clause " + std::to_string(c) + ": " + msg), clause(c) {}
};
struct BacktrackMismatch : Error { using Error::Error; };

// A non-fatal check result. Checkers collect these instead of throwing.
struct Finding {
  std::string rule;   // which lemma/invariant
  std::string where;  // witness (node names, stage, ...)
  std::string detail;
};

}  // namespace itc
