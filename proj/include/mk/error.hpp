#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mk {

enum class ErrorCode {
  NotAPair,
  EmptyIntersection,
  NotARelation,
  NotAFunction,
  OutsideDomain,
  EmptyInput,
  RankTooLarge,
  SyntaxError,
  UnboundVariable,
  EmptyFamily,
  PreconditionFailed,
  NotAPartialOrder,
  EmptyCarrier,
  NotAWellOrder,
  NotAChoiceFunction,
  NotAMember,
  NotFiniteCharacter,
  NotANest,
  NotASubfamily,
  HypothesisFails,
  EmptyMemberPresent,
  NotDisjoint,
  SizeGuardExceeded,
  UnknownLemma,
  MalformedInstance,
  ParseError,
  NonCanonical,
  // A construction produced an object violating the conclusion it is meant
  // to establish. Never expected; suites count it as a failure.
  InvariantViolated,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPair: return "NotAPair";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::NotARelation: return "NotARelation";
    case ErrorCode::NotAFunction: return "NotAFunction";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::EmptyCarrier: return "EmptyCarrier";
    case ErrorCode::NotAWellOrder: return "NotAWellOrder";
    case ErrorCode::NotAChoiceFunction: return "NotAChoiceFunction";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotFiniteCharacter: return "NotFiniteCharacter";
    case ErrorCode::NotANest: return "NotANest";
    case ErrorCode::NotASubfamily: return "NotASubfamily";
    case ErrorCode::HypothesisFails: return "HypothesisFails";
    case ErrorCode::EmptyMemberPresent: return "EmptyMemberPresent";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::UnknownLemma: return "UnknownLemma";
    case ErrorCode::MalformedInstance: return "MalformedInstance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonCanonical: return "NonCanonical";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace mk
