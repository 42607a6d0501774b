#include "acta/error.hpp"

namespace acta {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::not_associative: return "NotAssociative";
      case ErrorKind::not_identity: return "NotIdentity";
      case ErrorKind::index_out_of_range: return "IndexOutOfRange";
      case ErrorKind::identity_act_violation: return "IdentityActViolation";
      case ErrorKind::associativity_act_violation:
        return "AssociativityActViolation";
      case ErrorKind::not_a_submonoid: return "NotASubmonoid";
      case ErrorKind::not_idempotent: return "NotIdempotent";
      case ErrorKind::identity_idempotent: return "IdentityIdempotent";
      case ErrorKind::side_mismatch: return "SideMismatch";
      case ErrorKind::monoid_mismatch: return "MonoidMismatch";
      case ErrorKind::not_a_morphism: return "NotAMorphism";
      case ErrorKind::syntax: return "Syntax";
      case ErrorKind::order_exceeds_cap: return "OrderExceedsCap";
      case ErrorKind::bound_too_large_for_budget:
        return "BoundTooLargeForBudget";
      case ErrorKind::cancelled: return "Cancelled";
      case ErrorKind::no_cover: return "NoCover";
      case ErrorKind::injection_failure: return "InjectionFailure";
      case ErrorKind::consistency_failure: return "ConsistencyFailure";
      case ErrorKind::io: return "Io";
    }
    return "Unknown";
  }

  ErrorClass error_class(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::io: return ErrorClass::io;
      case ErrorKind::order_exceeds_cap:
      case ErrorKind::bound_too_large_for_budget:
      case ErrorKind::cancelled: return ErrorClass::cap;
      case ErrorKind::no_cover:
      case ErrorKind::injection_failure:
      case ErrorKind::consistency_failure: return ErrorClass::consistency;
      default: return ErrorClass::validation;
    }
  }

  Error::Error(ErrorKind kind, std::string const& message,
               std::vector<std::size_t> witness)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind),
        _witness(std::move(witness)) {}

}  // namespace acta
