#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace acta {

  enum class ErrorKind {
    // input validation
    not_associative,
    not_identity,
    index_out_of_range,
    identity_act_violation,
    associativity_act_violation,
    not_a_submonoid,
    not_idempotent,
    identity_idempotent,
    side_mismatch,
    monoid_mismatch,
    not_a_morphism,
    syntax,
    // resource limits
    order_exceeds_cap,
    bound_too_large_for_budget,
    cancelled,
    // internal consistency
    no_cover,
    injection_failure,
    consistency_failure,
    // environment
    io
  };

  [[nodiscard]] char const* to_string(ErrorKind kind) noexcept;

  enum class ErrorClass { io, validation, cap, consistency };

  [[nodiscard]] ErrorClass error_class(ErrorKind kind) noexcept;

  // Every failure raised by the library. `witness` holds the element indices
  // that exhibit the violation, e.g. (a, b, c) for a non-associative triple.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message,
          std::vector<std::size_t> witness = {});

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorKind                _kind;
    std::vector<std::size_t> _witness;
  };

}  // namespace acta
