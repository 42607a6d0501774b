#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include "acta/act.hpp"
#include "acta/monoid.hpp"
#include "acta/partition.hpp"

namespace acta {

  using ActPair = std::pair<Element, Element>;  // (a, b) in A x B

  // A (x) B for a right act A and a left act B: the partition of A x B
  // generated by (a.s, b) ~ (a, s.b). Pair (a, b) has index a * |B| + b.
  struct TensorProduct {
    FiniteAct right_act;
    FiniteAct left_act;
    Partition classes;

    [[nodiscard]] std::size_t index(ActPair p) const {
      return p.first * left_act.size() + p.second;
    }
    [[nodiscard]] bool equal(ActPair p, ActPair q) const {
      return classes.same(index(p), index(q));
    }
    [[nodiscard]] std::size_t num_classes() const {
      return classes.num_classes();
    }
    // Members of each class as pairs, classes ordered by smallest member.
    [[nodiscard]] std::vector<std::vector<ActPair>> class_members() const;
  };

  // Throws side_mismatch or monoid_mismatch.
  [[nodiscard]] TensorProduct tensor(FiniteAct const& A, FiniteAct const& B);

  // (s_1, t_1, ..., s_m, t_m) with m >= 1.
  class Skeleton {
   public:
    // Throws index_out_of_range for an odd or empty entry list.
    static Skeleton of(std::vector<Element> entries);

    [[nodiscard]] std::size_t length() const noexcept {
      return _entries.size() / 2;
    }
    // 0-based: s(0) is s_1.
    [[nodiscard]] Element s(std::size_t i) const {
      return _entries[2 * i];
    }
    [[nodiscard]] Element t(std::size_t i) const {
      return _entries[2 * i + 1];
    }
    [[nodiscard]] std::vector<Element> const& entries() const noexcept {
      return _entries;
    }

    friend bool operator==(Skeleton const&, Skeleton const&) = default;
    friend auto operator<=>(Skeleton const& x, Skeleton const& y) {
      return x._entries <=> y._entries;
    }

   private:
    Skeleton() = default;
    std::vector<Element> _entries;
  };

  // A tossing of length m from (a, b) to (a', b'):
  //   b = s_1 b_1,  a_i s_i = a_{i+1} t_i,  t_i b_i = s_{i+1} b_{i+1},
  //   t_m b_m = b',  with a_1 = a and a_{m+1} = a'.
  struct Tossing {
    Skeleton             skeleton;
    std::vector<Element> left_chain;   // a, a_2, ..., a_m, a'
    std::vector<Element> right_chain;  // b, b_1, ..., b_m, b'
  };

  // All 2m + 1 defining equalities hold.
  [[nodiscard]] bool verify_tossing(FiniteAct const& A, FiniteAct const& B,
                                    Tossing const& T);

  // A tossing connecting p to q if p and q are equal in A (x) B. The
  // tossing has minimal length; among those, the lexicographically least
  // skeleton.
  [[nodiscard]] std::optional<Tossing>
  tensor_equal(FiniteAct const& A, FiniteAct const& B, ActPair p, ActPair q);

  struct ConditionCheck {
    bool                 holds = true;
    std::vector<Element> counterexample;
  };

  // (P): sx = ty implies x = s'z, y = t'z, ss' = tt' for some z, s', t'.
  // Counterexample (s, t, x, y).
  [[nodiscard]] ConditionCheck check_P(FiniteAct const& B);
  // (E): sx = tx implies x = s'z, ss' = ts' for some z, s'.
  // Counterexample (s, t, x).
  [[nodiscard]] ConditionCheck check_E(FiniteAct const& B);

  [[nodiscard]] bool is_strongly_flat(FiniteAct const& B);

  // Exact test: a (x) b = a' (x) b' in S (x) B must already hold in
  // (aS u a'S) (x) B. Witness (a, b, a', b') for the first failure.
  [[nodiscard]] ConditionCheck is_weakly_flat(FiniteAct const& B);

  enum class FlatStatus { yes, no, unknown };

  [[nodiscard]] char const* to_string(FlatStatus status) noexcept;

  // A standard tossing over F^{m+1}/rho_S and B whose end pairs are not
  // connected over [x]S u [x']S and B.
  struct FlatWitness {
    Skeleton             skeleton;
    std::vector<Element> right_chain;  // b, b_1, ..., b_m, b'

    friend bool operator==(FlatWitness const&, FlatWitness const&) = default;
  };

  struct FlatVerdict {
    FlatStatus                 status = FlatStatus::unknown;
    std::size_t                bound  = 0;
    std::optional<FlatWitness> witness;
    std::string                reason;

    friend bool operator==(FlatVerdict const&, FlatVerdict const&) = default;
  };

  struct FlatOptions {
    std::size_t threads = 1;
    // maximum number of skeletons explored before refusing
    std::size_t     budget = std::size_t(1) << 18;
    std::stop_token stop;
  };

  // Yes when B is strongly flat. Otherwise every skeleton of length
  // <= m_max is checked against the finitely presented right act
  // F^{m+1}/rho_S; the first failure (by length, then lexicographically) is
  // a No. When the search is clean but B is not weakly flat, the minimal
  // tossing of the weak-flatness failure supplies the No witness. Otherwise
  // unknown. Throws bound_too_large_for_budget, side_mismatch.
  [[nodiscard]] FlatVerdict flat_verdict(FiniteAct const& B, std::size_t m_max,
                                         FlatOptions const& options = {});

  // The right act F^{m+1}/rho_S with the classes of x and x'.
  struct PresentedAct {
    FiniteAct act;
    Element   x;
    Element   x_prime;
  };

  [[nodiscard]] PresentedAct presented_act(MonoidPtr M, Skeleton const& S);

  // Failure of the standard tossing check for one skeleton, if any.
  [[nodiscard]] std::optional<FlatWitness>
  check_skeleton(FiniteAct const& B, Skeleton const& S);

  // Rebuilds F^{m+1}/rho_S and confirms the witness chain satisfies the
  // standard tossing equations and its end pairs are disconnected.
  [[nodiscard]] bool replay_flat_witness(FiniteAct const&   B,
                                         FlatWitness const& w);

  // Left congruences theta with: u theta v iff s theta 1 and us = vs for
  // some s.
  [[nodiscard]] bool is_strongly_flat_congruence(FiniteMonoid const& M,
                                                 Partition const&    theta);
  [[nodiscard]] std::vector<ActCongruence>
  strongly_flat_left_congruences(FiniteMonoid const& M, std::size_t cap = 8);

  // The left congruence generated by T x T.
  [[nodiscard]] ActCongruence rho_of_submonoid(FiniteMonoid const& M,
                                               Submonoid const&    T);

  enum class FormulaKind { gamma, psi };

  // ASCII rendering with tokens E, A, ~, & and =, e.g. for (1, 1):
  //   E y1 . y = 1*y1 & 1*y1 = y'
  [[nodiscard]] std::string emit_formula(FormulaKind kind, Skeleton const& S,
                                         FiniteMonoid const& M);

}  // namespace acta
