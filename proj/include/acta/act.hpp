#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acta/monoid.hpp"
#include "acta/partition.hpp"

namespace acta {

  enum class Side { left, right };

  [[nodiscard]] char const* to_string(Side side) noexcept;

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  [[nodiscard]] inline MonoidPtr share(FiniteMonoid M) {
    return std::make_shared<FiniteMonoid const>(std::move(M));
  }

  // A finite left or right S-act. action()[s][a] is the image of a under s,
  // that is s.a for a left act and a.s for a right act.
  class FiniteAct {
   public:
    // Throws index_out_of_range for a malformed table, then
    // identity_act_violation (witness a) or associativity_act_violation
    // (witness s, t, a).
    static FiniteAct build(MonoidPtr M, Side side, Table action,
                           std::vector<std::string> labels = {});

    [[nodiscard]] FiniteMonoid const& monoid() const noexcept {
      return *_monoid;
    }
    [[nodiscard]] MonoidPtr const& monoid_ptr() const noexcept {
      return _monoid;
    }
    [[nodiscard]] Side side() const noexcept {
      return _side;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] Element act(Element s, Element a) const {
      return _action[s][a];
    }
    [[nodiscard]] Table const& action() const noexcept {
      return _action;
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::string label(Element a) const;

    // Same multiplication table (acts share the ambient monoid).
    [[nodiscard]] bool same_monoid(FiniteAct const& other) const {
      return _monoid == other._monoid
             || _monoid->same_structure(*other._monoid);
    }

    friend bool operator==(FiniteAct const& x, FiniteAct const& y) {
      return x._side == y._side && x._size == y._size
             && x._action == y._action && x.same_monoid(y);
    }

   private:
    FiniteAct() = default;

    MonoidPtr                _monoid;
    Side                     _side = Side::left;
    std::size_t              _size = 0;
    Table                    _action;
    std::vector<std::string> _labels;
  };

  inline FiniteAct build_act(MonoidPtr M, Side side, Table action,
                             std::vector<std::string> labels = {}) {
    return FiniteAct::build(std::move(M), side, std::move(action),
                            std::move(labels));
  }

  // S acting on itself by multiplication on the given side.
  [[nodiscard]] FiniteAct regular_act(MonoidPtr M, Side side);
  // The one-element act.
  [[nodiscard]] FiniteAct trivial_act(MonoidPtr M, Side side);
  // Disjoint union; elements of B are shifted by A.size().
  [[nodiscard]] FiniteAct coproduct(FiniteAct const& A, FiniteAct const& B);

  struct Subact {
    FiniteAct            act;
    std::vector<Element> embedding;  // subact element -> element of parent
  };

  // The subact generated by gens, elements in increasing parent order.
  [[nodiscard]] Subact subact(FiniteAct const& A, std::vector<Element> const& gens);

  // The left ideal Se (or any S x) of the regular left act, as an act.
  [[nodiscard]] Subact principal_left_ideal(MonoidPtr M, Element x);

  [[nodiscard]] Partition connected_components(FiniteAct const& A);

  struct ActCongruence {
    Partition classes;

    friend bool operator==(ActCongruence const&, ActCongruence const&) = default;
  };

  [[nodiscard]] bool is_congruence(FiniteAct const& A, Partition const& P);

  // Least congruence containing the given pairs: the equivalence generated
  // by all (s.x, s.y) with (x, y) a given pair.
  [[nodiscard]] ActCongruence
  congruence_closure(FiniteAct const&                                A,
                     std::vector<std::pair<Element, Element>> const& pairs);

  struct ActMorphism {
    std::vector<Element> map;

    // Throws not_a_morphism (witness s, a) unless map(s.a) = s.map(a).
    static ActMorphism of(FiniteAct const& source, FiniteAct const& target,
                          std::vector<Element> map);

    [[nodiscard]] Element operator()(Element a) const {
      return map[a];
    }
    friend bool operator==(ActMorphism const&, ActMorphism const&) = default;
  };

  [[nodiscard]] bool is_morphism(FiniteAct const& source, FiniteAct const& target,
                                 std::vector<Element> const& map);

  // g after f.
  [[nodiscard]] ActMorphism compose(ActMorphism const& g, ActMorphism const& f);

  struct Quotient {
    FiniteAct   act;
    ActMorphism projection;
  };

  // Classes are numbered as in the canonical partition.
  [[nodiscard]] Quotient quotient(FiniteAct const& A, ActCongruence const& theta);

  // The unique h with h o projection = f, or nullopt if f is not constant on
  // the classes of theta.
  [[nodiscard]] std::optional<ActMorphism>
  factor_through(ActCongruence const& theta, ActMorphism const& f);

  struct CyclicIso {
    bool isomorphic = false;
    // (s.a, s.b) for s in S, sorted, when isomorphic
    std::vector<std::pair<Element, Element>> map;
  };

  // Sa and Sb are isomorphic via a -> b iff xa = ya <=> xb = yb for all x, y.
  [[nodiscard]] CyclicIso cyclic_iso(FiniteAct const& A, Element a,
                                     FiniteAct const& B, Element b);

  // e.a = a and xa = ya implies xe = ye. Throws not_idempotent.
  [[nodiscard]] bool right_e_cancellable(FiniteAct const& A, Element a,
                                         Element e);

  struct FreeProjReport {
    struct Component {
      std::vector<Element>   elements;
      std::optional<Element> generator;   // a with S.a = component
      std::optional<Element> idempotent;  // e certifying a right e-cancellable
    };
    std::vector<Component> components;
    bool                   is_free       = false;
    bool                   is_projective = false;
    // generators certified with the identity; the rank when free
    std::size_t free_rank = 0;
  };

  // Requires a left act (side_mismatch otherwise).
  [[nodiscard]] FreeProjReport classify_free_projective(FiniteAct const& A);

  // All left congruences of M in increasing restricted-growth order.
  // Throws order_exceeds_cap when M.order() > cap.
  [[nodiscard]] std::vector<ActCongruence> left_congruences(FiniteMonoid const& M,
                                                            std::size_t cap = 8);

  // Every act of the given size and side over M (not up to isomorphism).
  [[nodiscard]] std::vector<FiniteAct> enumerate_acts(MonoidPtr M, Side side,
                                                      std::size_t size);

}  // namespace acta
