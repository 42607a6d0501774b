#pragma once

#include <cstddef>
#include <stop_token>
#include <string>
#include <vector>

namespace acta {

  // Elements of a monoid (and of an act) are dense indices 0, ..., n - 1.
  using Element = std::size_t;
  using Table   = std::vector<std::vector<Element>>;

  class FiniteMonoid {
   public:
    // Validates the table and returns the monoid. Throws acta::Error with
    // kind index_out_of_range, not_identity (witness a) or not_associative
    // (witness a, b, c), checked in that order.
    static FiniteMonoid build(Table table, Element identity,
                              std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t order() const noexcept {
      return _table.size();
    }
    [[nodiscard]] Element identity() const noexcept {
      return _identity;
    }
    [[nodiscard]] Element mul(Element a, Element b) const {
      return _table[a][b];
    }
    [[nodiscard]] Table const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    // Display name: the stored label, else "1" for the identity and "s<i>".
    [[nodiscard]] std::string label(Element a) const;

    [[nodiscard]] bool is_idempotent(Element e) const {
      return mul(e, e) == e;
    }
    [[nodiscard]] std::vector<Element> idempotents() const;

    // Sorted member lists of aS, Sa and SaS.
    [[nodiscard]] std::vector<Element> right_ideal(Element a) const;
    [[nodiscard]] std::vector<Element> left_ideal(Element a) const;
    [[nodiscard]] std::vector<Element> two_sided_ideal(Element a) const;

    // Structural equality of the multiplication (labels are ignored).
    [[nodiscard]] bool same_structure(FiniteMonoid const& other) const {
      return _identity == other._identity && _table == other._table;
    }

    friend bool operator==(FiniteMonoid const&, FiniteMonoid const&) = default;

   private:
    FiniteMonoid() = default;

    Table                    _table;
    Element                  _identity = 0;
    std::vector<std::string> _labels;
  };

  inline FiniteMonoid build_monoid(Table table, Element identity,
                                   std::vector<std::string> labels = {}) {
    return FiniteMonoid::build(std::move(table), identity, std::move(labels));
  }

  class Submonoid {
   public:
    // Throws not_a_submonoid unless members contain the identity and are
    // closed under multiplication; index_out_of_range for bad indices.
    static Submonoid of(FiniteMonoid const& M, std::vector<Element> members);

    [[nodiscard]] std::vector<Element> const& members() const noexcept {
      return _members;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _members.size();
    }
    [[nodiscard]] bool contains(Element x) const;

    friend bool operator==(Submonoid const&, Submonoid const&) = default;
    friend auto operator<=>(Submonoid const& x, Submonoid const& y) {
      return x._members <=> y._members;
    }

   private:
    Submonoid() = default;
    std::vector<Element> _members;  // sorted
  };

  [[nodiscard]] Submonoid submonoid_closure(FiniteMonoid const&         M,
                                            std::vector<Element> const& gens);

  // st in T and t in T imply s in T.
  [[nodiscard]] bool is_right_unitary(FiniteMonoid const& M, Submonoid const& T);

  // For all s, t in T there is u in T with su = tu. The collapser is sought
  // inside T; see right_collapser for the witness.
  [[nodiscard]] bool is_right_collapsible(FiniteMonoid const& M,
                                          Submonoid const&    T);

  // Smallest u in T with su = tu, or order() if none exists.
  [[nodiscard]] Element right_collapser(FiniteMonoid const& M,
                                        Submonoid const& T, Element s,
                                        Element t);

  // Every submonoid, sorted lexicographically by membership.
  [[nodiscard]] std::vector<Submonoid>
  enumerate_submonoids(FiniteMonoid const& M, std::size_t cap = 16,
                       std::stop_token stop = {});

  // The submonoids that are right unitary and right collapsible, sorted
  // lexicographically by membership. Throws order_exceeds_cap when
  // M.order() > cap and cancelled when stop is requested.
  [[nodiscard]] std::vector<Submonoid> enumerate_cu(FiniteMonoid const& M,
                                                    std::size_t cap = 16,
                                                    std::stop_token stop = {});

  enum class IdealSide { left, right, two_sided };

  [[nodiscard]] char const* to_string(IdealSide side) noexcept;

  struct IdealPoset {
    IdealSide                         side;
    std::vector<std::vector<Element>> ideals;   // sorted by (size, members)
    std::vector<std::size_t>          node_of;  // element -> ideal it generates
    // (i, j) with ideals[i] a proper subset of ideals[j]
    std::vector<std::pair<std::size_t, std::size_t>> strictly_below;
    std::vector<std::size_t>                         minimal;
    std::vector<std::size_t>                         maximal;
    // A finite poset has no infinite chains, so the descending and
    // ascending chain conditions hold for every finite monoid.
    bool descending_chain_condition = true;
    bool ascending_chain_condition  = true;
  };

  [[nodiscard]] IdealPoset principal_ideal_poset(FiniteMonoid const& M,
                                                 IdealSide           side);

}  // namespace acta
