#include "acta/monoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "acta/error.hpp"

namespace acta {

  namespace {

    using Membership = std::vector<bool>;

    std::vector<Element> to_members(Membership const& in) {
      std::vector<Element> out;
      for (Element x = 0; x < in.size(); ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    // Adds every product of members to `in` (and the identity).
    void close_under_mul(FiniteMonoid const& M, Membership& in) {
      std::vector<Element> work = to_members(in);
      if (!in[M.identity()]) {
        in[M.identity()] = true;
        work.push_back(M.identity());
      }
      while (!work.empty()) {
        Element x = work.back();
        work.pop_back();
        for (Element y = 0; y < M.order(); ++y) {
          if (!in[y]) {
            continue;
          }
          for (Element z : {M.mul(x, y), M.mul(y, x)}) {
            if (!in[z]) {
              in[z] = true;
              work.push_back(z);
            }
          }
        }
      }
    }

    // Least right unitary submonoid containing `in`.
    void close_right_unitary(FiniteMonoid const& M, Membership& in) {
      bool changed = true;
      while (changed) {
        close_under_mul(M, in);
        changed = false;
        for (Element s = 0; s < M.order(); ++s) {
          if (in[s]) {
            continue;
          }
          for (Element t = 0; t < M.order(); ++t) {
            if (in[t] && in[M.mul(s, t)]) {
              in[s]   = true;
              changed = true;
              break;
            }
          }
        }
      }
    }

    // All sets closed under `close`, by breadth-first extension of the
    // least closed set.
    std::vector<Membership>
    closed_sets(std::size_t n, std::function<void(Membership&)> const& close,
                std::stop_token const& stop) {
      Membership start(n, false);
      close(start);
      std::set<Membership>   seen{start};
      std::deque<Membership> queue{start};
      while (!queue.empty()) {
        if (stop.stop_requested()) {
          throw Error(ErrorKind::cancelled, "closed-set enumeration cancelled");
        }
        Membership current = std::move(queue.front());
        queue.pop_front();
        for (Element x = 0; x < n; ++x) {
          if (current[x]) {
            continue;
          }
          Membership next = current;
          next[x]         = true;
          close(next);
          if (seen.insert(next).second) {
            queue.push_back(std::move(next));
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    void check_cap(FiniteMonoid const& M, std::size_t cap) {
      if (M.order() > cap) {
        throw Error(ErrorKind::order_exceeds_cap,
                    "monoid order " + std::to_string(M.order())
                        + " exceeds cap " + std::to_string(cap),
                    {M.order(), cap});
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteMonoid
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid FiniteMonoid::build(Table table, Element identity,
                                   std::vector<std::string> labels) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorKind::index_out_of_range, "monoid must be non-empty");
    }
    for (Element a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw Error(ErrorKind::index_out_of_range,
                    "row " + std::to_string(a) + " has "
                        + std::to_string(table[a].size())
                        + " entries, expected " + std::to_string(n),
                    {a});
      }
      for (Element b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          throw Error(ErrorKind::index_out_of_range,
                      "entry (" + std::to_string(a) + ", " + std::to_string(b)
                          + ") = " + std::to_string(table[a][b])
                          + " is not below the order "
                          + std::to_string(n),
                      {a, b});
        }
      }
    }
    if (identity >= n) {
      throw Error(ErrorKind::index_out_of_range,
                  "identity " + std::to_string(identity)
                      + " is not below the order " + std::to_string(n),
                  {identity});
    }
    if (!labels.empty() && labels.size() != n) {
      throw Error(ErrorKind::index_out_of_range,
                  "expected " + std::to_string(n) + " labels, got "
                      + std::to_string(labels.size()));
    }
    for (Element a = 0; a < n; ++a) {
      if (table[identity][a] != a || table[a][identity] != a) {
        throw Error(ErrorKind::not_identity,
                    "identity law fails at element " + std::to_string(a),
                    {a});
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        auto const& row = table[table[a][b]];
        for (Element c = 0; c < n; ++c) {
          if (row[c] != table[a][table[b][c]]) {
            throw Error(ErrorKind::not_associative,
                        "(ab)c != a(bc) for a=" + std::to_string(a)
                            + ", b=" + std::to_string(b)
                            + ", c=" + std::to_string(c),
                        {a, b, c});
          }
        }
      }
    }
    FiniteMonoid M;
    M._table    = std::move(table);
    M._identity = identity;
    M._labels   = std::move(labels);
    return M;
  }

  std::string FiniteMonoid::label(Element a) const {
    if (!_labels.empty()) {
      return _labels[a];
    }
    return a == _identity ? "1" : "s" + std::to_string(a);
  }

  std::vector<Element> FiniteMonoid::idempotents() const {
    std::vector<Element> result;
    for (Element e = 0; e < order(); ++e) {
      if (is_idempotent(e)) {
        result.push_back(e);
      }
    }
    return result;
  }

  std::vector<Element> FiniteMonoid::right_ideal(Element a) const {
    Membership in(order(), false);
    for (Element s = 0; s < order(); ++s) {
      in[mul(a, s)] = true;
    }
    return to_members(in);
  }

  std::vector<Element> FiniteMonoid::left_ideal(Element a) const {
    Membership in(order(), false);
    for (Element s = 0; s < order(); ++s) {
      in[mul(s, a)] = true;
    }
    return to_members(in);
  }

  std::vector<Element> FiniteMonoid::two_sided_ideal(Element a) const {
    Membership in(order(), false);
    for (Element s = 0; s < order(); ++s) {
      Element sa = mul(s, a);
      for (Element t = 0; t < order(); ++t) {
        in[mul(sa, t)] = true;
      }
    }
    return to_members(in);
  }

  ////////////////////////////////////////////////////////////////////////
  // Submonoids
  ////////////////////////////////////////////////////////////////////////

  Submonoid Submonoid::of(FiniteMonoid const& M, std::vector<Element> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto x : members) {
      if (x >= M.order()) {
        throw Error(ErrorKind::index_out_of_range,
                    "submonoid member " + std::to_string(x) + " out of range",
                    {x});
      }
    }
    auto has = [&members](Element x) {
      return std::binary_search(members.begin(), members.end(), x);
    };
    if (!has(M.identity())) {
      throw Error(ErrorKind::not_a_submonoid, "identity missing",
                  {M.identity()});
    }
    for (auto a : members) {
      for (auto b : members) {
        if (!has(M.mul(a, b))) {
          throw Error(ErrorKind::not_a_submonoid,
                      "not closed: " + std::to_string(a) + " * "
                          + std::to_string(b),
                      {a, b});
        }
      }
    }
    Submonoid T;
    T._members = std::move(members);
    return T;
  }

  bool Submonoid::contains(Element x) const {
    return std::binary_search(_members.begin(), _members.end(), x);
  }

  Submonoid submonoid_closure(FiniteMonoid const&         M,
                              std::vector<Element> const& gens) {
    Membership in(M.order(), false);
    for (auto g : gens) {
      if (g >= M.order()) {
        throw Error(ErrorKind::index_out_of_range,
                    "generator " + std::to_string(g) + " out of range", {g});
      }
      in[g] = true;
    }
    close_under_mul(M, in);
    return Submonoid::of(M, to_members(in));
  }

  bool is_right_unitary(FiniteMonoid const& M, Submonoid const& T) {
    for (auto t : T.members()) {
      for (Element s = 0; s < M.order(); ++s) {
        if (T.contains(M.mul(s, t)) && !T.contains(s)) {
          return false;
        }
      }
    }
    return true;
  }

  Element right_collapser(FiniteMonoid const& M, Submonoid const& T, Element s,
                          Element t) {
    for (auto u : T.members()) {
      if (M.mul(s, u) == M.mul(t, u)) {
        return u;
      }
    }
    return M.order();
  }

  bool is_right_collapsible(FiniteMonoid const& M, Submonoid const& T) {
    auto const& mem = T.members();
    for (std::size_t i = 0; i < mem.size(); ++i) {
      for (std::size_t j = i + 1; j < mem.size(); ++j) {
        if (right_collapser(M, T, mem[i], mem[j]) == M.order()) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Submonoid> enumerate_submonoids(FiniteMonoid const& M,
                                              std::size_t         cap,
                                              std::stop_token     stop) {
    check_cap(M, cap);
    auto sets = closed_sets(
        M.order(), [&M](Membership& in) { close_under_mul(M, in); }, stop);
    std::vector<Submonoid> result;
    for (auto const& s : sets) {
      result.push_back(Submonoid::of(M, to_members(s)));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Submonoid> enumerate_cu(FiniteMonoid const& M, std::size_t cap,
                                      std::stop_token stop) {
    check_cap(M, cap);
    auto sets = closed_sets(
        M.order(), [&M](Membership& in) { close_right_unitary(M, in); }, stop);
    std::vector<Submonoid> result;
    for (auto const& s : sets) {
      auto T = Submonoid::of(M, to_members(s));
      if (is_right_collapsible(M, T)) {
        result.push_back(std::move(T));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Principal ideals
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(IdealSide side) noexcept {
    switch (side) {
      case IdealSide::left: return "left";
      case IdealSide::right: return "right";
      case IdealSide::two_sided: return "two-sided";
    }
    return "";
  }

  IdealPoset principal_ideal_poset(FiniteMonoid const& M, IdealSide side) {
    IdealPoset                        P{side, {}, {}, {}, {}, {}};
    std::vector<std::vector<Element>> generated(M.order());
    for (Element a = 0; a < M.order(); ++a) {
      switch (side) {
        case IdealSide::left: generated[a] = M.left_ideal(a); break;
        case IdealSide::right: generated[a] = M.right_ideal(a); break;
        case IdealSide::two_sided: generated[a] = M.two_sided_ideal(a); break;
      }
    }
    P.ideals = generated;
    std::sort(P.ideals.begin(), P.ideals.end(), [](auto const& x, auto const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    P.ideals.erase(std::unique(P.ideals.begin(), P.ideals.end()),
                   P.ideals.end());
    for (Element a = 0; a < M.order(); ++a) {
      P.node_of.push_back(static_cast<std::size_t>(
          std::find(P.ideals.begin(), P.ideals.end(), generated[a])
          - P.ideals.begin()));
    }
    std::size_t const k = P.ideals.size();
    std::vector<bool> has_below(k, false), has_above(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j
            && std::includes(P.ideals[j].begin(), P.ideals[j].end(),
                             P.ideals[i].begin(), P.ideals[i].end())) {
          P.strictly_below.emplace_back(i, j);
          has_below[j] = true;
          has_above[i] = true;
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (!has_below[i]) {
        P.minimal.push_back(i);
      }
      if (!has_above[i]) {
        P.maximal.push_back(i);
      }
    }
    return P;
  }

}  // namespace acta
