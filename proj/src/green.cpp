#include "acta/green.hpp"

#include <algorithm>
#include <map>

namespace acta {

  namespace {

    template <typename F>
    Partition partition_by(FiniteMonoid const& M, F&& key) {
      std::map<std::vector<Element>, std::size_t> ids;
      std::vector<std::size_t>                    labels;
      for (Element a = 0; a < M.order(); ++a) {
        labels.push_back(ids.try_emplace(key(a), ids.size()).first->second);
      }
      return Partition::from_labels(labels);
    }

    // Partition of S induced by x -> xa, encoded canonically.
    std::vector<Element> kernel_of_right_mult(FiniteMonoid const& M,
                                              Element             a) {
      std::vector<Element> column(M.order());
      for (Element x = 0; x < M.order(); ++x) {
        column[x] = M.mul(x, a);
      }
      auto canon = Partition::from_labels(column).labels();
      return {canon.begin(), canon.end()};
    }

    bool contains(std::vector<Element> const& xs, Element x) {
      return std::find(xs.begin(), xs.end(), x) != xs.end();
    }

  }  // namespace

  GreenStructure green(FiniteMonoid const& M) {
    GreenStructure G;
    G.R = partition_by(M, [&M](Element a) { return M.right_ideal(a); });
    G.L = partition_by(M, [&M](Element a) { return M.left_ideal(a); });
    G.J = partition_by(M, [&M](Element a) { return M.two_sided_ideal(a); });
    G.H = G.R.meet(G.L);
    // a D b iff R_a meets L_b
    std::vector<std::size_t> d_label(M.order());
    for (Element a = 0; a < M.order(); ++a) {
      d_label[a] = a;
      for (Element b = 0; b < a; ++b) {
        bool related = false;
        for (Element c = 0; c < M.order() && !related; ++c) {
          related = G.R.same(a, c) && G.L.same(c, b);
        }
        if (related) {
          d_label[a] = d_label[b];
          break;
        }
      }
    }
    G.D      = Partition::from_labels(d_label);
    G.R_star = partition_by(
        M, [&M](Element a) { return kernel_of_right_mult(M, a); });
    return G;
  }

  bool r_star_related(FiniteMonoid const& M, Element a, Element b) {
    for (Element x = 0; x < M.order(); ++x) {
      for (Element y = 0; y < M.order(); ++y) {
        if ((M.mul(x, a) == M.mul(y, a)) != (M.mul(x, b) == M.mul(y, b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool h_class_is_group(FiniteMonoid const& M, GreenStructure const& G,
                        Element h) {
    auto members = G.H.members_of(h);
    for (auto x : members) {
      for (auto y : members) {
        if (G.H.same(M.mul(x, y), h)) {
          return true;
        }
      }
    }
    return false;
  }

  std::size_t group_bound_exponent(FiniteMonoid const&   M,
                                   GreenStructure const& G, Element a) {
    std::vector<Element> trajectory{a};
    while (true) {
      Element next = M.mul(trajectory.back(), a);
      if (contains(trajectory, next)) {
        break;
      }
      trajectory.push_back(next);
    }
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
      if (h_class_is_group(M, G, trajectory[k])) {
        return k + 1;
      }
    }
    return 0;
  }

  StructurePredicates structure_predicates(FiniteMonoid const& M) {
    return structure_predicates(M, green(M));
  }

  StructurePredicates structure_predicates(FiniteMonoid const&   M,
                                           GreenStructure const& G) {
    StructurePredicates P;
    std::size_t const   n   = M.order();
    Element const       one = M.identity();
    P.idempotents           = M.idempotents();
    P.group_of_units        = G.H.members_of(one);

    auto fail = [](Flag& flag, std::vector<Element> witness) {
      if (flag.value) {
        flag.value   = false;
        flag.witness = std::move(witness);
      }
    };

    for (Element a = 0; a < n; ++a) {
      if (!G.H.same(a, one)) {
        fail(P.is_group, {a});
      }
      for (Element b = 0; b < n; ++b) {
        if (M.mul(a, b) != M.mul(b, a)) {
          fail(P.is_commutative, {a, b});
        }
      }
      bool regular = false;
      for (Element x = 0; x < n && !regular; ++x) {
        regular = M.mul(M.mul(a, x), a) == a;
      }
      if (!regular) {
        fail(P.is_regular, {a});
      }
      if (group_bound_exponent(M, G, a) == 0) {
        fail(P.is_group_bound, {a});
      }
      for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
          if (M.mul(a, x) == M.mul(a, y)) {
            fail(P.is_left_cancellative, {a, x, y});
          }
          if (M.mul(x, a) == M.mul(y, a)) {
            fail(P.is_right_cancellative, {a, x, y});
          }
        }
      }
      if ((G.R.same(a, one) || G.L.same(a, one)) && !G.H.same(a, one)) {
        fail(P.is_local, {a});
      }
    }

    P.is_inverse = P.is_regular;
    for (auto e : P.idempotents) {
      for (auto f : P.idempotents) {
        if (M.mul(e, f) != M.mul(f, e)) {
          fail(P.is_inverse, {e, f});
        }
      }
    }
    return P;
  }

}  // namespace acta
