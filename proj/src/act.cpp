#include "acta/act.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "acta/error.hpp"

namespace acta {

  namespace {

    // First axiom violation of an action table, or nullopt.
    std::optional<Error> act_violation(FiniteMonoid const& M, Side side,
                                       Table const& action, std::size_t size) {
      for (Element a = 0; a < size; ++a) {
        if (action[M.identity()][a] != a) {
          return Error(ErrorKind::identity_act_violation,
                       "identity moves element " + std::to_string(a), {a});
        }
      }
      for (Element s = 0; s < M.order(); ++s) {
        for (Element t = 0; t < M.order(); ++t) {
          auto const& st = action[M.mul(s, t)];
          for (Element a = 0; a < size; ++a) {
            Element rhs = side == Side::left ? action[s][action[t][a]]
                                             : action[t][action[s][a]];
            if (st[a] != rhs) {
              return Error(ErrorKind::associativity_act_violation,
                           "action is not associative at s="
                               + std::to_string(s) + ", t=" + std::to_string(t)
                               + ", a=" + std::to_string(a),
                           {s, t, a});
            }
          }
        }
      }
      return std::nullopt;
    }

    std::vector<Element> orbit(FiniteAct const& A, Element a) {
      std::vector<Element> out;
      std::vector<bool>    in(A.size(), false);
      for (Element s = 0; s < A.monoid().order(); ++s) {
        in[A.act(s, a)] = true;
      }
      for (Element x = 0; x < A.size(); ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    void require_side(FiniteAct const& A, Side side, char const* what) {
      if (A.side() != side) {
        throw Error(ErrorKind::side_mismatch,
                    std::string(what) + " requires a " + to_string(side)
                        + " act");
      }
    }

  }  // namespace

  char const* to_string(Side side) noexcept {
    return side == Side::left ? "left" : "right";
  }

  FiniteAct FiniteAct::build(MonoidPtr M, Side side, Table action,
                             std::vector<std::string> labels) {
    if (action.size() != M->order()) {
      throw Error(ErrorKind::index_out_of_range,
                  "action table has " + std::to_string(action.size())
                      + " rows, expected " + std::to_string(M->order()));
    }
    std::size_t const size = action.front().size();
    if (size == 0) {
      throw Error(ErrorKind::index_out_of_range, "act must be non-empty");
    }
    for (Element s = 0; s < action.size(); ++s) {
      if (action[s].size() != size) {
        throw Error(ErrorKind::index_out_of_range,
                    "action row " + std::to_string(s) + " has wrong length",
                    {s});
      }
      for (Element a = 0; a < size; ++a) {
        if (action[s][a] >= size) {
          throw Error(ErrorKind::index_out_of_range,
                      "action entry (" + std::to_string(s) + ", "
                          + std::to_string(a) + ") out of range",
                      {s, a});
        }
      }
    }
    if (!labels.empty() && labels.size() != size) {
      throw Error(ErrorKind::index_out_of_range,
                  "expected " + std::to_string(size) + " act labels");
    }
    if (auto err = act_violation(*M, side, action, size)) {
      throw *err;
    }
    FiniteAct A;
    A._monoid = std::move(M);
    A._side   = side;
    A._size   = size;
    A._action = std::move(action);
    A._labels = std::move(labels);
    return A;
  }

  std::string FiniteAct::label(Element a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  FiniteAct regular_act(MonoidPtr M, Side side) {
    std::size_t const n = M->order();
    Table             action(n, std::vector<Element>(n));
    for (Element s = 0; s < n; ++s) {
      for (Element a = 0; a < n; ++a) {
        action[s][a] = side == Side::left ? M->mul(s, a) : M->mul(a, s);
      }
    }
    std::vector<std::string> labels;
    for (Element a = 0; a < n; ++a) {
      labels.push_back(M->label(a));
    }
    return FiniteAct::build(std::move(M), side, std::move(action),
                            std::move(labels));
  }

  FiniteAct trivial_act(MonoidPtr M, Side side) {
    std::size_t const n = M->order();
    return FiniteAct::build(std::move(M), side, Table(n, {0}), {"theta"});
  }

  FiniteAct coproduct(FiniteAct const& A, FiniteAct const& B) {
    if (!A.same_monoid(B)) {
      throw Error(ErrorKind::monoid_mismatch, "coproduct of acts over different monoids");
    }
    if (A.side() != B.side()) {
      throw Error(ErrorKind::side_mismatch, "coproduct of left and right acts");
    }
    Table action = A.action();
    for (Element s = 0; s < action.size(); ++s) {
      for (auto b : B.action()[s]) {
        action[s].push_back(b + A.size());
      }
    }
    std::vector<std::string> labels;
    if (!A.labels().empty() || !B.labels().empty()) {
      for (Element a = 0; a < A.size(); ++a) {
        labels.push_back(A.label(a) + ".0");
      }
      for (Element b = 0; b < B.size(); ++b) {
        labels.push_back(B.label(b) + ".1");
      }
    }
    return FiniteAct::build(A.monoid_ptr(), A.side(), std::move(action),
                            std::move(labels));
  }

  Subact subact(FiniteAct const& A, std::vector<Element> const& gens) {
    std::vector<bool> in(A.size(), false);
    for (auto g : gens) {
      if (g >= A.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "subact generator out of range", {g});
      }
      for (Element s = 0; s < A.monoid().order(); ++s) {
        in[A.act(s, g)] = true;
      }
    }
    std::vector<Element>     embedding;
    std::vector<std::size_t> index(A.size(), A.size());
    for (Element a = 0; a < A.size(); ++a) {
      if (in[a]) {
        index[a] = embedding.size();
        embedding.push_back(a);
      }
    }
    Table action(A.monoid().order(), std::vector<Element>(embedding.size()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < embedding.size(); ++i) {
      for (Element s = 0; s < A.monoid().order(); ++s) {
        action[s][i] = index[A.act(s, embedding[i])];
      }
      if (!A.labels().empty()) {
        labels.push_back(A.label(embedding[i]));
      }
    }
    return {FiniteAct::build(A.monoid_ptr(), A.side(), std::move(action),
                             std::move(labels)),
            std::move(embedding)};
  }

  Subact principal_left_ideal(MonoidPtr M, Element x) {
    return subact(regular_act(std::move(M), Side::left), {x});
  }

  Partition connected_components(FiniteAct const& A) {
    UnionFind uf(A.size());
    for (Element s = 0; s < A.monoid().order(); ++s) {
      for (Element a = 0; a < A.size(); ++a) {
        uf.unite(a, A.act(s, a));
      }
    }
    return to_partition(uf);
  }

  bool is_congruence(FiniteAct const& A, Partition const& P) {
    if (P.size() != A.size()) {
      return false;
    }
    auto classes = P.classes();
    for (auto const& cls : classes) {
      for (std::size_t i = 1; i < cls.size(); ++i) {
        for (Element s = 0; s < A.monoid().order(); ++s) {
          if (!P.same(A.act(s, cls[0]), A.act(s, cls[i]))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ActCongruence
  congruence_closure(FiniteAct const&                                A,
                     std::vector<std::pair<Element, Element>> const& pairs) {
    UnionFind uf(A.size());
    for (auto [x, y] : pairs) {
      if (x >= A.size() || y >= A.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "congruence pair out of range", {x, y});
      }
      for (Element s = 0; s < A.monoid().order(); ++s) {
        uf.unite(A.act(s, x), A.act(s, y));
      }
    }
    return {to_partition(uf)};
  }

  bool is_morphism(FiniteAct const& source, FiniteAct const& target,
                   std::vector<Element> const& map) {
    if (map.size() != source.size() || !source.same_monoid(target)
        || source.side() != target.side()) {
      return false;
    }
    for (auto b : map) {
      if (b >= target.size()) {
        return false;
      }
    }
    for (Element s = 0; s < source.monoid().order(); ++s) {
      for (Element a = 0; a < source.size(); ++a) {
        if (map[source.act(s, a)] != target.act(s, map[a])) {
          return false;
        }
      }
    }
    return true;
  }

  ActMorphism ActMorphism::of(FiniteAct const& source, FiniteAct const& target,
                              std::vector<Element> map) {
    if (!is_morphism(source, target, map)) {
      throw Error(ErrorKind::not_a_morphism,
                  "map does not commute with the action");
    }
    return ActMorphism{std::move(map)};
  }

  ActMorphism compose(ActMorphism const& g, ActMorphism const& f) {
    ActMorphism h;
    h.map.reserve(f.map.size());
    for (auto x : f.map) {
      h.map.push_back(g.map[x]);
    }
    return h;
  }

  Quotient quotient(FiniteAct const& A, ActCongruence const& theta) {
    if (!is_congruence(A, theta.classes)) {
      throw Error(ErrorKind::consistency_failure,
                  "partition is not a congruence of the act");
    }
    auto const& P = theta.classes;
    auto        classes = P.classes();
    Table       action(A.monoid().order(),
                       std::vector<Element>(P.num_classes()));
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (Element s = 0; s < A.monoid().order(); ++s) {
        action[s][c] = P.class_of(A.act(s, classes[c].front()));
      }
      if (!A.labels().empty()) {
        labels.push_back("[" + A.label(classes[c].front()) + "]");
      }
    }
    auto act = FiniteAct::build(A.monoid_ptr(), A.side(), std::move(action),
                                std::move(labels));
    ActMorphism projection{P.labels()};
    return {std::move(act), std::move(projection)};
  }

  std::optional<ActMorphism> factor_through(ActCongruence const& theta,
                                            ActMorphism const&   f) {
    auto const&          P = theta.classes;
    std::vector<Element> map(P.num_classes());
    std::vector<bool>    set(P.num_classes(), false);
    for (Element a = 0; a < P.size(); ++a) {
      auto c = P.class_of(a);
      if (set[c] && map[c] != f(a)) {
        return std::nullopt;
      }
      map[c] = f(a);
      set[c] = true;
    }
    return ActMorphism{std::move(map)};
  }

  CyclicIso cyclic_iso(FiniteAct const& A, Element a, FiniteAct const& B,
                       Element b) {
    if (!A.same_monoid(B)) {
      throw Error(ErrorKind::monoid_mismatch, "acts over different monoids");
    }
    if (A.side() != B.side()) {
      throw Error(ErrorKind::side_mismatch, "acts on different sides");
    }
    std::size_t const n = A.monoid().order();
    CyclicIso         result;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if ((A.act(x, a) == A.act(y, a)) != (B.act(x, b) == B.act(y, b))) {
          return result;
        }
      }
    }
    result.isomorphic = true;
    for (Element s = 0; s < n; ++s) {
      result.map.emplace_back(A.act(s, a), B.act(s, b));
    }
    std::sort(result.map.begin(), result.map.end());
    result.map.erase(std::unique(result.map.begin(), result.map.end()),
                     result.map.end());
    return result;
  }

  bool right_e_cancellable(FiniteAct const& A, Element a, Element e) {
    auto const& M = A.monoid();
    if (e >= M.order() || !M.is_idempotent(e)) {
      throw Error(ErrorKind::not_idempotent,
                  "element " + std::to_string(e) + " is not idempotent", {e});
    }
    if (A.act(e, a) != a) {
      return false;
    }
    for (Element x = 0; x < M.order(); ++x) {
      for (Element y = x + 1; y < M.order(); ++y) {
        if (A.act(x, a) == A.act(y, a) && M.mul(x, e) != M.mul(y, e)) {
          return false;
        }
      }
    }
    return true;
  }

  FreeProjReport classify_free_projective(FiniteAct const& A) {
    require_side(A, Side::left, "classify_free_projective");
    auto const&    M = A.monoid();
    FreeProjReport report;
    report.is_free       = true;
    report.is_projective = true;

    std::vector<Element> candidates{M.identity()};
    for (auto e : M.idempotents()) {
      if (e != M.identity()) {
        candidates.push_back(e);
      }
    }

    for (auto& cls : connected_components(A).classes()) {
      FreeProjReport::Component comp;
      comp.elements = cls;
      // idempotents in order of preference: identity first
      for (auto e : candidates) {
        for (auto a : cls) {
          if (orbit(A, a).size() != cls.size()) {
            continue;
          }
          if (!comp.generator) {
            comp.generator = a;
          }
          if (right_e_cancellable(A, a, e)) {
            comp.generator  = a;
            comp.idempotent = e;
            break;
          }
        }
        if (comp.idempotent) {
          break;
        }
      }
      if (!comp.idempotent) {
        report.is_projective = false;
        report.is_free       = false;
      } else if (*comp.idempotent != M.identity()) {
        report.is_free = false;
      } else {
        ++report.free_rank;
      }
      report.components.push_back(std::move(comp));
    }
    return report;
  }

  std::vector<ActCongruence> left_congruences(FiniteMonoid const& M,
                                              std::size_t         cap) {
    if (M.order() > cap) {
      throw Error(ErrorKind::order_exceeds_cap,
                  "monoid order " + std::to_string(M.order())
                      + " exceeds congruence cap " + std::to_string(cap),
                  {M.order(), cap});
    }
    std::size_t const          n = M.order();
    std::vector<std::size_t>   label(n, 0);
    std::vector<ActCongruence> result;

    // compatible wherever the prefix 0..k decides both images
    auto consistent = [&](std::size_t k) {
      for (Element i = 0; i <= k; ++i) {
        for (Element j = i + 1; j <= k; ++j) {
          if (label[i] != label[j]) {
            continue;
          }
          for (Element s = 0; s < n; ++s) {
            Element si = M.mul(s, i), sj = M.mul(s, j);
            if (si <= k && sj <= k && label[si] != label[sj]) {
              return false;
            }
          }
        }
      }
      return true;
    };

    std::function<void(std::size_t, std::size_t)> extend
        = [&](std::size_t k, std::size_t used) {
            if (k == n) {
              result.push_back({Partition::from_labels(label)});
              return;
            }
            for (std::size_t c = 0; c <= used && c < n; ++c) {
              label[k] = c;
              if (consistent(k)) {
                extend(k + 1, std::max(used, c + 1));
              }
            }
          };
    extend(0, 0);
    return result;
  }

  std::vector<FiniteAct> enumerate_acts(MonoidPtr M, Side side,
                                        std::size_t size) {
    std::size_t const    n = M->order();
    std::vector<Element> others;
    for (Element s = 0; s < n; ++s) {
      if (s != M->identity()) {
        others.push_back(s);
      }
    }
    std::size_t maps = 1;
    for (std::size_t i = 0; i < size; ++i) {
      maps *= size;
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < others.size(); ++i) {
      total *= maps;
    }
    Table action(n, std::vector<Element>(size));
    for (Element a = 0; a < size; ++a) {
      action[M->identity()][a] = a;
    }
    std::vector<FiniteAct> result;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto s : others) {
        std::size_t row = c % maps;
        c /= maps;
        for (Element a = 0; a < size; ++a) {
          action[s][a] = row % size;
          row /= size;
        }
      }
      if (!act_violation(*M, side, action, size)) {
        result.push_back(FiniteAct::build(M, side, action));
      }
    }
    return result;
  }

}  // namespace acta
