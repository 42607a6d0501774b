#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the table accessors.

#include <algorithm>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "acta/act.hpp"
#include "acta/catalog.hpp"
#include "acta/error.hpp"
#include "acta/monoid.hpp"
#include "acta/partition.hpp"

namespace oracle {

  using acta::Element;
  using acta::FiniteAct;
  using acta::FiniteMonoid;

  using Relation = std::vector<std::vector<bool>>;

  // Reflexive-symmetric-transitive closure by repeated scanning.
  inline Relation equivalence_closure(Relation r) {
    std::size_t const n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
      r[i][i] = true;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!r[i][j]) {
            continue;
          }
          if (!r[j][i]) {
            r[j][i] = changed = true;
          }
          for (std::size_t k = 0; k < n; ++k) {
            if (r[j][k] && !r[i][k]) {
              r[i][k] = changed = true;
            }
          }
        }
      }
    }
    return r;
  }

  inline Relation same_class(acta::Partition const& p) {
    Relation r(p.size(), std::vector<bool>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        r[i][j] = p.same(i, j);
      }
    }
    return r;
  }

  // A (x) B over index a * |B| + b.
  inline Relation tensor(FiniteAct const& A, FiniteAct const& B) {
    std::size_t const nb = B.size();
    Relation          r(A.size() * nb, std::vector<bool>(A.size() * nb));
    for (Element s = 0; s < A.monoid().order(); ++s) {
      for (Element a = 0; a < A.size(); ++a) {
        for (Element b = 0; b < nb; ++b) {
          r[A.act(s, a) * nb + b][a * nb + B.act(s, b)] = true;
        }
      }
    }
    return equivalence_closure(r);
  }

  // x ~ y iff x = s1 p1, s1 q1 = s2 p2, ..., sn qn = y with (pi, qi) a
  // given pair or its reverse.
  inline Relation congruence_by_chains(FiniteAct const&                              A,
                                       std::vector<std::pair<Element, Element>> const& pairs) {
    std::size_t const n = A.size();
    Relation          r(n, std::vector<bool>(n));
    for (Element start = 0; start < n; ++start) {
      std::deque<Element> queue{start};
      r[start][start] = true;
      while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        for (Element s = 0; s < A.monoid().order(); ++s) {
          for (auto [p, q] : pairs) {
            for (auto [u, v] : {std::pair{p, q}, std::pair{q, p}}) {
              if (A.act(s, u) == x && !r[start][A.act(s, v)]) {
                r[start][A.act(s, v)] = true;
                queue.push_back(A.act(s, v));
              }
            }
          }
        }
      }
    }
    return r;
  }

  inline bool divides_right(FiniteMonoid const& M, Element a, Element b) {
    for (Element x = 0; x < M.order(); ++x) {
      if (M.mul(a, x) == b) {
        return true;
      }
    }
    return false;
  }

  inline bool divides_left(FiniteMonoid const& M, Element a, Element b) {
    for (Element x = 0; x < M.order(); ++x) {
      if (M.mul(x, a) == b) {
        return true;
      }
    }
    return false;
  }

  inline bool divides_two_sided(FiniteMonoid const& M, Element a, Element b) {
    for (Element x = 0; x < M.order(); ++x) {
      for (Element y = 0; y < M.order(); ++y) {
        if (M.mul(M.mul(x, a), y) == b) {
          return true;
        }
      }
    }
    return false;
  }

  inline bool r_related(FiniteMonoid const& M, Element a, Element b) {
    return divides_right(M, a, b) && divides_right(M, b, a);
  }
  inline bool l_related(FiniteMonoid const& M, Element a, Element b) {
    return divides_left(M, a, b) && divides_left(M, b, a);
  }
  inline bool j_related(FiniteMonoid const& M, Element a, Element b) {
    return divides_two_sided(M, a, b) && divides_two_sided(M, b, a);
  }
  inline bool r_star(FiniteMonoid const& M, Element a, Element b) {
    for (Element x = 0; x < M.order(); ++x) {
      for (Element y = 0; y < M.order(); ++y) {
        if ((M.mul(x, a) == M.mul(y, a)) != (M.mul(x, b) == M.mul(y, b))) {
          return false;
        }
      }
    }
    return true;
  }

  // All set partitions of {0..n-1} as class labels (restricted growth).
  inline std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              labels(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t classes) -> void {
      if (i == n) {
        out.push_back(labels);
        return;
      }
      for (std::size_t c = 0; c <= classes && c < n; ++c) {
        labels[i] = c;
        self(self, i + 1, std::max(classes, c + 1));
      }
    };
    rec(rec, 0, 0);
    return out;
  }

  inline bool is_left_congruence(FiniteMonoid const& M, std::vector<std::size_t> const& cls) {
    for (Element s = 0; s < M.order(); ++s) {
      for (Element a = 0; a < M.order(); ++a) {
        for (Element b = 0; b < M.order(); ++b) {
          if (cls[a] == cls[b] && cls[M.mul(s, a)] != cls[M.mul(s, b)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // criterion: u ~ v iff us = vs for some s ~ 1.
  inline bool sf_criterion(FiniteMonoid const& M, std::vector<std::size_t> const& cls) {
    for (Element u = 0; u < M.order(); ++u) {
      for (Element v = 0; v < M.order(); ++v) {
        bool any = false;
        for (Element s = 0; s < M.order(); ++s) {
          any = any || (cls[s] == cls[M.identity()] && M.mul(u, s) == M.mul(v, s));
        }
        if (any != (cls[u] == cls[v])) {
          return false;
        }
      }
    }
    return true;
  }

  // Random act over M of the given side: rejection sampling over tables.
  inline std::optional<FiniteAct> random_act(acta::MonoidPtr const& M, acta::Side side,
                                             std::size_t size, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (int attempt = 0; attempt < 2000; ++attempt) {
      acta::Table action(M->order(), std::vector<Element>(size));
      for (Element s = 0; s < M->order(); ++s) {
        for (Element a = 0; a < size; ++a) {
          action[s][a] = s == M->identity() ? a : pick(rng);
        }
      }
      try {
        return FiniteAct::build(M, side, std::move(action));
      } catch (acta::Error const&) {
      }
    }
    return std::nullopt;
  }

}  // namespace oracle
