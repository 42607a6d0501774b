#include "acta/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "acta/error.hpp"

namespace acta::catalog {

  FiniteMonoid trivial() {
    return build_monoid({{0}}, 0, {"1"});
  }

  FiniteMonoid cyclic_group(std::size_t n) {
    Table                    t(n, std::vector<Element>(n));
    std::vector<std::string> labels;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
      labels.push_back(a == 0 ? "1" : "g" + (a == 1 ? "" : std::to_string(a)));
    }
    return build_monoid(std::move(t), 0, std::move(labels));
  }

  FiniteMonoid u1() {
    return build_monoid({{0, 1}, {1, 1}}, 0, {"1", "e"});
  }

  namespace {
    FiniteMonoid zero_with_identity(std::size_t k, bool right) {
      std::size_t const        n = k + 1;
      Table                    t(n, std::vector<Element>(n));
      std::vector<std::string> labels{"1"};
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (a == 0) {
            t[a][b] = b;
          } else if (b == 0) {
            t[a][b] = a;
          } else {
            t[a][b] = right ? b : a;
          }
        }
        if (a > 0) {
          labels.push_back(k <= 26 ? std::string(1, char('a' + a - 1))
                                   : "a" + std::to_string(a));
        }
      }
      return build_monoid(std::move(t), 0, std::move(labels));
    }
  }  // namespace

  FiniteMonoid right_zero_with_identity(std::size_t k) {
    return zero_with_identity(k, true);
  }

  FiniteMonoid left_zero_with_identity(std::size_t k) {
    return zero_with_identity(k, false);
  }

  FiniteMonoid full_transformation_monoid(std::size_t n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= n;
    }
    auto decode = [n](std::size_t code) {
      std::vector<std::size_t> f(n);
      for (std::size_t i = 0; i < n; ++i) {
        f[i] = code % n;
        code /= n;
      }
      return f;
    };
    auto encode = [n](std::vector<std::size_t> const& f) {
      std::size_t code = 0;
      for (std::size_t i = n; i-- > 0;) {
        code = code * n + f[i];
      }
      return code;
    };
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), std::size_t(0));
    Table t(total, std::vector<Element>(total));
    for (std::size_t a = 0; a < total; ++a) {
      auto fa = decode(a);
      for (std::size_t b = 0; b < total; ++b) {
        auto                     fb = decode(b);
        std::vector<std::size_t> fab(n);
        for (std::size_t i = 0; i < n; ++i) {
          fab[i] = fb[fa[i]];
        }
        t[a][b] = encode(fab);
      }
    }
    return build_monoid(std::move(t), encode(id));
  }

  FiniteMonoid relabel(FiniteMonoid const& M, std::vector<Element> const& perm) {
    std::size_t const n = M.order();
    Table             t(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        t[perm[a]][perm[b]] = perm[M.mul(a, b)];
      }
    }
    std::vector<std::string> labels;
    if (!M.labels().empty()) {
      labels.resize(n);
      for (Element a = 0; a < n; ++a) {
        labels[perm[a]] = M.labels()[a];
      }
    }
    return build_monoid(std::move(t), perm[M.identity()], std::move(labels));
  }

  Table canonical_table(FiniteMonoid const& M) {
    std::size_t const n = M.order();
    // others[i] is the element sent to i + 1
    std::vector<Element> others;
    for (Element a = 0; a < n; ++a) {
      if (a != M.identity()) {
        others.push_back(a);
      }
    }
    Table best;
    do {
      std::vector<Element> perm(n);
      perm[M.identity()] = 0;
      for (std::size_t i = 0; i < others.size(); ++i) {
        perm[others[i]] = i + 1;
      }
      Table t(n, std::vector<Element>(n));
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          t[perm[a]][perm[b]] = perm[M.mul(a, b)];
        }
      }
      if (best.empty() || t < best) {
        best = std::move(t);
      }
    } while (std::next_permutation(others.begin(), others.end()));
    return best;
  }

  std::vector<FiniteMonoid> monoids_of_order(std::size_t order) {
    if (order == 0 || order > 4) {
      throw Error(ErrorKind::order_exceeds_cap,
                  "monoid catalog covers orders 1 to 4 only", {order, 4});
    }
    std::size_t const n = order;
    Table             t(n, std::vector<Element>(n, 0));
    for (Element a = 0; a < n; ++a) {
      t[0][a] = a;
      t[a][0] = a;
    }
    std::vector<std::pair<Element, Element>> cells;
    for (Element a = 1; a < n; ++a) {
      for (Element b = 1; b < n; ++b) {
        cells.emplace_back(a, b);
      }
    }
    auto associative = [&t, n] {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          for (Element c = 0; c < n; ++c) {
            if (t[t[a][b]][c] != t[a][t[b][c]]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::set<Table> seen;
    std::size_t     combos = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      combos *= n;
    }
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      for (auto [a, b] : cells) {
        t[a][b] = c % n;
        c /= n;
      }
      if (associative()) {
        seen.insert(canonical_table(build_monoid(t, 0)));
      }
    }
    std::vector<FiniteMonoid> result;
    for (auto const& table : seen) {
      result.push_back(build_monoid(table, 0));
    }
    return result;
  }

  std::vector<FiniteMonoid> monoids_up_to(std::size_t max_order) {
    std::vector<FiniteMonoid> result;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto batch = monoids_of_order(n);
      result.insert(result.end(), batch.begin(), batch.end());
    }
    return result;
  }

}  // namespace acta::catalog
