#include "acta/classify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <set>

#include "acta/error.hpp"

namespace acta {

  namespace {

    using Tuple = std::vector<Element>;

    Tuple act_right(FiniteMonoid const& M, Tuple p, Element w) {
      for (auto& x : p) {
        x = M.mul(x, w);
      }
      return p;
    }

    std::vector<Tuple> annihilator_generators(FiniteMonoid const&       M,
                                              std::vector<Tuple> const& members) {
      std::vector<std::set<Tuple>> closure;
      closure.reserve(members.size());
      for (auto const& p : members) {
        std::set<Tuple> c;
        for (Element w = 0; w < M.order(); ++w) {
          c.insert(act_right(M, p, w));
        }
        closure.push_back(std::move(c));
      }
      auto generates = [&](std::size_t i, std::size_t j) {
        return closure[i].contains(members[j]);
      };
      std::vector<Tuple>       gens;
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < members.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < members.size() && maximal; ++j) {
          maximal = !generates(j, i) || generates(i, j);
        }
        bool represented = std::any_of(
            chosen.begin(), chosen.end(),
            [&](std::size_t k) { return generates(k, i) && generates(i, k); });
        if (maximal && !represented) {
          chosen.push_back(i);
          gens.push_back(members[i]);
        }
      }
      return gens;
    }

    std::string join_ideal(FiniteMonoid const& M, std::vector<Element> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + M.label(xs[i]);
      }
      return out + "}";
    }

    std::size_t skeleton_count(std::size_t n, std::size_t m_max,
                               std::size_t budget) {
      std::size_t count = 0, power = 1;
      for (std::size_t m = 1; m <= m_max; ++m) {
        if (n * n != 0 && power > budget / (n * n)) {
          return budget + 1;
        }
        power *= n * n;
        count += power;
      }
      return count;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Annihilators and CFRS
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<Element>>
  generated_by(FiniteMonoid const& M, std::vector<std::vector<Element>> const& gens) {
    std::set<Tuple> out;
    for (auto const& g : gens) {
      for (Element w = 0; w < M.order(); ++w) {
        out.insert(act_right(M, g, w));
      }
    }
    return {out.begin(), out.end()};
  }

  AnnihilatorReport r_annihilator(FiniteMonoid const& M, Element s, Element t) {
    if (s >= M.order() || t >= M.order()) {
      throw Error(ErrorKind::index_out_of_range, "annihilator index", {s, t});
    }
    AnnihilatorReport out{AnnihilatorKind::small_r, s, t, {}, {}};
    for (Element u = 0; u < M.order(); ++u) {
      if (M.mul(s, u) == M.mul(t, u)) {
        out.members.push_back({u});
      }
    }
    out.generators = annihilator_generators(M, out.members);
    return out;
  }

  AnnihilatorReport big_r_annihilator(FiniteMonoid const& M, Element s,
                                      Element t) {
    if (s >= M.order() || t >= M.order()) {
      throw Error(ErrorKind::index_out_of_range, "annihilator index", {s, t});
    }
    AnnihilatorReport out{AnnihilatorKind::big_r, s, t, {}, {}};
    for (Element u = 0; u < M.order(); ++u) {
      for (Element v = 0; v < M.order(); ++v) {
        if (M.mul(s, u) == M.mul(t, v)) {
          out.members.push_back({u, v});
        }
      }
    }
    out.generators = annihilator_generators(M, out.members);
    return out;
  }

  std::vector<std::size_t> cfrs_profile(FiniteMonoid const& M) {
    std::size_t const        n = M.order();
    std::vector<std::size_t> out(n, 0);
    for (Element s = 0; s < n; ++s) {
      std::vector<std::size_t> count(n, 0);
      for (Element x = 0; x < n; ++x) {
        out[s] = std::max(out[s], ++count[M.mul(s, x)]);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Condition (A), left perfectness
  ////////////////////////////////////////////////////////////////////////

  ConditionAReport condition_a_check(FiniteMonoid const& M, std::size_t seq_len) {
    std::size_t const n      = M.order();
    std::size_t const budget = std::size_t(1) << 16;
    ConditionAReport  out;
    out.holds = true;
    out.reason =
        "finite monoid: a strictly ascending chain of cyclic subacts of any "
        "act has length at most |S|";
    out.requested_length = seq_len;
    std::size_t len      = std::max<std::size_t>(seq_len, 1);
    auto        fits     = [&](std::size_t L) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < L; ++i) {
        total *= n;
        if (total > budget) {
          return false;
        }
      }
      return true;
    };
    while (len > 1 && !fits(len)) {
      --len;
    }
    out.length = len;

    auto const           L = green(M).L;
    std::vector<Element> seq(len, 0);
    while (true) {
      ++out.sequences;
      if (out.window_clean) {
        for (std::size_t i = 0; i < len; ++i) {
          Element product = M.identity();
          bool    hit     = false;
          for (std::size_t j = i + 1; j <= i + n * len && !hit; ++j) {
            product = M.mul(product, seq[j % len]);
            hit     = L.same(M.mul(seq[i], product), product);
          }
          if (!hit) {
            out.window_clean = false;
            out.inconclusive = seq;
            break;
          }
        }
      }
      std::size_t pos = len;
      while (pos > 0) {
        --pos;
        if (++seq[pos] < n) {
          break;
        }
        seq[pos] = 0;
        if (pos == 0) {
          return out;
        }
      }
    }
  }

  PerfectReport left_perfect(FiniteMonoid const& M, std::size_t seq_len) {
    PerfectReport out;
    out.condition_a      = condition_a_check(M, seq_len);
    auto const right     = principal_ideal_poset(M, IdealSide::right);
    auto const left      = principal_ideal_poset(M, IdealSide::left);
    out.descending_chain = right.descending_chain_condition;
    out.value            = out.condition_a.holds && out.descending_chain;
    out.reason = "condition (A) and (M_R) hold; both follow from finiteness";

    auto fail = [](std::string const& what, std::vector<std::size_t> w) {
      throw Error(ErrorKind::consistency_failure,
                  "left perfect monoid violates: " + what, std::move(w));
    };

    out.group_bound = structure_predicates(M).is_group_bound.value;
    if (!out.group_bound) {
      fail("group bound", {});
    }

    auto minimal_check = [&](IdealPoset const& own, IdealPoset const& other,
                             std::vector<std::vector<Element>>& ideals,
                             std::vector<Element>&              idempotents,
                             char const*                        name) {
      for (auto node : own.minimal) {
        auto const& ideal = own.ideals[node];
        ideals.push_back(ideal);
        std::optional<Element> gen;
        for (auto b : ideal) {
          if (own.node_of[b] != node) {
            continue;
          }
          auto dual = other.node_of[b];
          if (std::find(other.minimal.begin(), other.minimal.end(), dual)
              == other.minimal.end()) {
            fail(std::string("dual of a minimal ") + name + " ideal is minimal",
                 {b});
          }
          if (!gen && M.is_idempotent(b)) {
            gen = b;
          }
        }
        if (!gen) {
          fail(std::string("minimal ") + name + " ideal generated by an "
                   "idempotent",
               {ideal.front()});
        }
        idempotents.push_back(*gen);
      }
    };
    minimal_check(left, right, out.minimal_left_ideals, out.left_idempotents,
                  "left");
    minimal_check(right, left, out.minimal_right_ideals, out.right_idempotents,
                  "right");

    // S b1 strictly inside S b0 and isomorphic to it is impossible
    for (auto [lo, hi] : left.strictly_below) {
      Element b0 = left.ideals[hi].front();
      for (auto x : left.ideals[hi]) {
        if (left.node_of[x] == hi) {
          b0 = x;
          break;
        }
      }
      for (auto c : left.ideals[lo]) {
        if (left.node_of[c] == lo && r_star_related(M, b0, c)) {
          out.isomorphic_ideals_equal = false;
          fail("isomorphic nested principal left ideals coincide", {b0, c});
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // e-good factorisations
  ////////////////////////////////////////////////////////////////////////

  std::optional<Element> e_good_factor(FiniteMonoid const& M, Element a,
                                       Element x, Element e) {
    std::size_t const n = M.order();
    if (a >= n || x >= n || e >= n) {
      throw Error(ErrorKind::index_out_of_range, "e-good arguments", {a, x, e});
    }
    if (!M.is_idempotent(e)) {
      throw Error(ErrorKind::not_idempotent, "e must be idempotent", {e});
    }
    if (e == M.identity()) {
      throw Error(ErrorKind::identity_idempotent, "e must differ from 1", {e});
    }
    auto const        Le = M.left_ideal(e);
    std::vector<bool> forbidden(n, false);
    for (Element w = 0; w < n; ++w) {
      if (M.mul(x, w) != e || M.left_ideal(w) != Le) {
        continue;
      }
      for (Element z = 0; z < n; ++z) {
        forbidden[M.mul(w, z)] = true;
      }
    }
    for (Element y = 0; y < n; ++y) {
      if (M.mul(x, y) == a && !forbidden[y]) {
        return y;
      }
    }
    return std::nullopt;
  }

  bool e_good(FiniteMonoid const& M, Element a, Element x, Element e) {
    return e_good_factor(M, a, x, e).has_value();
  }

  std::vector<StarWitness> star_witness(FiniteMonoid const& M) {
    std::size_t const        n = M.order();
    std::vector<StarWitness> out;
    for (auto e : M.idempotents()) {
      if (e == M.identity()) {
        continue;
      }
      // covers[x][a]
      std::vector<std::vector<bool>> covers(n, std::vector<bool>(n));
      for (Element x = 0; x < n; ++x) {
        for (Element a = 0; a < n; ++a) {
          covers[x][a] = e_good(M, a, x, e);
        }
      }
      for (Element a = 0; a < n; ++a) {
        bool any = false;
        for (Element x = 0; x < n && !any; ++x) {
          any = covers[x][a];
        }
        if (!any) {
          throw Error(ErrorKind::no_cover,
                      "no e-good factorisation of " + M.label(a), {e, a});
        }
      }
      std::vector<bool>    covered(n, false);
      std::vector<Element> cover;
      std::size_t          left = n;
      while (left > 0) {
        Element     best = n;
        std::size_t gain = 0;
        for (Element x = 0; x < n; ++x) {
          std::size_t g = 0;
          for (Element a = 0; a < n; ++a) {
            g += covers[x][a] && !covered[a];
          }
          if (g > gain) {
            gain = g;
            best = x;
          }
        }
        cover.push_back(best);
        for (Element a = 0; a < n; ++a) {
          if (covers[best][a] && !covered[a]) {
            covered[a] = true;
            --left;
          }
        }
      }
      std::sort(cover.begin(), cover.end());
      auto covers_all = [&](std::vector<Element> const& f) {
        for (Element a = 0; a < n; ++a) {
          if (std::none_of(f.begin(), f.end(),
                           [&](Element x) { return covers[x][a]; })) {
            return false;
          }
        }
        return true;
      };
      for (std::size_t i = 0; i < cover.size();) {
        auto trial = cover;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (covers_all(trial)) {
          cover = std::move(trial);
        } else {
          ++i;
        }
      }
      StarWitness w{e, cover, std::vector<Element>(n)};
      for (Element a = 0; a < n; ++a) {
        w.through[a] = *std::find_if(cover.begin(), cover.end(),
                                     [&](Element x) { return covers[x][a]; });
      }
      out.push_back(std::move(w));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdict tables
  ////////////////////////////////////////////////////////////////////////

  namespace {

    BoundedExploration explore_skeletons(FiniteMonoid const& M,
                                         std::size_t         m_max) {
      std::size_t const  n      = M.order();
      std::size_t const  budget = std::size_t(1) << 18;
      BoundedExploration out;
      out.bound = m_max;
      if (n > 64 || skeleton_count(n, m_max, budget) > budget) {
        out.status = "skipped: budget";
        return out;
      }
      out.performed = true;
      out.status    = "bounded exploration only";
      using Rows    = std::vector<std::uint64_t>;
      // step[s][t][x] = {y : x s = y t}
      std::vector<std::vector<Rows>> step(n, std::vector<Rows>(n, Rows(n, 0)));
      for (Element s = 0; s < n; ++s) {
        for (Element t = 0; t < n; ++t) {
          for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
              if (M.mul(x, s) == M.mul(y, t)) {
                step[s][t][x] |= std::uint64_t(1) << y;
              }
            }
          }
        }
      }
      auto dfs = [&](auto&& self, Rows const& reach, std::size_t depth) -> void {
        for (Element s = 0; s < n; ++s) {
          for (Element t = 0; t < n; ++t) {
            Rows next(n, 0);
            for (Element a = 0; a < n; ++a) {
              for (Element y = 0; y < n; ++y) {
                if (reach[a] >> y & 1) {
                  next[a] |= step[s][t][y];
                }
              }
            }
            ++out.skeletons;
            for (auto row : next) {
              out.realised += static_cast<std::size_t>(std::popcount(row));
            }
            if (depth + 1 < m_max) {
              self(self, next, depth + 1);
            }
          }
        }
      };
      Rows start(n, 0);
      for (Element a = 0; a < n; ++a) {
        start[a] = std::uint64_t(1) << a;
      }
      if (m_max > 0) {
        dfs(dfs, start, 0);
      }
      return out;
    }

  }  // namespace

  AxiomatisabilityReport axiomatisability_report(FiniteMonoid const&  M,
                                                 PerfectReport const& perfect,
                                                 std::size_t          m_max) {
    AxiomatisabilityReport out;
    out.strongly_flat = {true,
                         "every r(s,t) and R(s,t) is empty or finitely "
                         "generated; generators listed under annihilators"};
    out.projective = {out.strongly_flat.value && perfect.value,
                      perfect.value ? "SF axiomatisable and S left perfect"
                                    : "S is not left perfect"};
    std::string star_reason = "condition (*) holds with the listed sets f";
    bool        star_ok     = true;
    try {
      out.star = star_witness(M);
    } catch (Error const& err) {
      if (err.kind() != ErrorKind::no_cover) {
        throw;
      }
      star_ok     = false;
      star_reason = err.what();
    }
    out.free                 = {out.projective.value && star_ok, star_reason};
    out.weakly_flat_and_flat = explore_skeletons(M, m_max);
    return out;
  }

  AxiomatisabilityReport axiomatisability_report(FiniteMonoid const& M,
                                                 std::size_t         m_max) {
    return axiomatisability_report(M, left_perfect(M), m_max);
  }

  char const* to_string(Completeness c) noexcept {
    switch (c) {
      case Completeness::complete: return "complete";
      case Completeness::not_complete: return "not complete";
      case Completeness::not_covered: return "not covered";
    }
    return "";
  }

  CompletenessReport completeness_report(StructurePredicates const& P) {
    CompletenessReport out;
    bool const         group = P.is_group.value;
    if (!P.is_commutative.value) {
      out.strongly_flat = {Completeness::not_covered,
                           "criterion assumes a commutative monoid"};
    } else if (group) {
      out.strongly_flat = {Completeness::complete, "S is an abelian group"};
    } else {
      out.strongly_flat = {Completeness::not_complete,
                           "commutative but not a group"};
    }
    out.projective = group ? CompletenessVerdict{Completeness::complete,
                                                 "S is a group"}
                           : CompletenessVerdict{Completeness::not_complete,
                                                 "S is not a group"};
    out.free = {Completeness::complete,
                "free acts are axiomatisable, complete and categorical"};
    return out;
  }

  CompletenessReport completeness_report(FiniteMonoid const& M) {
    return completeness_report(structure_predicates(M));
  }

  OmegaReport omega_report(FiniteMonoid const& M, std::size_t cap,
                           std::stop_token stop) {
    OmegaReport out;
    out.cu               = enumerate_cu(M, cap, stop);
    out.idempotent_count = M.idempotents().size();
    std::size_t const n  = M.order();
    auto const        S  = regular_act(share(M), Side::left);
    auto fail = [](std::string const& what, std::vector<std::size_t> w) {
      throw Error(ErrorKind::injection_failure, what, std::move(w));
    };
    for (auto const& U : out.cu) {
      auto rho = rho_of_submonoid(M, U);
      auto one = rho.classes.members_of(M.identity());
      if (one != U.members()) {
        fail("class of 1 under rho_U differs from U", U.members());
      }
      auto Q  = quotient(S, rho);
      auto fp = classify_free_projective(Q.act);
      if (!fp.is_projective || fp.components.size() != 1) {
        fail("S/rho_U is not cyclic projective", U.members());
      }
      Element a   = *fp.components[0].generator;
      Element e   = *fp.components[0].idempotent;
      Element cls = Q.projection(M.identity());
      Element s   = n;
      for (Element x = 0; x < n && s == n; ++x) {
        if (Q.act.act(x, a) == cls) {
          s = x;
        }
      }
      if (s == n) {
        fail("generator does not reach the class of 1", U.members());
      }
      Element c = M.mul(s, e);
      Element t = n;
      for (Element x = 0; x < n && t == n; ++x) {
        if (M.mul(x, c) == e) {
          t = x;
        }
      }
      if (t == n) {
        fail("image of 1 does not generate Se", U.members());
      }
      Element g = M.mul(c, t);
      if (!M.is_idempotent(g)) {
        fail("assigned element is not idempotent", {g});
      }
      for (Element u = 0; u < n; ++u) {
        for (Element v = 0; v < n; ++v) {
          if (rho.classes.same(u, v) != (M.mul(u, g) == M.mul(v, g))) {
            fail("rho_U is not the kernel of x -> xg", {u, v, g});
          }
        }
      }
      out.idempotent_of.push_back(g);
    }
    auto sorted = out.idempotent_of;
    std::sort(sorted.begin(), sorted.end());
    out.injective =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!out.injective || out.cu.size() > out.idempotent_count) {
      fail("two members of CU^S share an idempotent", {});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Acts and reports
  ////////////////////////////////////////////////////////////////////////

  ActHierarchy classify_act(FiniteAct const& B, std::size_t m_max,
                            FlatOptions const& options) {
    ActHierarchy out;
    out.free_projective = classify_free_projective(B);
    out.condition_P     = check_P(B);
    out.condition_E     = check_E(B);
    out.strongly_flat   = out.condition_P.holds && out.condition_E.holds;
    out.flat            = flat_verdict(B, m_max, options);
    out.weakly_flat     = is_weakly_flat(B);
    bool const fr       = out.free_projective.is_free;
    bool const pr       = out.free_projective.is_projective;
    bool const fl       = out.flat.status != FlatStatus::no;
    out.monotone = (!fr || pr) && (!pr || out.strongly_flat)
                   && (!out.strongly_flat || fl) && (!fl || out.weakly_flat.holds);
    return out;
  }

  std::vector<FlatSample> flatness_samples(MonoidPtr M, std::size_t m_max) {
    std::vector<FlatSample> out;
    out.push_back({"S", classify_act(regular_act(M, Side::left), m_max)});
    out.push_back({"Theta", classify_act(trivial_act(M, Side::left), m_max)});
    for (auto e : M->idempotents()) {
      if (e != M->identity()) {
        out.push_back({"S" + M->label(e),
                       classify_act(principal_left_ideal(M, e).act, m_max)});
      }
    }
    return out;
  }

  MonoidReport analyze(MonoidPtr M, AnalyzeOptions const& options) {
    auto const& m = *M;
    auto launch   = [](auto&& f) {
      return std::async(std::launch::async, std::forward<decltype(f)>(f));
    };
    auto f_green = launch([&] {
      auto G = green(m);
      auto P = structure_predicates(m, G);
      return std::make_pair(std::move(G), std::move(P));
    });
    auto f_annihilators = launch([&] {
      std::pair<std::vector<AnnihilatorReport>, std::vector<AnnihilatorReport>> out;
      for (Element s = 0; s < m.order(); ++s) {
        for (Element t = 0; t < m.order(); ++t) {
          out.first.push_back(r_annihilator(m, s, t));
          out.second.push_back(big_r_annihilator(m, s, t));
        }
      }
      return out;
    });
    auto f_perfect = launch([&] {
      auto P = left_perfect(m, options.seq_len);
      auto A = axiomatisability_report(m, P, options.m_max);
      return std::make_pair(std::move(P), std::move(A));
    });
    bool const within_cap = m.order() <= options.cu_cap;
    auto       f_cu       = launch([&]() -> std::optional<OmegaReport> {
      if (!within_cap) {
        return std::nullopt;
      }
      return omega_report(m, options.cu_cap, options.stop);
    });
    auto f_samples = launch([&]() -> std::pair<std::optional<std::vector<FlatSample>>, std::string> {
      if (!within_cap) {
        return {std::nullopt, "skipped: cap"};
      }
      try {
        return {flatness_samples(M, options.m_max), "ok"};
      } catch (Error const& err) {
        if (err.kind() != ErrorKind::bound_too_large_for_budget) {
          throw;
        }
        return {std::nullopt, "skipped: budget"};
      }
    });

    MonoidReport out;
    out.monoid = M;
    out.cfrs   = cfrs_profile(m);
    std::tie(out.green, out.predicates) = f_green.get();
    std::tie(out.r_annihilators, out.big_r_annihilators) = f_annihilators.get();
    std::tie(out.perfect, out.axiomatisable) = f_perfect.get();
    out.complete  = completeness_report(out.predicates);
    out.cu        = f_cu.get();
    out.cu_status = within_cap ? "ok" : "skipped: cap";
    std::tie(out.samples, out.samples_status) = f_samples.get();
    return out;
  }

}  // namespace acta
