// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "acta/catalog.hpp"
#include "acta/classify.hpp"
#include "acta/cli.hpp"
#include "acta/error.hpp"
#include "acta/flatness.hpp"
#include "acta/green.hpp"
#include "acta/io.hpp"
#include "oracles.hpp"

using namespace acta;

namespace {

  struct Outcome {
    std::size_t checked  = 0;
    std::size_t failures = 0;
    std::string detail;

    void expect(bool ok, std::string const& what = {}) {
      ++checked;
      if (!ok) {
        if (failures == 0 && !what.empty()) {
          detail = "first failure: " + what;
        }
        ++failures;
      }
    }
  };

  std::vector<FiniteAct> acts_up_to(MonoidPtr const& M, Side side, std::size_t max_size) {
    std::vector<FiniteAct> out;
    for (std::size_t k = 1; k <= max_size; ++k) {
      for (auto& A : enumerate_acts(M, side, k)) {
        out.push_back(std::move(A));
      }
    }
    return out;
  }

  std::string describe(FiniteMonoid const& M) {
    return io::monoid_to_text(M);
  }

  Outcome hierarchy_suite() {
    Outcome out;
    auto    start = std::chrono::steady_clock::now();
    std::size_t acts = 0;
    for (auto const& M : catalog::monoids_up_to(3)) {
      auto P = share(M);
      for (auto const& B : acts_up_to(P, Side::left, 3)) {
        ++acts;
        auto fp = classify_free_projective(B);
        bool sf = is_strongly_flat(B);
        auto fv = flat_verdict(B, 2);
        bool wf = is_weakly_flat(B).holds;
        bool fl = fv.status != FlatStatus::no;
        bool ok = (!fp.is_free || fp.is_projective) && (!fp.is_projective || sf)
                  && (!sf || fl) && (!fl || wf);
        if (fv.status == FlatStatus::no) {
          ok = ok && fv.witness && replay_flat_witness(B, *fv.witness);
        }
        out.expect(ok, "act over\n" + describe(M));
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
    std::ostringstream d;
    d << acts << " acts, " << out.failures << " violations, " << secs << " s";
    if (out.failures == 0) {
      out.detail = d.str();
    }
    return out;
  }

  Outcome green_suite() {
    Outcome out;
    for (auto const& M : catalog::monoids_up_to(4)) {
      auto G = green(M);
      auto P = structure_predicates(M, G);
      out.expect(G.D == G.J, "D != J");
      out.expect(P.is_local.value, "not local");
      for (auto e : M.idempotents()) {
        auto H     = G.H.members_of(e);
        bool group = true;
        for (auto x : H) {
          bool inverse = false;
          for (auto y : H) {
            group   = group && G.H.same(M.mul(x, y), e);
            inverse = inverse || (M.mul(x, y) == e && M.mul(y, x) == e);
          }
          group = group && inverse && M.mul(e, x) == x && M.mul(x, e) == x;
        }
        out.expect(group, "H-class of an idempotent is not a group");
      }
      if (P.is_regular.value) {
        out.expect(G.R == G.R_star, "R != R* on a regular monoid");
      }
    }
    if (out.failures == 0) {
      out.detail = "45 monoids, " + std::to_string(out.checked) + " checks";
    }
    return out;
  }

  Outcome sfcong_suite() {
    Outcome     out;
    std::size_t congruences = 0;
    for (auto const& M : catalog::monoids_up_to(3)) {
      auto P  = share(M);
      auto S  = regular_act(P, Side::left);
      auto sf = strongly_flat_left_congruences(M);
      for (auto const& cls : oracle::set_partitions(M.order())) {
        if (!oracle::is_left_congruence(M, cls)) {
          continue;
        }
        ++congruences;
        ActCongruence theta{Partition::from_labels(cls)};
        bool criterion = oracle::sf_criterion(M, cls);
        bool flat      = is_strongly_flat(quotient(S, theta).act);
        bool listed    = std::find(sf.begin(), sf.end(), theta) != sf.end();
        out.expect(criterion == flat && listed == flat, "disagreement over\n" + describe(M));
      }
    }
    if (out.failures == 0) {
      out.detail = std::to_string(congruences) + " left congruences, 0 disagreements";
    }
    return out;
  }

  Outcome congruence_suite() {
    Outcome out;
    for (auto const& M : catalog::monoids_up_to(4)) {
      auto all = left_congruences(M);
      auto sf  = strongly_flat_left_congruences(M);
      for (auto const& theta : all) {
        bool sub = true;
        try {
          (void)Submonoid::of(M, theta.classes.members_of(M.identity()));
        } catch (Error const&) {
          sub = false;
        }
        out.expect(sub, "class of 1 is not a submonoid");
      }
      for (auto const& x : sf) {
        for (auto const& y : sf) {
          bool same_one = x.classes.members_of(M.identity()) == y.classes.members_of(M.identity());
          out.expect(!same_one || x == y, "strongly flat congruences share 1/theta");
        }
      }
      for (auto const& T : enumerate_submonoids(M)) {
        auto rho      = rho_of_submonoid(M, T);
        bool is_class = rho.classes.members_of(M.identity()) == T.members();
        out.expect(is_class == is_right_unitary(M, T), "class of rho_T vs right unitary");
        if (is_right_unitary(M, T)) {
          bool listed = std::find(sf.begin(), sf.end(), rho) != sf.end();
          out.expect(listed == is_right_collapsible(M, T), "rho_T strongly flat vs collapsible");
        }
      }
      try {
        auto o = omega_report(M);
        std::set<Element> distinct(o.idempotent_of.begin(), o.idempotent_of.end());
        out.expect(o.injective && distinct.size() == o.cu.size()
                       && o.cu.size() <= o.idempotent_count,
                   "CU^S -> E not injective");
      } catch (Error const& e) {
        out.expect(false, e.what());
      }
    }
    if (out.failures == 0) {
      out.detail = std::to_string(out.checked) + " checks, 0 failures";
    }
    return out;
  }

  Outcome tensor_suite() {
    Outcome                 out;
    std::mt19937            rng(20241016);
    auto const              monoids = catalog::monoids_up_to(3);
    std::vector<MonoidPtr>  shared;
    std::vector<std::vector<FiniteAct>> rights, lefts;
    for (auto const& M : monoids) {
      shared.push_back(share(M));
      rights.push_back(acts_up_to(shared.back(), Side::right, 3));
      lefts.push_back(acts_up_to(shared.back(), Side::left, 3));
    }
    std::size_t const samples = 600;
    std::size_t       queries = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      auto        m = std::uniform_int_distribution<std::size_t>(0, monoids.size() - 1)(rng);
      auto const& A = rights[m][std::uniform_int_distribution<std::size_t>(0, rights[m].size() - 1)(rng)];
      auto const& B = lefts[m][std::uniform_int_distribution<std::size_t>(0, lefts[m].size() - 1)(rng)];
      auto        T = tensor(A, B);
      out.expect(oracle::same_class(T.classes) == oracle::tensor(A, B),
                 "partition differs from the naive closure");
      for (Element a = 0; a < A.size(); ++a) {
        for (Element b = 0; b < B.size(); ++b) {
          for (Element a2 = 0; a2 < A.size(); ++a2) {
            for (Element b2 = 0; b2 < B.size(); ++b2) {
              auto w = tensor_equal(A, B, {a, b}, {a2, b2});
              ++queries;
              bool ok = w.has_value() == T.equal({a, b}, {a2, b2});
              if (w) {
                ok = ok && verify_tossing(A, B, *w) && w->left_chain.front() == a
                     && w->left_chain.back() == a2 && w->right_chain.front() == b
                     && w->right_chain.back() == b2;
              }
              out.expect(ok, "tossing does not replay");
            }
          }
        }
      }
    }
    if (out.failures == 0) {
      out.detail = std::to_string(samples) + " instances, " + std::to_string(queries)
                   + " pair queries, 0 failures";
    }
    return out;
  }

  Outcome group_suite() {
    Outcome out;
    for (std::size_t n : {2, 3}) {
      auto M  = catalog::cyclic_group(n);
      auto cu = enumerate_cu(M);
      out.expect(cu.size() == 1 && cu[0].members() == std::vector<Element>{M.identity()},
                 "CU^S != {{1}}");
      for (auto x : cfrs_profile(M)) {
        out.expect(x == 1, "n_s != 1");
      }
      auto c = completeness_report(M);
      out.expect(c.strongly_flat.verdict == Completeness::complete, "SF not complete");
      out.expect(c.projective.verdict == Completeness::complete, "P not complete");
      out.expect(c.free.verdict == Completeness::complete, "Fr not complete");
    }
    if (out.failures == 0) {
      out.detail = "Z2, Z3: CU = {{1}}, n_s = 1, SF/P/Fr complete";
    }
    return out;
  }

  Outcome cyclic_suite() {
    Outcome out;
    for (auto const& M : catalog::monoids_up_to(4)) {
      auto S = regular_act(share(M), Side::left);
      auto G = green(M);
      for (Element a = 0; a < M.order(); ++a) {
        for (Element b = 0; b < M.order(); ++b) {
          out.expect(cyclic_iso(S, a, S, b).isomorphic == G.R_star.same(a, b),
                     "cyclic_iso disagrees with R*");
        }
      }
    }
    if (out.failures == 0) {
      out.detail = std::to_string(out.checked) + " pairs, 0 disagreements";
    }
    return out;
  }

  Outcome determinism_suite() {
    Outcome                   out;
    std::string const         data = ACTA_TEST_DATA;
    auto                      roundtrip = [&](std::string const& text, auto parse, auto emit,
                         std::string const& what) {
      out.expect(emit(parse(text)) == text, what + " round-trip");
    };
    for (auto const& M : catalog::monoids_up_to(4)) {
      roundtrip(io::serialize_monoid(M), io::parse_monoid,
                [](FiniteMonoid const& x) { return io::serialize_monoid(x); }, "monoid JSON");
      roundtrip(io::monoid_to_text(M), io::parse_monoid,
                [](FiniteMonoid const& x) { return io::monoid_to_text(x); }, "monoid text");
    }
    for (auto const& M : catalog::monoids_up_to(3)) {
      for (auto const& A : acts_up_to(share(M), Side::left, 2)) {
        roundtrip(io::serialize_act(A), [](std::string const& t) { return io::parse_act(t); },
                  [](FiniteAct const& x) { return io::serialize_act(x); }, "act");
        auto v = io::dump(io::verdict_to_json(flat_verdict(A, 2)));
        out.expect(io::dump(io::verdict_to_json(io::verdict_from_json(io::parse_json(v)))) == v,
                   "verdict round-trip");
      }
    }
    for (auto name : {"swap_dfa.json", "const_dfa.json", "one_state_dfa.json"}) {
      auto text = io::dump(io::parse_json(io::read_file(data + "/" + name)));
      out.expect(io::dump(io::dfa_to_json(io::parse_dfa(text))) == text, "DFA round-trip");
    }
    {
      auto text = io::dump(io::parse_json(io::read_file(data + "/swap_gens.json")));
      out.expect(io::dump(io::transformations_to_json(io::parse_transformations(text))) == text,
                 "transformation round-trip");
    }
    for (auto const& M : catalog::monoids_up_to(3)) {
      auto text = io::serialize_report(analyze(share(M)));
      out.expect(io::dump(io::parse_json(text)) == text, "report round-trip");
      out.expect(io::serialize_report(analyze(share(M))) == text, "report determinism");
    }

    auto cli = [](std::vector<std::string> const& args) {
      std::ostringstream o, e;
      int                code = run_cli(args, o, e);
      return std::to_string(code) + "\n" + o.str() + e.str();
    };
    std::vector<std::vector<std::string>> commands{
        {"analyze", data + "/u1.json"},
        {"analyze", data + "/rz.json", "--format", "text"},
        {"classify-act", data + "/z2.json", data + "/theta_z2.json"},
        {"tensor", data + "/u1.json", data + "/s_u1_right.json", data + "/theta_u1_left.json",
         "--pair", "1,0/0,0"},
        {"cu", data + "/rz.json"},
        {"witness", data + "/rz.json"},
        {"from-dfa", data + "/swap_dfa.json"},
        {"congruences", data + "/rz.json"},
    };
    for (auto const& args : commands) {
      auto first = cli(args);
      for (int i = 0; i < 3; ++i) {
        out.expect(cli(args) == first, "CLI output differs between runs");
      }
    }

    std::mt19937            rng(7);
    std::vector<FiniteAct>  pool;
    for (auto const& M : catalog::monoids_up_to(3)) {
      for (auto& A : acts_up_to(share(M), Side::left, 3)) {
        if (!is_strongly_flat(A)) {
          pool.push_back(std::move(A));
        }
      }
    }
    std::size_t agreed = 0;
    for (int i = 0; i < 100; ++i) {
      auto const& B = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      FlatOptions parallel;
      parallel.threads = 4;
      bool same = flat_verdict(B, 2) == flat_verdict(B, 2, parallel);
      agreed += same;
      out.expect(same, "parallel and serial flat_verdict differ");
    }
    if (out.failures == 0) {
      out.detail = std::to_string(out.checked) + " checks; parallel = serial on "
                   + std::to_string(agreed) + "/100";
    }
    return out;
  }

}  // namespace

int main() {
  struct Criterion {
    char const*              name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {"hierarchy Fr => P => SF => F => WF on acts of size <= 3, order <= 3", hierarchy_suite},
      {"Green/structure: D = J, local, H_e groups, R = R* when regular (order <= 4)", green_suite},
      {"sfcong criterion agrees with strong flatness of S/theta (order <= 3)", sfcong_suite},
      {"class of 1, rho_T and the CU^S -> E injection (order <= 4)", congruence_suite},
      {"tensor partition vs naive closure, tossings replay (600 samples)", tensor_suite},
      {"cyclic groups of order 2 and 3", group_suite},
      {"cyclic_iso on S matches R* (order <= 4)", cyclic_suite},
      {"determinism and round-trips", determinism_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (std::exception const& e) {
      o.failures = 1;
      o.detail   = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %zu: %s (%s)\n", o.failures == 0 ? "PASS" : "FAIL", i + 1,
                criteria[i].name, o.detail.c_str());
    failed += o.failures != 0;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
