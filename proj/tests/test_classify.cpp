#include <doctest.h>

#include <set>

#include "acta/catalog.hpp"
#include "acta/classify.hpp"
#include "acta/error.hpp"
#include "oracles.hpp"

using namespace acta;

namespace {

  using Tuples = std::vector<std::vector<Element>>;

  FiniteMonoid const Z2 = catalog::cyclic_group(2);
  FiniteMonoid const U1 = catalog::u1();
  FiniteMonoid const RZ = catalog::right_zero_with_identity(2);

}  // namespace

TEST_CASE("r annihilators") {
  for (Element s = 0; s < RZ.order(); ++s) {
    auto r = r_annihilator(RZ, s, s);
    CHECK(r.members.size() == RZ.order());
    CHECK(r.generators == Tuples{{0}});
  }
  CHECK(r_annihilator(Z2, 0, 1).empty());
  auto ab = r_annihilator(RZ, 1, 2);
  CHECK(ab.members == Tuples{{1}, {2}});
  CHECK(ab.generators == Tuples{{1}});
}

TEST_CASE("R annihilators") {
  auto diag = big_r_annihilator(U1, 0, 0);
  CHECK(diag.generators == Tuples{{0, 0}});
  // members {(1,g), (g,1)} form one cyclic subact; the smaller pair is kept
  auto z = big_r_annihilator(Z2, 0, 1);
  CHECK(z.members == Tuples{{0, 1}, {1, 0}});
  CHECK(z.generators == Tuples{{0, 1}});
  auto u = big_r_annihilator(U1, 0, 1);
  CHECK(u.members == Tuples{{1, 0}, {1, 1}});
  CHECK(u.generators == Tuples{{1, 0}});
}

TEST_CASE("cfrs profile") {
  for (std::size_t n : {1, 2, 3, 4}) {
    for (auto x : cfrs_profile(catalog::cyclic_group(n))) {
      CHECK(x == 1);
    }
  }
  CHECK(cfrs_profile(U1) == std::vector<std::size_t>{1, 2});
  CHECK(cfrs_profile(RZ) == std::vector<std::size_t>{1, 2, 2});
}

TEST_CASE("condition (A)") {
  auto t = condition_a_check(catalog::trivial());
  CHECK(t.holds);
  auto u = condition_a_check(U1, 4);
  CHECK(u.holds);
  CHECK(u.length == 4);
  CHECK(u.sequences == 16);
  CHECK(u.window_clean);
  auto z = condition_a_check(Z2, 4);
  CHECK(z.holds);
  CHECK(z.window_clean);
  // 27^4 exceeds the budget, so the length shrinks to 3
  auto big = condition_a_check(catalog::full_transformation_monoid(3), 6);
  CHECK(big.length == 3);
  CHECK(big.requested_length == 6);
}

TEST_CASE("left perfect") {
  auto z = left_perfect(Z2);
  CHECK(z.value);
  CHECK(z.minimal_left_ideals == Tuples{{0, 1}});
  CHECK(z.left_idempotents == std::vector<Element>{0});
  auto r = left_perfect(RZ);
  CHECK(r.value);
  CHECK(r.minimal_left_ideals == Tuples{{1}, {2}});
  CHECK(r.left_idempotents == std::vector<Element>{1, 2});
  for (auto const& M : catalog::monoids_up_to(4)) {
    CHECK(left_perfect(M).value);
  }
}

TEST_CASE("e-good factorisations") {
  CHECK(e_good(U1, 1, 1, 1));
  CHECK(e_good_factor(U1, 1, 1, 1) == Element{0});
  CHECK_FALSE(e_good(U1, 1, 0, 1));
  CHECK_FALSE(e_good(U1, 0, 1, 1));
  CHECK_THROWS_AS((void)e_good(U1, 0, 0, 0), Error);
  CHECK_THROWS_AS((void)e_good(Z2, 0, 0, 1), Error);
}

TEST_CASE("star witness") {
  auto u = star_witness(U1);
  REQUIRE(u.size() == 1);
  CHECK(u[0].idempotent == 1);
  CHECK(u[0].cover == std::vector<Element>{0, 1});
  CHECK(star_witness(Z2).empty());
  // regression anchor
  auto r = star_witness(RZ);
  REQUIRE(r.size() == 2);
  CHECK(r[0].cover == std::vector<Element>{0, 1, 2});
  CHECK(r[1].cover == std::vector<Element>{0, 1, 2});
}

TEST_CASE("axiomatisability") {
  for (auto const& M : {catalog::trivial(), Z2, U1}) {
    auto a = axiomatisability_report(M);
    CHECK(a.strongly_flat.value);
    CHECK(a.projective.value);
    CHECK(a.free.value);
    CHECK(a.weakly_flat_and_flat.status == "bounded exploration only");
  }
  auto a = axiomatisability_report(U1, 1);
  // skeletons (s, t) over U1 and pairs (a, a') with a s = a' t
  CHECK(a.weakly_flat_and_flat.skeletons == 4);
  CHECK(a.weakly_flat_and_flat.realised == 2 + 2 + 2 + 4);
}

TEST_CASE("completeness") {
  auto z = completeness_report(Z2);
  CHECK(z.strongly_flat.verdict == Completeness::complete);
  CHECK(z.projective.verdict == Completeness::complete);
  CHECK(z.free.verdict == Completeness::complete);
  auto u = completeness_report(U1);
  CHECK(u.strongly_flat.verdict == Completeness::not_complete);
  CHECK(u.projective.verdict == Completeness::not_complete);
  CHECK(u.free.verdict == Completeness::complete);
  auto r = completeness_report(RZ);
  CHECK(r.strongly_flat.verdict == Completeness::not_covered);
  CHECK(r.projective.verdict == Completeness::not_complete);
}

TEST_CASE("omega report") {
  auto z = omega_report(Z2);
  CHECK(z.cu.size() == 1);
  CHECK(z.idempotent_count == 1);
  CHECK(z.injective);
  auto u = omega_report(U1);
  CHECK(u.cu.size() == 2);
  CHECK(u.idempotent_count == 2);
  CHECK(u.idempotent_of == std::vector<Element>{0, 1});
  auto r = omega_report(RZ);
  CHECK(r.cu.size() == 2);
  CHECK(r.idempotent_count == 3);
}

TEST_CASE("classify_act and analyze") {
  auto M = share(Z2);
  auto h = classify_act(trivial_act(M, Side::left));
  CHECK_FALSE(h.free_projective.is_free);
  CHECK_FALSE(h.strongly_flat);
  CHECK(h.weakly_flat.holds);
  CHECK(h.monotone);

  auto rep = analyze(share(U1));
  CHECK(rep.cu);
  CHECK(rep.cu->cu.size() == 2);
  REQUIRE(rep.samples);
  CHECK(rep.samples->size() == 3);

  AnalyzeOptions small;
  small.cu_cap = 1;
  auto capped  = analyze(share(U1), small);
  CHECK_FALSE(capped.cu);
  CHECK(capped.cu_status == "skipped: cap");
}

// Properties

TEST_CASE("property: annihilator generators are minimal and generate") {
  for (auto const& M : catalog::monoids_up_to(4)) {
    for (Element s = 0; s < M.order(); ++s) {
      for (Element t = 0; t < M.order(); ++t) {
        for (auto const& a : {r_annihilator(M, s, t), big_r_annihilator(M, s, t)}) {
          CHECK(generated_by(M, a.generators) == a.members);
          for (std::size_t i = 0; i < a.generators.size(); ++i) {
            auto rest = a.generators;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            CHECK(generated_by(M, rest).size() < a.members.size());
          }
        }
      }
    }
  }
}

TEST_CASE("property: solution counts in strongly flat acts stay below n_s") {
  for (auto const& M : catalog::monoids_up_to(3)) {
    auto P = share(M);
    auto n = cfrs_profile(M);
    for (std::size_t k = 1; k <= 4; ++k) {
      for (auto const& A : enumerate_acts(P, Side::left, k)) {
        if (!is_strongly_flat(A)) {
          continue;
        }
        for (Element s = 0; s < M.order(); ++s) {
          std::vector<std::size_t> count(k, 0);
          for (Element x = 0; x < k; ++x) {
            CHECK(++count[A.act(s, x)] <= n[s]);
          }
        }
      }
    }
  }
}

TEST_CASE("property: left perfect certificates") {
  for (auto const& M : catalog::monoids_up_to(4)) {
    auto p = left_perfect(M);
    REQUIRE(p.minimal_left_ideals.size() == p.left_idempotents.size());
    for (std::size_t i = 0; i < p.minimal_left_ideals.size(); ++i) {
      auto e = p.left_idempotents[i];
      CHECK(M.is_idempotent(e));
      CHECK(M.left_ideal(e) == p.minimal_left_ideals[i]);
      bool right_minimal = false;
      for (auto const& R : p.minimal_right_ideals) {
        right_minimal = right_minimal || R == M.right_ideal(e);
      }
      CHECK(right_minimal);
    }
  }
}

TEST_CASE("property: star witnesses replay and are irredundant") {
  for (auto const& M : catalog::monoids_up_to(4)) {
    for (auto const& w : star_witness(M)) {
      for (Element a = 0; a < M.order(); ++a) {
        CHECK(e_good(M, a, w.through[a], w.idempotent));
      }
      for (std::size_t i = 0; i < w.cover.size(); ++i) {
        bool still = true;
        for (Element a = 0; a < M.order() && still; ++a) {
          bool any = false;
          for (std::size_t j = 0; j < w.cover.size(); ++j) {
            any = any || (j != i && e_good(M, a, w.cover[j], w.idempotent));
          }
          still = any;
        }
        CHECK_FALSE(still);
      }
    }
  }
}

TEST_CASE("property: omega injection and the class of 1") {
  for (auto const& M : catalog::monoids_up_to(4)) {
    auto o = omega_report(M);
    std::set<Element> seen(o.idempotent_of.begin(), o.idempotent_of.end());
    CHECK(seen.size() == o.cu.size());
    CHECK(o.cu.size() <= o.idempotent_count);
    for (auto const& U : o.cu) {
      CHECK(rho_of_submonoid(M, U).classes.members_of(M.identity()) == U.members());
    }
  }
}

TEST_CASE("property: completeness ignores relabelling") {
  for (auto const& M : catalog::monoids_up_to(4)) {
    std::vector<Element> perm(M.order());
    for (Element i = 0; i < M.order(); ++i) {
      perm[i] = (i + 1) % M.order();
    }
    auto a = completeness_report(M);
    auto b = completeness_report(catalog::relabel(M, perm));
    CHECK(a.strongly_flat.verdict == b.strongly_flat.verdict);
    CHECK(a.projective.verdict == b.projective.verdict);
    CHECK(a.free.verdict == b.free.verdict);
  }
}
