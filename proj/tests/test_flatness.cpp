#include <doctest.h>

#include "acta/catalog.hpp"
#include "acta/error.hpp"
#include "acta/flatness.hpp"
#include "oracles.hpp"

using namespace acta;

namespace {

  MonoidPtr const Z2 = share(catalog::cyclic_group(2));
  MonoidPtr const U1 = share(catalog::u1());
  MonoidPtr const RZ = share(catalog::right_zero_with_identity(2));

  FiniteAct left_S(MonoidPtr const& M) {
    return regular_act(M, Side::left);
  }
  FiniteAct right_S(MonoidPtr const& M) {
    return regular_act(M, Side::right);
  }
  FiniteAct theta(MonoidPtr const& M, Side side = Side::left) {
    return trivial_act(M, side);
  }

  std::vector<std::shared_ptr<FiniteAct const>> acts_up_to(MonoidPtr const& M, Side side,
                                                           std::size_t max_size) {
    std::vector<std::shared_ptr<FiniteAct const>> out;
    for (std::size_t k = 1; k <= max_size; ++k) {
      for (auto& A : enumerate_acts(M, side, k)) {
        out.push_back(std::make_shared<FiniteAct const>(std::move(A)));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("tensor products") {
  for (auto const& M : {Z2, U1, RZ}) {
    auto T = tensor(right_S(M), left_S(M));
    CHECK(T.num_classes() == M->order());
    for (Element a = 0; a < M->order(); ++a) {
      for (Element b = 0; b < M->order(); ++b) {
        CHECK(T.equal({a, b}, {M->identity(), M->mul(a, b)}));
      }
    }
  }
  CHECK(tensor(right_S(U1), theta(U1)).num_classes() == 1);
  CHECK(tensor(theta(U1, Side::right), theta(U1)).num_classes() == 1);

  CHECK_THROWS_AS((void)tensor(left_S(U1), left_S(U1)), Error);
  CHECK_THROWS_AS((void)tensor(right_S(U1), left_S(Z2)), Error);
}

TEST_CASE("tensor_equal witnesses") {
  auto same = tensor_equal(right_S(U1), left_S(U1), {0, 1}, {0, 1});
  REQUIRE(same);
  CHECK(same->skeleton.entries() == std::vector<Element>{0, 0});

  // (e, 1) ~ (1, e.1) in one step
  auto A    = right_S(U1);
  auto B    = left_S(U1);
  auto step = tensor_equal(A, B, {1, 0}, {0, 1});
  REQUIRE(step);
  CHECK(step->skeleton.length() == 1);
  CHECK(verify_tossing(A, B, *step));

  auto C = right_S(Z2);
  auto D = theta(Z2);
  auto w = tensor_equal(C, D, {0, 0}, {1, 0});
  REQUIRE(w);
  CHECK(w->skeleton.length() == 1);
  CHECK(w->skeleton.entries() == std::vector<Element>{0, 1});
  CHECK(verify_tossing(C, D, *w));

  CHECK_FALSE(tensor_equal(right_S(U1), left_S(U1), {0, 0}, {0, 1}));
}

TEST_CASE("conditions (P) and (E)") {
  for (auto const& M : {Z2, U1, RZ}) {
    CHECK(check_P(left_S(M)).holds);
    CHECK(check_E(left_S(M)).holds);
    CHECK(is_strongly_flat(left_S(M)));
  }
  CHECK(check_P(theta(U1)).holds);
  CHECK(check_E(theta(U1)).holds);
  CHECK(is_strongly_flat(theta(U1)));

  CHECK(check_P(theta(Z2)).holds);
  auto e = check_E(theta(Z2));
  CHECK_FALSE(e.holds);
  CHECK(e.counterexample == std::vector<Element>{0, 1, 0});
  CHECK_FALSE(is_strongly_flat(theta(Z2)));
}

TEST_CASE("weak flatness") {
  CHECK(is_weakly_flat(left_S(U1)).holds);
  CHECK(is_weakly_flat(theta(U1)).holds);
  CHECK(is_weakly_flat(theta(Z2)).holds);
}

TEST_CASE("flat_verdict") {
  for (auto const& M : {Z2, U1, RZ}) {
    for (std::size_t m : {1, 2, 3}) {
      CHECK(flat_verdict(left_S(M), m).status == FlatStatus::yes);
    }
  }
  CHECK(flat_verdict(theta(U1), 2).status == FlatStatus::yes);

  // regression anchor: no failing skeleton up to length 2
  auto v = flat_verdict(theta(Z2), 2);
  CHECK(v.status == FlatStatus::unknown);
  CHECK(v.bound == 2);
  CHECK_FALSE(v.witness);

  // S short-circuits through strong flatness; Theta reaches the search and its budget
  CHECK(flat_verdict(left_S(share(catalog::full_transformation_monoid(3))), 3).status
        == FlatStatus::yes);
  CHECK_THROWS_AS((void)flat_verdict(theta(Z2), 10), Error);
  CHECK_THROWS_AS((void)flat_verdict(theta(Z2), 0), Error);
}

TEST_CASE("presented acts") {
  auto P = presented_act(U1, Skeleton::of({0, 0}));
  // (x, 1) ~ (x', 1) glues both copies
  CHECK(P.act.size() == 2);
  CHECK(P.x == P.x_prime);

  auto Q = presented_act(U1, Skeleton::of({1, 1}));
  // x e ~ x' e only
  CHECK(Q.act.size() == 3);
  CHECK(Q.x != Q.x_prime);
}

TEST_CASE("strongly flat left congruences") {
  auto u1 = strongly_flat_left_congruences(*U1);
  CHECK(u1.size() == 2);  // identity and universal
  auto z2 = strongly_flat_left_congruences(*Z2);
  REQUIRE(z2.size() == 1);
  CHECK(z2[0].classes.num_classes() == 2);
}

TEST_CASE("rho of a submonoid") {
  auto one = rho_of_submonoid(*U1, Submonoid::of(*U1, {0}));
  CHECK(one.classes.num_classes() == 2);
  CHECK(rho_of_submonoid(*U1, Submonoid::of(*U1, {0, 1})).classes.num_classes() == 1);
  CHECK(rho_of_submonoid(*RZ, Submonoid::of(*RZ, {0, 1, 2})).classes.num_classes() == 1);
}

TEST_CASE("formula emission") {
  auto const& m = *U1;
  CHECK(emit_formula(FormulaKind::gamma, Skeleton::of({0, 0}), m)
        == "E y1 . y = 1*y1 & 1*y1 = y'");
  CHECK(emit_formula(FormulaKind::psi, Skeleton::of({0, 0}), m)
        == "A y . A y' . ~(E y1 . y = 1*y1 & 1*y1 = y')");
  auto g = emit_formula(FormulaKind::gamma, Skeleton::of({1, 1, 1, 1}), m);
  CHECK(g == "E y1 . E y2 . y = e*y1 & e*y1 = e*y2 & e*y2 = y'");
  CHECK(g == emit_formula(FormulaKind::gamma, Skeleton::of({1, 1, 1, 1}), m));
  CHECK_THROWS_AS((void)Skeleton::of({0}), Error);
}

// Properties

TEST_CASE("property: tensor partition matches the naive closure") {
  for (auto const& M : catalog::monoids_up_to(2)) {
    auto P = share(M);
    for (auto const& A : acts_up_to(P, Side::right, 3)) {
      for (auto const& B : acts_up_to(P, Side::left, 3)) {
        auto T = tensor(*A, *B);
        CHECK(oracle::same_class(T.classes) == oracle::tensor(*A, *B));
      }
    }
  }
}

TEST_CASE("property: tossings replay and are minimal") {
  for (auto const& M : catalog::monoids_up_to(3)) {
    auto P = share(M);
    auto A = right_S(P);
    for (auto const& B : acts_up_to(P, Side::left, 2)) {
      auto T = tensor(A, *B);
      for (Element a = 0; a < A.size(); ++a) {
        for (Element b = 0; b < B->size(); ++b) {
          for (Element a2 = 0; a2 < A.size(); ++a2) {
            for (Element b2 = 0; b2 < B->size(); ++b2) {
              auto w = tensor_equal(A, *B, {a, b}, {a2, b2});
              CHECK(w.has_value() == T.equal({a, b}, {a2, b2}));
              if (w) {
                CHECK(verify_tossing(A, *B, *w));
                CHECK(w->left_chain.front() == a);
                CHECK(w->left_chain.back() == a2);
                CHECK(w->right_chain.front() == b);
                CHECK(w->right_chain.back() == b2);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("property: flatness hierarchy on small acts") {
  for (auto const& M : catalog::monoids_up_to(3)) {
    auto P = share(M);
    for (auto const& B : acts_up_to(P, Side::left, 3)) {
      auto fp = classify_free_projective(*B);
      bool sf = is_strongly_flat(*B);
      auto fv = flat_verdict(*B, 2);
      bool wf = is_weakly_flat(*B).holds;
      CHECK((!fp.is_free || fp.is_projective));
      CHECK((!fp.is_projective || sf));
      CHECK((!sf || fv.status != FlatStatus::no));
      CHECK((fv.status == FlatStatus::no || wf));
      if (fv.status == FlatStatus::no) {
        REQUIRE(fv.witness);
        CHECK(replay_flat_witness(*B, *fv.witness));
      }
    }
  }
}

TEST_CASE("property: sfcong criterion agrees with strong flatness of S/theta") {
  for (auto const& M : catalog::monoids_up_to(3)) {
    auto P  = share(M);
    auto S  = left_S(P);
    auto sf = strongly_flat_left_congruences(M);
    for (auto const& theta : left_congruences(M)) {
      bool listed = std::find(sf.begin(), sf.end(), theta) != sf.end();
      CHECK(listed == is_strongly_flat(quotient(S, theta).act));
      CHECK(listed == oracle::sf_criterion(M, theta.classes.labels()));
    }
  }
}

TEST_CASE("property: congruence structure") {
  for (auto const& M : catalog::monoids_up_to(4)) {
    auto all = left_congruences(M);
    auto sf  = strongly_flat_left_congruences(M);
    // the class of 1 is a submonoid
    for (auto const& theta : all) {
      CHECK_NOTHROW((void)Submonoid::of(M, theta.classes.members_of(M.identity())));
    }
    // strongly flat congruences are determined by the class of 1
    for (auto const& x : sf) {
      for (auto const& y : sf) {
        if (x.classes.members_of(M.identity()) == y.classes.members_of(M.identity())) {
          CHECK(x == y);
        }
      }
    }
    for (auto const& T : enumerate_submonoids(M)) {
      auto rho   = rho_of_submonoid(M, T);
      bool class_ = rho.classes.members_of(M.identity()) == T.members();
      CHECK(class_ == is_right_unitary(M, T));
      if (is_right_unitary(M, T)) {
        CHECK(is_strongly_flat_congruence(M, rho.classes) == is_right_collapsible(M, T));
      }
    }
  }
}
