#pragma once

#include <cstddef>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "acta/act.hpp"
#include "acta/flatness.hpp"
#include "acta/green.hpp"
#include "acta/monoid.hpp"

namespace acta {

  ////////////////////////////////////////////////////////////////////////
  // Annihilators
  ////////////////////////////////////////////////////////////////////////

  enum class AnnihilatorKind { small_r, big_r };

  // r(s, t) = {u : su = tu} as a right ideal, or
  // R(s, t) = {(u, v) : su = tv} as a subact of the right act S x S.
  // Members and generators are tuples of length 1 (r) or 2 (R).
  struct AnnihilatorReport {
    AnnihilatorKind                   kind = AnnihilatorKind::small_r;
    Element                           s    = 0;
    Element                           t    = 0;
    std::vector<std::vector<Element>> members;
    std::vector<std::vector<Element>> generators;

    [[nodiscard]] bool empty() const noexcept {
      return members.empty();
    }
  };

  // Generators: one per maximal class of mutually generating members, the
  // smallest member of each.
  [[nodiscard]] AnnihilatorReport r_annihilator(FiniteMonoid const& M,
                                                Element s, Element t);
  [[nodiscard]] AnnihilatorReport big_r_annihilator(FiniteMonoid const& M,
                                                    Element s, Element t);

  // The subact of S (or S x S) generated by the given tuples.
  [[nodiscard]] std::vector<std::vector<Element>>
  generated_by(FiniteMonoid const&                      M,
               std::vector<std::vector<Element>> const& gens);

  // n_s = max over t of |{x : sx = t}|.
  [[nodiscard]] std::vector<std::size_t> cfrs_profile(FiniteMonoid const& M);

  ////////////////////////////////////////////////////////////////////////
  // Condition (A) and left perfectness
  ////////////////////////////////////////////////////////////////////////

  struct ConditionAReport {
    bool        holds = true;
    std::string reason;
    std::size_t requested_length = 0;
    // shortened so that |S|^length stays within the search budget
    std::size_t            length    = 0;
    std::size_t            sequences = 0;
    bool                   window_clean = true;
    std::vector<Element>   inconclusive;  // first sequence without a window hit
  };

  // Every sequence of the given length is extended periodically; for each
  // position i a j in (i, i + |S| * length] with
  // S a_i ... a_j = S a_{i+1} ... a_j is sought. A miss is reported as
  // inconclusive, never as a refutation.
  [[nodiscard]] ConditionAReport condition_a_check(FiniteMonoid const& M,
                                                   std::size_t seq_len = 6);

  struct PerfectReport {
    bool             value = true;
    std::string      reason;
    ConditionAReport condition_a;
    bool             descending_chain = true;  // (M_R)
    bool             group_bound      = true;
    std::vector<std::vector<Element>> minimal_left_ideals;
    std::vector<std::vector<Element>> minimal_right_ideals;
    // idempotent generating each minimal left / right ideal
    std::vector<Element> left_idempotents;
    std::vector<Element> right_idempotents;
    // S b_1 in S b_0 and S b_1 iso S b_0 imply equality
    bool isomorphic_ideals_equal = true;
  };

  // Throws consistency_failure if a consequence of left perfectness fails.
  [[nodiscard]] PerfectReport left_perfect(FiniteMonoid const& M,
                                           std::size_t         seq_len = 6);

  ////////////////////////////////////////////////////////////////////////
  // e-good factorisations and condition (*)
  ////////////////////////////////////////////////////////////////////////

  // Smallest y with a = xy such that y != wz whenever e = xw and w L e.
  // Throws identity_idempotent for e = 1 and not_idempotent.
  [[nodiscard]] std::optional<Element> e_good_factor(FiniteMonoid const& M,
                                                     Element a, Element x,
                                                     Element e);
  [[nodiscard]] bool e_good(FiniteMonoid const& M, Element a, Element x,
                            Element e);

  struct StarWitness {
    Element              idempotent = 0;
    std::vector<Element> cover;    // the finite set f, sorted
    std::vector<Element> through;  // a -> member of f it factors through
  };

  // One entry per idempotent e != 1. Greedy cover (most new elements, then
  // smallest index) followed by pruning of redundant members. Throws
  // no_cover if some a factors through nothing.
  [[nodiscard]] std::vector<StarWitness> star_witness(FiniteMonoid const& M);

  ////////////////////////////////////////////////////////////////////////
  // Verdict tables
  ////////////////////////////////////////////////////////////////////////

  struct ReasonedFlag {
    bool        value = true;
    std::string reason;
  };

  struct BoundedExploration {
    bool        performed = false;
    std::string status;
    std::size_t bound     = 0;
    std::size_t skeletons = 0;
    // (a, skeleton, a') joined by a chain a_i s_i = a_{i+1} t_i in S
    std::size_t realised = 0;
  };

  struct AxiomatisabilityReport {
    ReasonedFlag             strongly_flat;
    ReasonedFlag             projective;
    ReasonedFlag             free;
    std::vector<StarWitness> star;
    BoundedExploration       weakly_flat_and_flat;
  };

  [[nodiscard]] AxiomatisabilityReport
  axiomatisability_report(FiniteMonoid const& M, PerfectReport const& perfect,
                          std::size_t m_max = 2);
  [[nodiscard]] AxiomatisabilityReport
  axiomatisability_report(FiniteMonoid const& M, std::size_t m_max = 2);

  enum class Completeness { complete, not_complete, not_covered };

  [[nodiscard]] char const* to_string(Completeness c) noexcept;

  struct CompletenessVerdict {
    Completeness verdict = Completeness::complete;
    std::string  reason;
  };

  struct CompletenessReport {
    CompletenessVerdict strongly_flat;
    CompletenessVerdict projective;
    CompletenessVerdict free;
    bool                free_model_complete = true;
    bool                free_categorical    = true;
  };

  [[nodiscard]] CompletenessReport
  completeness_report(StructurePredicates const& predicates);
  [[nodiscard]] CompletenessReport completeness_report(FiniteMonoid const& M);

  struct OmegaReport {
    std::vector<Submonoid> cu;
    bool                   stabiliser = true;
    std::size_t            idempotent_count = 0;
    // per member of cu: idempotent g with rho_U = {(u, v) : ug = vg}
    std::vector<Element> idempotent_of;
    bool                 injective = true;
  };

  // Throws injection_failure if a certificate cannot be built or two
  // members of CU^S share an idempotent; order_exceeds_cap above cap.
  [[nodiscard]] OmegaReport omega_report(FiniteMonoid const& M,
                                         std::size_t         cap  = 16,
                                         std::stop_token     stop = {});

  ////////////////////////////////////////////////////////////////////////
  // Acts and full reports
  ////////////////////////////////////////////////////////////////////////

  struct ActHierarchy {
    FreeProjReport free_projective;
    ConditionCheck condition_P;
    ConditionCheck condition_E;
    bool           strongly_flat = false;
    FlatVerdict    flat;
    ConditionCheck weakly_flat;
    // free => projective => strongly flat => flat != no => weakly flat
    bool monotone = true;
  };

  [[nodiscard]] ActHierarchy classify_act(FiniteAct const&   B,
                                          std::size_t        m_max   = 2,
                                          FlatOptions const& options = {});

  struct FlatSample {
    std::string  name;
    ActHierarchy hierarchy;
  };

  // S, the one-element act and Se for each idempotent e != 1.
  [[nodiscard]] std::vector<FlatSample> flatness_samples(MonoidPtr   M,
                                                         std::size_t m_max);

  struct AnalyzeOptions {
    std::size_t     m_max   = 2;
    std::size_t     cu_cap  = 16;
    std::size_t     seq_len = 6;
    std::stop_token stop;
  };

  struct MonoidReport {
    MonoidPtr                      monoid;
    GreenStructure                 green;
    StructurePredicates            predicates;
    std::vector<AnnihilatorReport> r_annihilators;
    std::vector<AnnihilatorReport> big_r_annihilators;
    std::vector<std::size_t>       cfrs;
    PerfectReport                  perfect;
    AxiomatisabilityReport         axiomatisable;
    CompletenessReport             complete;
    // absent when skipped; the status then names the reason
    std::optional<OmegaReport>             cu;
    std::string                            cu_status;
    std::optional<std::vector<FlatSample>> samples;
    std::string                            samples_status;
  };

  // Independent sections are computed concurrently.
  [[nodiscard]] MonoidReport analyze(MonoidPtr M, AnalyzeOptions const& options = {});

}  // namespace acta
