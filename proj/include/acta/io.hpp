#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "acta/act.hpp"
#include "acta/classify.hpp"
#include "acta/flatness.hpp"
#include "acta/monoid.hpp"

namespace acta::io {

  using Json = nlohmann::ordered_json;

  // Parse failures throw Error(syntax) with a location in the message;
  // table problems are reported by the validating constructors.

  [[nodiscard]] std::string read_file(std::filesystem::path const& path);
  void write_file(std::filesystem::path const& path, std::string const& text);

  ////////////////////////////////////////////////////////////////////////
  // Monoids
  ////////////////////////////////////////////////////////////////////////

  // JSON when the first non-blank character is '{', canonical text
  // otherwise.
  [[nodiscard]] FiniteMonoid parse_monoid(std::string_view source);
  [[nodiscard]] FiniteMonoid monoid_from_json(Json const& j);
  [[nodiscard]] Json         monoid_to_json(FiniteMonoid const& M);

  // {"order","identity","table","labels"?} with two-space indentation and
  // a trailing newline.
  [[nodiscard]] std::string serialize_monoid(FiniteMonoid const& M);

  // n lines of n indices; the first line is prefixed by the identity.
  [[nodiscard]] std::string   monoid_to_text(FiniteMonoid const& M);
  [[nodiscard]] FiniteMonoid  monoid_from_text(std::string_view text);

  ////////////////////////////////////////////////////////////////////////
  // Acts
  ////////////////////////////////////////////////////////////////////////

  // "monoid" is an inline object or a path resolved against base_dir.
  [[nodiscard]] FiniteAct parse_act(std::string_view             source,
                                    std::filesystem::path const& base_dir = {});
  [[nodiscard]] FiniteAct act_from_json(Json const&                  j,
                                        std::filesystem::path const& base_dir = {});
  // Same, but the act must be over `M` (monoid_mismatch otherwise). A
  // missing "monoid" field means `M`.
  [[nodiscard]] FiniteAct act_from_json(Json const& j, MonoidPtr const& M,
                                        std::filesystem::path const& base_dir = {});
  [[nodiscard]] Json        act_to_json(FiniteAct const& A);
  [[nodiscard]] std::string serialize_act(FiniteAct const& A);

  ////////////////////////////////////////////////////////////////////////
  // Generated monoids
  ////////////////////////////////////////////////////////////////////////

  struct Dfa {
    std::size_t                       states = 0;
    std::vector<std::string>          alphabet;
    std::vector<std::vector<Element>> delta;  // per symbol, per state
  };

  struct TransformationGenSet {
    std::size_t                       degree = 0;
    std::vector<std::string>          labels;
    std::vector<std::vector<Element>> maps;
  };

  [[nodiscard]] Dfa                  parse_dfa(std::string_view source);
  [[nodiscard]] Json                 dfa_to_json(Dfa const& dfa);
  [[nodiscard]] TransformationGenSet parse_transformations(std::string_view source);
  [[nodiscard]] Json transformations_to_json(TransformationGenSet const& gens);

  struct GeneratedMonoid {
    FiniteMonoid                      monoid;
    std::vector<std::string>          words;  // shortest word per element
    std::vector<std::vector<Element>> maps;   // the transformation per element
  };

  // Breadth-first closure from the identity map, generators in the given
  // order, so elements appear in shortlex order of their words. Words act
  // left to right: xy applies x first, then y. Element labels are the
  // words ("1" for the identity), joined by '_' when a generator label has
  // more than one character.
  [[nodiscard]] GeneratedMonoid transformation_monoid(TransformationGenSet const& gens);
  [[nodiscard]] GeneratedMonoid transition_monoid(Dfa const& dfa);
  [[nodiscard]] Json            generated_to_json(GeneratedMonoid const& G);

  ////////////////////////////////////////////////////////////////////////
  // Results
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] Json        verdict_to_json(FlatVerdict const& v);
  [[nodiscard]] FlatVerdict verdict_from_json(Json const& j);

  [[nodiscard]] Json tossing_to_json(Tossing const& T);
  [[nodiscard]] Json tensor_to_json(TensorProduct const& T);
  [[nodiscard]] Json hierarchy_to_json(ActHierarchy const& H);
  [[nodiscard]] Json submonoids_to_json(std::vector<Submonoid> const& list);
  [[nodiscard]] Json star_to_json(std::vector<StarWitness> const& list);
  [[nodiscard]] Json congruences_to_json(std::vector<ActCongruence> const& all,
                                         std::vector<ActCongruence> const& strongly_flat);

  // Schema "acta/1".
  [[nodiscard]] Json        report_to_json(MonoidReport const& report);
  [[nodiscard]] std::string serialize_report(MonoidReport const& report);

  // Two-space indentation and a trailing newline.
  [[nodiscard]] std::string dump(Json const& j);
  // Syntax errors carry the parser's byte position.
  [[nodiscard]] Json parse_json(std::string_view source);

}  // namespace acta::io
