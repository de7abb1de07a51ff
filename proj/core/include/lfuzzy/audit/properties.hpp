#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfuzzy/fuzzy_set.hpp"
#include "lfuzzy/scalar_measures.hpp"

namespace lfuzzy::audit {

/// A universally quantified claim over tuples of grid fuzzy sets and crisp
/// sets. `check` returns true when the tuple satisfies the claim and may
/// leave a short explanation in `note` when it does not.
struct Property {
  std::string id;
  unsigned fuzzy_arity = 0;
  unsigned crisp_arity = 0;
  bool theorem = false;
  /// Role names for witness rendering: fuzzy roles first, then crisp.
  std::vector<std::string> roles;
  std::function<bool(std::span<const FuzzySet>, std::span<const CrispSet>,
                     std::string* note)>
      check;
  /// Optional reshaping of random draws so that conditional claims get their
  /// hypothesis exercised (e.g. sorting a triple into a chain). Reshaped
  /// tuples still come from the quantified domain; exhaustive search ignores
  /// this and tests the raw implication everywhere.
  std::function<void(std::vector<FuzzySet>&, std::vector<CrispSet>&)> reshape;
};

enum class RelationKind { Inclusion, Similarity, Distance };
enum class RelationProperty {
  Reflexive,
  Symmetric,
  Antisymmetric,
  MeetTransitive,
  JoinTransitive,
};

std::string_view to_string(RelationKind k);
std::string_view to_string(RelationProperty p);

/// The claim "<relation> has <property>", with the theorem flag set exactly
/// for the combinations that must hold.
Property relation_definition_property(RelationKind kind, RelationProperty prop);

enum class Suite {
  InclusionI1I12,
  SimilarityS1S10,
  DistanceD1D10,
  Thresholds,
  Betweenness,
  LatticeLaws,
  RelationDefinitions,
};

std::string_view suite_name(Suite suite);
Suite suite_from_name(std::string_view name);
std::span<const Suite> all_suites();

std::vector<Property> suite_properties(Suite suite);

/// The claim "<measure> satisfies <axiom>", where axiom is one of the scalar
/// axiom ids (see axiom_column_ids in axiom_grid.hpp).
Property scalar_axiom_property(ScalarMeasureId id, std::string_view axiom);

/// The same axiom read for the lattice-valued inclusion, with scalar order
/// replaced by the lattice order. All of these are theorems.
Property vector_axiom_property(std::string_view axiom);

/// Meet-transitivity of a scalar measure, as searched by
/// find_transitivity_counterexample.
Property scalar_transitivity_property(ScalarMeasureId id);

}  // namespace lfuzzy::audit
