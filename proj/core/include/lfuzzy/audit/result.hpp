#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfuzzy/audit/search_config.hpp"
#include "lfuzzy/fuzzy_set.hpp"

namespace lfuzzy::audit {

enum class Verdict { Holds, Refuted, Inconclusive };

std::string_view to_string(Verdict v);

/// One quantified set of a counterexample, under its role name in the claim.
struct WitnessSet {
  std::string role;
  bool crisp = false;  // drawn from the crisp quantifier space
  FuzzySet set;
};

/// A concrete tuple falsifying a claim, small enough to re-check by hand.
struct Witness {
  UniverseRef universe;
  std::vector<WitnessSet> sets;
  unsigned universe_size = 0;  // search point where the tuple was found
  unsigned grid_levels = 0;

  /// Set-file JSON ({"universe": ..., "sets": ...}) so a witness can be fed
  /// straight back into the compute commands.
  std::string sets_file_json(int indent = 2) const;
};

struct SearchStats {
  SearchMode mode = SearchMode::Exhaustive;
  /// Full tuple space (exhaustive) or requested trials (random).
  std::uint64_t space = 0;
  /// Tuples up to and including the verdict: the first violation when
  /// refuted, otherwise all of `space`. Independent of worker count.
  std::uint64_t cases = 0;
};

struct AuditResult {
  std::string property_id;
  /// Claims marked as theorems must hold; a refutation of one fails the
  /// whole report. Unmarked claims are recorded either way.
  bool theorem = false;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Witness> witness;
  SearchStats stats;
  std::string note;  // detail on the verdict, empty when there is none
};

}  // namespace lfuzzy::audit
