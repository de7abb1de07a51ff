#pragma once

#include <cstdint>
#include <vector>

#include "lfuzzy/audit/properties.hpp"
#include "lfuzzy/audit/result.hpp"
#include "lfuzzy/audit/search_config.hpp"
#include "lfuzzy/scalar_measures.hpp"

namespace lfuzzy::audit {

/// Tuples the property quantifies over under this config. Throws DomainError
/// if the count does not fit in 64 bits.
std::uint64_t tuple_space_size(const Property& property, const SearchConfig& config);

/// Decides one universally quantified claim.
///
/// Exhaustive mode scans every tuple and returns Holds or Refuted; a space
/// beyond config.case_cap raises InfeasibleError up front. Random mode draws
/// config.trials tuples from a counter-based seeded stream and returns
/// Refuted or Inconclusive. Either way the result depends only on the config
/// fields other than `workers`, and a refutation carries the lexicographically
/// first violating tuple, re-minimised over smaller grids.
AuditResult run_property(const Property& property, const SearchConfig& config);

std::vector<AuditResult> run_suite(Suite suite, const SearchConfig& config);

AuditResult check_relation_property(RelationKind kind, RelationProperty prop,
                                    const SearchConfig& config);

/// Searches for a violation of meet-transitivity of a scalar measure. Never
/// returns Holds: exhausting the space without a violation is reported as
/// Inconclusive, since the claim ranges over all fuzzy sets, not just grid
/// points.
AuditResult find_transitivity_counterexample(ScalarMeasureId id,
                                             const SearchConfig& config);

}  // namespace lfuzzy::audit
