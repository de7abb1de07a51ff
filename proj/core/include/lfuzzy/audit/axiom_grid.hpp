#pragma once

#include <span>
#include <string>
#include <vector>

#include "lfuzzy/audit/result.hpp"
#include "lfuzzy/audit/search_config.hpp"

namespace lfuzzy::audit {

/// Column ids of the scalar axiom grid: i1, i2a, i2b, i3, i4a, i4b, i5a,
/// i5b, i6, i7, i8, i9, i10, and-transitive.
std::span<const std::string_view> axiom_column_ids();

struct AxiomGridRow {
  std::string label;  // "m1".."m12" or "I"
  std::string mnemonic;
  std::vector<AuditResult> cells;  // one per column
};

/// Verdict of every axiom for every scalar measure, plus a final row for the
/// lattice-valued inclusion, each cell backed by a full audit result.
struct AxiomGrid {
  SearchConfig config;
  std::vector<AxiomGridRow> rows;
};

AxiomGrid scalar_axiom_grid(const SearchConfig& config);

}  // namespace lfuzzy::audit
