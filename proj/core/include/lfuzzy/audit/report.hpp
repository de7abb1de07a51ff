#pragma once

#include <string>
#include <vector>

#include "lfuzzy/audit/axiom_grid.hpp"
#include "lfuzzy/audit/result.hpp"
#include "lfuzzy/audit/search_config.hpp"

namespace lfuzzy::audit {

/// Rendered outcome of an audit run. All renderings are deterministic
/// functions of the content: no timestamps, hostnames or worker counts, so
/// equal configs produce byte-identical reports.
struct Report {
  std::string title;
  SearchConfig config;
  std::vector<AuditResult> results;

  unsigned refuted_theorems() const;
  bool pass() const { return refuted_theorems() == 0; }

  std::string text() const;
  std::string json_text(int indent = 2) const;
};

std::string grid_text(const AxiomGrid& grid);
std::string grid_csv(const AxiomGrid& grid);
std::string grid_json_text(const AxiomGrid& grid, int indent = 2);

}  // namespace lfuzzy::audit
