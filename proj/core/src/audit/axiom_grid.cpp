#include "lfuzzy/audit/axiom_grid.hpp"

#include <array>

#include "lfuzzy/audit/engine.hpp"

namespace lfuzzy::audit {

std::span<const std::string_view> axiom_column_ids() {
  static constexpr std::array<std::string_view, 14> columns = {
      "i1", "i2a", "i2b", "i3", "i4a", "i4b", "i5a",
      "i5b", "i6", "i7", "i8", "i9", "i10", "and-transitive"};
  return columns;
}

AxiomGrid scalar_axiom_grid(const SearchConfig& config) {
  AxiomGrid grid;
  grid.config = config;
  for (ScalarMeasureId id : ScalarMeasureId::all()) {
    AxiomGridRow row;
    row.label = "m" + std::to_string(id.index());
    row.mnemonic = id.mnemonic();
    for (std::string_view axiom : axiom_column_ids()) {
      row.cells.push_back(run_property(scalar_axiom_property(id, axiom), config));
    }
    grid.rows.push_back(std::move(row));
  }
  AxiomGridRow vector_row;
  vector_row.label = "I";
  vector_row.mnemonic = "lattice-valued";
  for (std::string_view axiom : axiom_column_ids()) {
    vector_row.cells.push_back(run_property(vector_axiom_property(axiom), config));
  }
  grid.rows.push_back(std::move(vector_row));
  return grid;
}

}  // namespace lfuzzy::audit
