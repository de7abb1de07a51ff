#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lfuzzy/fuzzy_set.hpp"
#include "lfuzzy/scalar_measures.hpp"
#include "lfuzzy/universe.hpp"

namespace lfuzzy {

/// Partition of a universe into nonempty, disjoint, covering blocks. Block
/// order and the label order inside each block are fixed at construction and
/// determine the order of aggregated results.
class Partition {
 public:
  Partition(UniverseRef universe, std::vector<std::vector<std::string>> blocks);

  const UniverseRef& universe() const noexcept { return universe_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::string>& block_labels(std::size_t k) const {
    return blocks_[k];
  }
  const std::vector<std::size_t>& block_indices(std::size_t k) const {
    return indices_[k];
  }
  /// Universe whose elements are exactly block k, in block order.
  const UniverseRef& block_universe(std::size_t k) const { return universes_[k]; }

 private:
  UniverseRef universe_;
  std::vector<std::vector<std::string>> blocks_;
  std::vector<std::vector<std::size_t>> indices_;
  std::vector<UniverseRef> universes_;
};

/// Restriction of a set to the elements of block k, on the block universe.
FuzzySet restrict_to_block(const FuzzySet& set, const Partition& partition,
                           std::size_t k);

/// One scalar verdict per partition block: the measure applied to the
/// restrictions of a and b. Depends only on grades inside each block.
struct AggregatedInclusion {
  ScalarMeasureId measure;
  std::vector<ScalarValue> values;  // one per block, in block order
};

AggregatedInclusion aggregate_incl(const FuzzySet& a, const FuzzySet& b,
                                   const Partition& partition, ScalarMeasureId id);

}  // namespace lfuzzy
