#include "lfuzzy/aggregation.hpp"

#include <utility>

#include "lfuzzy/errors.hpp"

namespace lfuzzy {

Partition::Partition(UniverseRef universe, std::vector<std::vector<std::string>> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  if (!universe_) throw DomainError("partition without a universe");
  if (blocks_.empty()) throw DomainError("partition must have at least one block");

  std::vector<bool> covered(universe_->size(), false);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const auto& block = blocks_[k];
    if (block.empty()) {
      throw DomainError("partition block " + std::to_string(k + 1) + " is empty");
    }
    std::vector<std::size_t> idx;
    idx.reserve(block.size());
    for (const auto& label : block) {
      auto u = universe_->index_of(label);
      if (!u) {
        throw DomainError("partition block " + std::to_string(k + 1) +
                          " names unknown element \"" + label + "\"");
      }
      if (covered[*u]) {
        throw DomainError("partition blocks overlap at element \"" + label + "\"");
      }
      covered[*u] = true;
      idx.push_back(*u);
    }
    indices_.push_back(std::move(idx));
    universes_.push_back(Universe::make(block));
  }
  for (std::size_t u = 0; u < covered.size(); ++u) {
    if (!covered[u]) {
      throw DomainError("partition misses element \"" + universe_->label(u) + "\"");
    }
  }
}

FuzzySet restrict_to_block(const FuzzySet& set, const Partition& partition,
                           std::size_t k) {
  require_same_universe(set.universe(), partition.universe(), "restrict_to_block");
  const auto& idx = partition.block_indices(k);
  std::vector<Rational> grades;
  grades.reserve(idx.size());
  for (std::size_t u : idx) grades.push_back(set.grade(u));
  return FuzzySet(partition.block_universe(k), std::move(grades));
}

AggregatedInclusion aggregate_incl(const FuzzySet& a, const FuzzySet& b,
                                   const Partition& partition, ScalarMeasureId id) {
  require_same_universe(a.universe(), partition.universe(), "aggregate_incl");
  require_same_universe(b.universe(), partition.universe(), "aggregate_incl");
  AggregatedInclusion out{id, {}};
  out.values.reserve(partition.block_count());
  for (std::size_t k = 0; k < partition.block_count(); ++k) {
    out.values.push_back(eval_scalar(id, restrict_to_block(a, partition, k),
                                     restrict_to_block(b, partition, k)));
  }
  return out;
}

}  // namespace lfuzzy
