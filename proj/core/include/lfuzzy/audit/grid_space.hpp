#pragma once

#include <cstdint>

#include "lfuzzy/fuzzy_set.hpp"

namespace lfuzzy::audit {

/// Enumeration of the fuzzy sets with grades in {0, 1/g, ..., 1} over the
/// numbered universe {1..n}, and of the crisp sets over the same universe.
///
/// Sets are indexed in base (g+1) with element 1 as the most significant
/// digit, so index order is lexicographic in the grade tuple. Crisp sets are
/// indexed the same way in base 2.
class GridSpace {
 public:
  GridSpace(unsigned universe_size, unsigned grid_levels);

  const UniverseRef& universe() const noexcept { return universe_; }
  unsigned universe_size() const noexcept { return n_; }
  unsigned grid_levels() const noexcept { return g_; }

  std::uint64_t set_count() const noexcept { return set_count_; }    // (g+1)^n
  std::uint64_t crisp_count() const noexcept { return crisp_count_; }  // 2^n

  FuzzySet set_at(std::uint64_t index) const;
  CrispSet crisp_at(std::uint64_t index) const;

  const Rational& level(unsigned k) const { return levels_[k]; }  // k/g

 private:
  unsigned n_;
  unsigned g_;
  UniverseRef universe_;
  std::vector<Rational> levels_;
  std::uint64_t set_count_;
  std::uint64_t crisp_count_;
};

}  // namespace lfuzzy::audit
