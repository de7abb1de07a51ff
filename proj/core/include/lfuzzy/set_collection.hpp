#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lfuzzy/aggregation.hpp"
#include "lfuzzy/fuzzy_set.hpp"
#include "lfuzzy/universe.hpp"

namespace lfuzzy {

/// Named fuzzy sets over one universe, as read from a set file:
///   {"universe": ["1","2"], "sets": {"A": ["0.2","1/3"], ...}}
/// Grades are decimal or fraction strings and parse exactly. File order of
/// the sets is preserved.
class SetCollection {
 public:
  SetCollection(UniverseRef universe,
                std::vector<std::pair<std::string, FuzzySet>> sets);

  static SetCollection from_json_text(std::string_view text);
  static SetCollection load(const std::string& path);

  const UniverseRef& universe() const noexcept { return universe_; }
  const std::vector<std::pair<std::string, FuzzySet>>& sets() const noexcept {
    return sets_;
  }
  bool contains(std::string_view name) const;
  /// Throws DomainError naming the missing set.
  const FuzzySet& at(std::string_view name) const;

  std::string to_json_text(int indent = 2) const;

 private:
  UniverseRef universe_;
  std::vector<std::pair<std::string, FuzzySet>> sets_;
};

/// Reads a partition file ({"blocks": [["1","2"],["3"]]}) against a universe.
Partition partition_from_json_text(std::string_view text, UniverseRef universe);
Partition load_partition(const std::string& path, UniverseRef universe);

}  // namespace lfuzzy
