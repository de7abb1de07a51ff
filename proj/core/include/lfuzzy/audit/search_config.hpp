#pragma once

#include <cstdint>
#include <string_view>

namespace lfuzzy::audit {

enum class SearchMode { Exhaustive, Random };

std::string_view to_string(SearchMode mode);
SearchMode search_mode_from_name(std::string_view name);

/// Environment variable overriding the exhaustive tuple cap.
inline constexpr std::string_view kCaseCapEnvVar = "LFUZZY_MAX_TRIPLES";

/// Where and how to search for counterexamples. Grades run over
/// {0, 1/g, ..., 1} with g = grid_levels; crisp quantifiers run over all
/// 2^universe_size bit vectors.
///
/// Results are a function of everything here except `workers`, which only
/// changes how the index space is split across threads.
struct SearchConfig {
  unsigned universe_size = 3;
  unsigned grid_levels = 4;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t trials = 100000;  // random mode only
  std::uint64_t seed = 0;
  unsigned workers = 1;           // 0 = hardware concurrency
  std::uint64_t case_cap = default_case_cap();

  /// 10^8 unless kCaseCapEnvVar holds a positive integer.
  static std::uint64_t default_case_cap();

  void validate() const;  // throws DomainError
};

}  // namespace lfuzzy::audit
