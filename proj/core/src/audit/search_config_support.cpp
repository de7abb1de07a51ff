#include <charconv>
#include <cstdlib>

#include "lfuzzy/audit/result.hpp"
#include "lfuzzy/audit/search_config.hpp"
#include "lfuzzy/errors.hpp"

namespace lfuzzy::audit {

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::Exhaustive ? "exhaustive" : "random";
}

SearchMode search_mode_from_name(std::string_view name) {
  if (name == "exhaustive") return SearchMode::Exhaustive;
  if (name == "random") return SearchMode::Random;
  throw DomainError("unknown search mode: \"" + std::string(name) + "\"");
}

std::uint64_t SearchConfig::default_case_cap() {
  if (const char* env = std::getenv(kCaseCapEnvVar.data())) {
    std::string_view text(env);
    std::uint64_t cap = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc() && ptr == text.data() + text.size() && cap > 0) {
      return cap;
    }
  }
  return 100'000'000;
}

void SearchConfig::validate() const {
  if (universe_size == 0) throw DomainError("universe_size must be >= 1");
  if (grid_levels == 0) throw DomainError("grid_levels must be >= 1");
  if (mode == SearchMode::Random && trials == 0) {
    throw DomainError("random mode needs trials >= 1");
  }
  if (case_cap == 0) throw DomainError("case_cap must be >= 1");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace lfuzzy::audit
