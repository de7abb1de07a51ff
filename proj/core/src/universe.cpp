#include "lfuzzy/universe.hpp"

#include <unordered_set>
#include <utility>

#include "lfuzzy/errors.hpp"

namespace lfuzzy {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw DomainError("universe must not be empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw DomainError("universe label must not be empty");
    if (!seen.insert(l).second) {
      throw DomainError("duplicate universe label: \"" + l + "\"");
    }
  }
}

UniverseRef Universe::make(std::vector<std::string> labels) {
  return std::make_shared<const Universe>(std::move(labels));
}

UniverseRef Universe::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return make(std::move(labels));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

bool same_universe(const UniverseRef& a, const UniverseRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_universe(const UniverseRef& a, const UniverseRef& b,
                           std::string_view where) {
  if (!same_universe(a, b)) {
    throw DomainError(std::string(where) + ": operands live on different universes");
  }
}

}  // namespace lfuzzy
