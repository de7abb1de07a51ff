#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lfuzzy {

/// Finite ordered universe of discourse. The label order fixed at
/// construction is the coordinate order of every set over the universe.
class Universe {
 public:
  /// Labels must be nonempty, distinct strings.
  explicit Universe(std::vector<std::string> labels);

  static std::shared_ptr<const Universe> make(std::vector<std::string> labels);
  /// Universe labelled "1", "2", ..., "n".
  static std::shared_ptr<const Universe> numbered(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t u) const { return labels_.at(u); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

using UniverseRef = std::shared_ptr<const Universe>;

/// True when the two refs denote equal universes (same labels in order).
bool same_universe(const UniverseRef& a, const UniverseRef& b);

/// Throws DomainError naming `where` unless the universes agree.
void require_same_universe(const UniverseRef& a, const UniverseRef& b,
                           std::string_view where);

}  // namespace lfuzzy
