#pragma once

#include <span>
#include <string_view>

#include "lfuzzy/fuzzy_set.hpp"
#include "lfuzzy/rational.hpp"

namespace lfuzzy {

/// Identifier for one of the twelve scalar inclusion measures. Valid indices
/// are 1..12; construction through the factories cannot produce anything else.
class ScalarMeasureId {
 public:
  static ScalarMeasureId from_index(int index);
  /// Accepts a decimal index or a mnemonic such as "kosko" or "kundu".
  static ScalarMeasureId from_text(std::string_view text);
  static std::span<const ScalarMeasureId> all();

  int index() const noexcept { return index_; }
  std::string_view mnemonic() const;
  /// Human-readable defining formula, for reports and help text.
  std::string_view formula() const;

  friend bool operator==(ScalarMeasureId, ScalarMeasureId) = default;

 private:
  explicit ScalarMeasureId(int index) : index_(index) {}
  int index_;
};

/// Result of a scalar measure. `degenerate` is set when a totalising
/// convention fired: a zero denominator (reported as 1) or an out-of-range
/// result clamped back into [0,1].
struct ScalarValue {
  Rational value;
  bool degenerate = false;

  friend bool operator==(const ScalarValue&, const ScalarValue&) = default;
};

/// Sigma-count: the sum of all grades.
BigRational cardinality(const FuzzySet& a);

/// Degree to which a is included in b under the chosen measure.
ScalarValue eval_scalar(ScalarMeasureId id, const FuzzySet& a, const FuzzySet& b);

/// Closed form of the Kundu measure: 1 when a <= b, otherwise the least b(u)
/// over the coordinates where a(u) > b(u).
ScalarValue kundu_closed(const FuzzySet& a, const FuzzySet& b);

/// Reference evaluation of the Kundu measure by scanning candidate thresholds
/// alpha in {0, 1/g, ..., 1} from above. Agrees with kundu_closed whenever all
/// grades of b lie on the same grid.
ScalarValue kundu_oracle(const FuzzySet& a, const FuzzySet& b, unsigned grid_levels);

}  // namespace lfuzzy
