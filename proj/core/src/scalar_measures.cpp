#include "lfuzzy/scalar_measures.hpp"

#include <array>
#include <charconv>

#include "lfuzzy/errors.hpp"

namespace lfuzzy {

namespace {

struct MeasureInfo {
  std::string_view mnemonic;
  std::string_view formula;
};

constexpr std::array<MeasureInfo, 12> kMeasures = {{
    {"kosko", "|A∧B| / |A|"},
    {"join-ratio", "|B| / |A∨B|"},
    {"co-kosko", "|A′∧B′| / |B′|"},
    {"co-join-ratio", "|A′| / |A′∨B′|"},
    {"implication-ratio", "|A′∨B| / |A′∨A∨B∨B′|"},
    {"fuzziness-ratio", "|A′∧A∧B∧B′| / |A∧B′|"},
    {"implication-ratio-outer", "(|A′| ∨ |B|) / |A′∨A∨B∨B′|"},
    {"fuzziness-ratio-outer", "|A′∧A∧B∧B′| / (|A| ∧ |B′|)"},
    {"lukasiewicz", "Σ min(1, 1−A(u)+B(u)) / |U|"},
    {"kleene-dienes", "Σ max(1−A(u), B(u)) / |U|"},
    {"reichenbach", "Σ (1−A(u)+A(u)·B(u)) / |U|"},
    {"kundu", "sup{α : min(A,α) ≤ min(B,α) pointwise}"},
}};

const BigRational& br_min(const BigRational& x, const BigRational& y) {
  return y < x ? y : x;
}

const BigRational& br_max(const BigRational& x, const BigRational& y) {
  return x < y ? y : x;
}

/// Ratio with the totalising convention: 0/0-style denominators yield 1, and
/// anything outside [0,1] is clamped. Both events set the degenerate flag.
ScalarValue ratio(const BigRational& num, const BigRational& den) {
  if (den.is_zero()) return {Rational::one(), true};
  BigRational v = num / den;
  if (v < 0) return {Rational::zero(), true};
  if (v > 1) return {Rational::one(), true};
  return {Rational(std::move(v)), false};
}

}  // namespace

ScalarMeasureId ScalarMeasureId::from_index(int index) {
  if (index < 1 || index > 12) {
    throw DomainError("scalar measure index must be 1..12, got " +
                      std::to_string(index));
  }
  return ScalarMeasureId(index);
}

ScalarMeasureId ScalarMeasureId::from_text(std::string_view text) {
  int idx = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), idx);
  if (ec == std::errc() && ptr == text.data() + text.size()) {
    return from_index(idx);
  }
  for (std::size_t i = 0; i < kMeasures.size(); ++i) {
    if (kMeasures[i].mnemonic == text) return ScalarMeasureId(static_cast<int>(i) + 1);
  }
  throw DomainError("unknown scalar measure: \"" + std::string(text) + "\"");
}

std::span<const ScalarMeasureId> ScalarMeasureId::all() {
  static const std::array<ScalarMeasureId, 12> ids = {
      ScalarMeasureId(1),  ScalarMeasureId(2),  ScalarMeasureId(3),
      ScalarMeasureId(4),  ScalarMeasureId(5),  ScalarMeasureId(6),
      ScalarMeasureId(7),  ScalarMeasureId(8),  ScalarMeasureId(9),
      ScalarMeasureId(10), ScalarMeasureId(11), ScalarMeasureId(12)};
  return ids;
}

std::string_view ScalarMeasureId::mnemonic() const {
  return kMeasures[static_cast<std::size_t>(index_ - 1)].mnemonic;
}

std::string_view ScalarMeasureId::formula() const {
  return kMeasures[static_cast<std::size_t>(index_ - 1)].formula;
}

BigRational cardinality(const FuzzySet& a) {
  BigRational sum = 0;
  for (const auto& g : a.grades()) sum += g.value();
  return sum;
}

ScalarValue eval_scalar(ScalarMeasureId id, const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(a.universe(), b.universe(), "eval_scalar");
  const std::size_t n = a.size();

  // Per-element shorthands; everything below is an exact rational sum.
  auto av = [&](std::size_t u) -> const BigRational& { return a.grade(u).value(); };
  auto bv = [&](std::size_t u) -> const BigRational& { return b.grade(u).value(); };
  auto sum = [&](auto term) {
    BigRational s = 0;
    for (std::size_t u = 0; u < n; ++u) s += term(u);
    return s;
  };
  const BigRational one = 1;

  switch (id.index()) {
    case 1:
      return ratio(sum([&](std::size_t u) { return br_min(av(u), bv(u)); }),
                   cardinality(a));
    case 2:
      return ratio(cardinality(b),
                   sum([&](std::size_t u) { return br_max(av(u), bv(u)); }));
    case 3:
      return ratio(sum([&](std::size_t u) { return br_min(one - av(u), one - bv(u)); }),
                   sum([&](std::size_t u) { return one - bv(u); }));
    case 4:
      return ratio(sum([&](std::size_t u) { return one - av(u); }),
                   sum([&](std::size_t u) { return br_max(one - av(u), one - bv(u)); }));
    case 5:
      return ratio(
          sum([&](std::size_t u) { return br_max(one - av(u), bv(u)); }),
          sum([&](std::size_t u) {
            return br_max(br_max(av(u), one - av(u)), br_max(bv(u), one - bv(u)));
          }));
    case 6:
      return ratio(
          sum([&](std::size_t u) {
            return br_min(br_min(av(u), one - av(u)), br_min(bv(u), one - bv(u)));
          }),
          sum([&](std::size_t u) { return br_min(av(u), one - bv(u)); }));
    case 7:
      return ratio(
          br_max(sum([&](std::size_t u) { return one - av(u); }), cardinality(b)),
          sum([&](std::size_t u) {
            return br_max(br_max(av(u), one - av(u)), br_max(bv(u), one - bv(u)));
          }));
    case 8:
      return ratio(
          sum([&](std::size_t u) {
            return br_min(br_min(av(u), one - av(u)), br_min(bv(u), one - bv(u)));
          }),
          br_min(cardinality(a), sum([&](std::size_t u) { return one - bv(u); })));
    case 9:
      return ratio(sum([&](std::size_t u) { return br_min(one, one - av(u) + bv(u)); }),
                   BigRational(n));
    case 10:
      return ratio(sum([&](std::size_t u) { return br_max(one - av(u), bv(u)); }),
                   BigRational(n));
    case 11:
      return ratio(sum([&](std::size_t u) { return one - av(u) + av(u) * bv(u); }),
                   BigRational(n));
    case 12:
      return kundu_closed(a, b);
  }
  throw DomainError("unknown scalar measure index");
}

ScalarValue kundu_closed(const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(a.universe(), b.universe(), "kundu_closed");
  // The constraint min(a,alpha) <= min(b,alpha) only bites where a(u) > b(u),
  // where it forces alpha <= b(u); the supremum is attained.
  bool violated = false;
  Rational bound = Rational::one();
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a.grade(u) > b.grade(u)) {
      violated = true;
      bound = min(bound, b.grade(u));
    }
  }
  return {violated ? bound : Rational::one(), false};
}

ScalarValue kundu_oracle(const FuzzySet& a, const FuzzySet& b, unsigned grid_levels) {
  require_same_universe(a.universe(), b.universe(), "kundu_oracle");
  if (grid_levels == 0) throw DomainError("kundu_oracle needs grid_levels >= 1");
  for (unsigned level = grid_levels + 1; level-- > 0;) {
    Rational alpha(static_cast<long long>(level), static_cast<long long>(grid_levels));
    bool ok = true;
    for (std::size_t u = 0; u < a.size() && ok; ++u) {
      ok = min(a.grade(u), alpha) <= min(b.grade(u), alpha);
    }
    if (ok) return {alpha, false};
  }
  return {Rational::zero(), false};  // alpha = 0 always satisfies the constraint
}

}  // namespace lfuzzy
