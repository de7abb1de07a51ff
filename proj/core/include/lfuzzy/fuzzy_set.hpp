#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfuzzy/rational.hpp"
#include "lfuzzy/universe.hpp"

namespace lfuzzy {

class CrispSet;

/// Fuzzy subset of a finite universe: one exact grade per element, in
/// universe coordinate order. Immutable after construction.
class FuzzySet {
 public:
  FuzzySet(UniverseRef universe, std::vector<Rational> grades);

  static FuzzySet uniform(UniverseRef universe, const Rational& grade);
  static FuzzySet empty_set(UniverseRef universe);      // all grades 0
  static FuzzySet universal_set(UniverseRef universe);  // all grades 1

  const UniverseRef& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return grades_.size(); }
  const Rational& grade(std::size_t u) const { return grades_[u]; }
  const std::vector<Rational>& grades() const noexcept { return grades_; }

  bool is_crisp() const;

  /// "[1/5, 3/10, 0, 9/10]"
  std::string str() const;

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    return same_universe(a.universe_, b.universe_) && a.grades_ == b.grades_;
  }

 private:
  UniverseRef universe_;
  std::vector<Rational> grades_;
};

/// Outcome of comparing two sets under the pointwise order. Equal wins when
/// both directions hold; LessEq and GreaterEq are strict in the other
/// direction.
enum class Comparison { LessEq, GreaterEq, Equal, Incomparable };

std::string_view to_string(Comparison c);

FuzzySet meet(const FuzzySet& a, const FuzzySet& b);
FuzzySet join(const FuzzySet& a, const FuzzySet& b);
FuzzySet complement(const FuzzySet& a);

Comparison compare(const FuzzySet& a, const FuzzySet& b);
/// Pointwise a <= b (not strict).
bool leq(const FuzzySet& a, const FuzzySet& b);
/// Pointwise a > b in every coordinate.
bool pointwise_greater(const FuzzySet& a, const FuzzySet& b);

/// Pointwise supremum / infimum of a nonempty family on one universe.
FuzzySet family_sup(std::span<const FuzzySet> sets);
FuzzySet family_inf(std::span<const FuzzySet> sets);

/// Crisp subset as a characteristic bit vector. Also the value type of the
/// lattice-valued relations: bit u reports whether the relation holds at
/// element u.
class CrispSet {
 public:
  CrispSet(UniverseRef universe, std::vector<std::uint8_t> bits);

  static CrispSet bottom(UniverseRef universe);
  static CrispSet top(UniverseRef universe);
  /// Requires every grade to be exactly 0 or 1; throws DomainError otherwise.
  static CrispSet from_fuzzy(const FuzzySet& set);
  /// Parses "1101" against the universe, one character per element.
  static CrispSet parse_bits(UniverseRef universe, std::string_view bits);

  FuzzySet to_fuzzy() const;

  const UniverseRef& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool bit(std::size_t u) const { return bits_[u] != 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  bool all() const;   // == top
  bool none() const;  // == bottom

  /// "1101"
  std::string bit_string() const;

  friend bool operator==(const CrispSet& a, const CrispSet& b) {
    return same_universe(a.universe_, b.universe_) && a.bits_ == b.bits_;
  }

 private:
  UniverseRef universe_;
  std::vector<std::uint8_t> bits_;
};

CrispSet meet(const CrispSet& a, const CrispSet& b);
CrispSet join(const CrispSet& a, const CrispSet& b);
CrispSet complement(const CrispSet& a);
Comparison compare(const CrispSet& a, const CrispSet& b);
bool leq(const CrispSet& a, const CrispSet& b);

}  // namespace lfuzzy
