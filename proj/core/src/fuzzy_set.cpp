#include "lfuzzy/fuzzy_set.hpp"

#include <utility>

#include "lfuzzy/errors.hpp"

namespace lfuzzy {

FuzzySet::FuzzySet(UniverseRef universe, std::vector<Rational> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
  if (!universe_) throw DomainError("fuzzy set without a universe");
  if (grades_.size() != universe_->size()) {
    throw DomainError("fuzzy set has " + std::to_string(grades_.size()) +
                      " grades for a universe of size " +
                      std::to_string(universe_->size()));
  }
}

FuzzySet FuzzySet::uniform(UniverseRef universe, const Rational& grade) {
  if (!universe) throw DomainError("fuzzy set without a universe");
  std::vector<Rational> grades(universe->size(), grade);
  return FuzzySet(std::move(universe), std::move(grades));
}

FuzzySet FuzzySet::empty_set(UniverseRef universe) {
  return uniform(std::move(universe), Rational::zero());
}

FuzzySet FuzzySet::universal_set(UniverseRef universe) {
  return uniform(std::move(universe), Rational::one());
}

bool FuzzySet::is_crisp() const {
  for (const auto& g : grades_) {
    if (!g.is_zero() && !g.is_one()) return false;
  }
  return true;
}

std::string FuzzySet::str() const {
  std::string out = "[";
  for (std::size_t u = 0; u < grades_.size(); ++u) {
    if (u) out += ", ";
    out += grades_[u].str();
  }
  out += "]";
  return out;
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::LessEq: return "less-equal";
    case Comparison::GreaterEq: return "greater-equal";
    case Comparison::Equal: return "equal";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

namespace {

template <typename Op>
FuzzySet pointwise(const FuzzySet& a, const FuzzySet& b, Op op, std::string_view where) {
  require_same_universe(a.universe(), b.universe(), where);
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t u = 0; u < a.size(); ++u) out.push_back(op(a.grade(u), b.grade(u)));
  return FuzzySet(a.universe(), std::move(out));
}

}  // namespace

FuzzySet meet(const FuzzySet& a, const FuzzySet& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return min(x, y); },
                   "meet");
}

FuzzySet join(const FuzzySet& a, const FuzzySet& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return max(x, y); },
                   "join");
}

FuzzySet complement(const FuzzySet& a) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t u = 0; u < a.size(); ++u) out.push_back(a.grade(u).complement());
  return FuzzySet(a.universe(), std::move(out));
}

Comparison compare(const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(a.universe(), b.universe(), "compare");
  bool le = true, ge = true;
  for (std::size_t u = 0; u < a.size(); ++u) {
    auto c = a.grade(u) <=> b.grade(u);
    if (c == std::strong_ordering::less) ge = false;
    else if (c == std::strong_ordering::greater) le = false;
    if (!le && !ge) return Comparison::Incomparable;
  }
  if (le && ge) return Comparison::Equal;
  return le ? Comparison::LessEq : Comparison::GreaterEq;
}

bool leq(const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(a.universe(), b.universe(), "leq");
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (b.grade(u) < a.grade(u)) return false;
  }
  return true;
}

bool pointwise_greater(const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(a.universe(), b.universe(), "pointwise_greater");
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a.grade(u) <= b.grade(u)) return false;
  }
  return true;
}

namespace {

template <typename Fold>
FuzzySet family_fold(std::span<const FuzzySet> sets, Fold fold, std::string_view where) {
  if (sets.empty()) throw DomainError(std::string(where) + ": empty family");
  FuzzySet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = fold(acc, sets[i]);
  return acc;
}

}  // namespace

FuzzySet family_sup(std::span<const FuzzySet> sets) {
  return family_fold(sets, [](const FuzzySet& a, const FuzzySet& b) { return join(a, b); },
                     "family_sup");
}

FuzzySet family_inf(std::span<const FuzzySet> sets) {
  return family_fold(sets, [](const FuzzySet& a, const FuzzySet& b) { return meet(a, b); },
                     "family_inf");
}

CrispSet::CrispSet(UniverseRef universe, std::vector<std::uint8_t> bits)
    : universe_(std::move(universe)), bits_(std::move(bits)) {
  if (!universe_) throw DomainError("crisp set without a universe");
  if (bits_.size() != universe_->size()) {
    throw DomainError("crisp set has " + std::to_string(bits_.size()) +
                      " bits for a universe of size " +
                      std::to_string(universe_->size()));
  }
  for (auto& b : bits_) b = b ? 1 : 0;
}

CrispSet CrispSet::bottom(UniverseRef universe) {
  std::vector<std::uint8_t> bits(universe->size(), 0);
  return CrispSet(std::move(universe), std::move(bits));
}

CrispSet CrispSet::top(UniverseRef universe) {
  std::vector<std::uint8_t> bits(universe->size(), 1);
  return CrispSet(std::move(universe), std::move(bits));
}

CrispSet CrispSet::from_fuzzy(const FuzzySet& set) {
  std::vector<std::uint8_t> bits;
  bits.reserve(set.size());
  for (std::size_t u = 0; u < set.size(); ++u) {
    const Rational& g = set.grade(u);
    if (g.is_zero()) bits.push_back(0);
    else if (g.is_one()) bits.push_back(1);
    else {
      throw DomainError("set is not crisp at element \"" +
                        set.universe()->label(u) + "\" (grade " + g.str() + ")");
    }
  }
  return CrispSet(set.universe(), std::move(bits));
}

CrispSet CrispSet::parse_bits(UniverseRef universe, std::string_view bits) {
  if (bits.size() != universe->size()) {
    throw ParseError("bit string \"" + std::string(bits) + "\" has " +
                     std::to_string(bits.size()) + " bits for a universe of size " +
                     std::to_string(universe->size()));
  }
  std::vector<std::uint8_t> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c == '0') out.push_back(0);
    else if (c == '1') out.push_back(1);
    else throw ParseError("bit string \"" + std::string(bits) + "\" contains '" +
                          std::string(1, c) + "'");
  }
  return CrispSet(std::move(universe), std::move(out));
}

FuzzySet CrispSet::to_fuzzy() const {
  std::vector<Rational> grades;
  grades.reserve(bits_.size());
  for (auto b : bits_) grades.push_back(b ? Rational::one() : Rational::zero());
  return FuzzySet(universe_, std::move(grades));
}

bool CrispSet::all() const {
  for (auto b : bits_) {
    if (!b) return false;
  }
  return true;
}

bool CrispSet::none() const {
  for (auto b : bits_) {
    if (b) return false;
  }
  return true;
}

std::string CrispSet::bit_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out += b ? '1' : '0';
  return out;
}

namespace {

template <typename Op>
CrispSet pointwise_bits(const CrispSet& a, const CrispSet& b, Op op,
                        std::string_view where) {
  require_same_universe(a.universe(), b.universe(), where);
  std::vector<std::uint8_t> out;
  out.reserve(a.size());
  for (std::size_t u = 0; u < a.size(); ++u) {
    out.push_back(op(a.bits()[u], b.bits()[u]));
  }
  return CrispSet(a.universe(), std::move(out));
}

}  // namespace

CrispSet meet(const CrispSet& a, const CrispSet& b) {
  return pointwise_bits(
      a, b, [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x & y; }, "meet");
}

CrispSet join(const CrispSet& a, const CrispSet& b) {
  return pointwise_bits(
      a, b, [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x | y; }, "join");
}

CrispSet complement(const CrispSet& a) {
  std::vector<std::uint8_t> out;
  out.reserve(a.size());
  for (auto b : a.bits()) out.push_back(b ? 0 : 1);
  return CrispSet(a.universe(), std::move(out));
}

Comparison compare(const CrispSet& a, const CrispSet& b) {
  require_same_universe(a.universe(), b.universe(), "compare");
  bool le = true, ge = true;
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a.bits()[u] < b.bits()[u]) ge = false;
    if (a.bits()[u] > b.bits()[u]) le = false;
  }
  if (le && ge) return Comparison::Equal;
  if (le) return Comparison::LessEq;
  if (ge) return Comparison::GreaterEq;
  return Comparison::Incomparable;
}

bool leq(const CrispSet& a, const CrispSet& b) {
  require_same_universe(a.universe(), b.universe(), "leq");
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a.bits()[u] > b.bits()[u]) return false;
  }
  return true;
}

}  // namespace lfuzzy
