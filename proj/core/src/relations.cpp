#include "lfuzzy/relations.hpp"

#include "lfuzzy/errors.hpp"

namespace lfuzzy {

namespace {

template <typename Pred>
RelationValue pointwise_relation(const FuzzySet& a, const FuzzySet& b, Pred pred,
                                 std::string_view where) {
  require_same_universe(a.universe(), b.universe(), where);
  std::vector<std::uint8_t> bits;
  bits.reserve(a.size());
  for (std::size_t u = 0; u < a.size(); ++u) {
    bits.push_back(pred(a.grade(u), b.grade(u)) ? 1 : 0);
  }
  return RelationValue(a.universe(), std::move(bits));
}

}  // namespace

RelationValue incl(const FuzzySet& a, const FuzzySet& b) {
  return pointwise_relation(
      a, b, [](const Rational& x, const Rational& y) { return x <= y; }, "incl");
}

RelationValue sim(const FuzzySet& a, const FuzzySet& b) {
  return pointwise_relation(
      a, b, [](const Rational& x, const Rational& y) { return x == y; }, "sim");
}

RelationValue dist(const FuzzySet& a, const FuzzySet& b) {
  return pointwise_relation(
      a, b, [](const Rational& x, const Rational& y) { return x != y; }, "dist");
}

bool cut_leq(const FuzzySet& a, const FuzzySet& b, const CrispSet& theta) {
  require_same_universe(a.universe(), theta.universe(), "cut_leq");
  return leq(theta, incl(a, b));
}

bool order_between(const FuzzySet& a, const FuzzySet& b, const FuzzySet& c) {
  return leq(meet(a, c), b) && leq(b, join(a, c));
}

bool metric_between(const FuzzySet& a, const FuzzySet& b, const FuzzySet& c) {
  return dist(a, c) == join(dist(a, b), dist(b, c));
}

CrispSet crisp_symmetric_difference(const CrispSet& theta, const CrispSet& phi) {
  return join(meet(complement(theta), phi), meet(theta, complement(phi)));
}

}  // namespace lfuzzy
