#include "lfuzzy/audit/grid_space.hpp"

#include "lfuzzy/errors.hpp"

namespace lfuzzy::audit {

GridSpace::GridSpace(unsigned universe_size, unsigned grid_levels)
    : n_(universe_size), g_(grid_levels) {
  if (n_ == 0) throw DomainError("grid universe size must be >= 1");
  if (g_ == 0) throw DomainError("grid levels must be >= 1");
  universe_ = Universe::numbered(n_);
  levels_.reserve(g_ + 1);
  for (unsigned k = 0; k <= g_; ++k) {
    levels_.emplace_back(static_cast<long long>(k), static_cast<long long>(g_));
  }
  // (g+1)^n can overflow 64 bits long before any search is feasible
  auto pow_checked = [](std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
      if (out > UINT64_MAX / base) throw DomainError("grid too large to index");
      out *= base;
    }
    return out;
  };
  set_count_ = pow_checked(g_ + 1, n_);
  crisp_count_ = pow_checked(2, n_);
}

FuzzySet GridSpace::set_at(std::uint64_t index) const {
  std::vector<Rational> grades(n_, Rational::zero());
  for (unsigned u = n_; u-- > 0;) {
    grades[u] = levels_[index % (g_ + 1)];
    index /= g_ + 1;
  }
  return FuzzySet(universe_, std::move(grades));
}

CrispSet GridSpace::crisp_at(std::uint64_t index) const {
  std::vector<std::uint8_t> bits(n_, 0);
  for (unsigned u = n_; u-- > 0;) {
    bits[u] = index & 1;
    index >>= 1;
  }
  return CrispSet(universe_, std::move(bits));
}

}  // namespace lfuzzy::audit
