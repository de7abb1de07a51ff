#pragma once

#include "lfuzzy/fuzzy_set.hpp"

namespace lfuzzy {

/// Lattice-valued verdict of a relation between two fuzzy sets: one bit per
/// universe element.
using RelationValue = CrispSet;

/// Inclusion: bit u is 1 iff A(u) <= B(u).
RelationValue incl(const FuzzySet& a, const FuzzySet& b);

/// Similarity: bit u is 1 iff A(u) == B(u). Equals incl(a,b) meet incl(b,a).
RelationValue sim(const FuzzySet& a, const FuzzySet& b);

/// Distance: bit u is 1 iff A(u) != B(u). Complement of sim.
RelationValue dist(const FuzzySet& a, const FuzzySet& b);

/// Cut order at threshold theta: a <= b holds iff incl(a,b) >= theta.
/// For each fixed theta this is a preorder (reflexive and transitive).
bool cut_leq(const FuzzySet& a, const FuzzySet& b, const CrispSet& theta);

/// b lies between a and c in the lattice order: meet(a,c) <= b <= join(a,c).
bool order_between(const FuzzySet& a, const FuzzySet& b, const FuzzySet& c);

/// b lies between a and c metrically: dist(a,c) == dist(a,b) join dist(b,c).
bool metric_between(const FuzzySet& a, const FuzzySet& b, const FuzzySet& c);

/// (theta' meet phi) join (theta meet phi'). For crisp arguments this equals
/// dist on their fuzzy embeddings.
CrispSet crisp_symmetric_difference(const CrispSet& theta, const CrispSet& phi);

}  // namespace lfuzzy
