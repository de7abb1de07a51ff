#include "lfuzzy/audit/properties.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "lfuzzy/errors.hpp"
#include "lfuzzy/relations.hpp"

namespace lfuzzy::audit {

namespace {

using FS = std::span<const FuzzySet>;
using CS = std::span<const CrispSet>;
using CheckFn = std::function<bool(FS, CS, std::string*)>;
using ReshapeFn = std::function<void(std::vector<FuzzySet>&, std::vector<CrispSet>&)>;

Property make(std::string id, bool theorem, std::vector<std::string> roles,
              unsigned fuzzy_arity, unsigned crisp_arity, CheckFn check,
              ReshapeFn reshape = {}) {
  Property p;
  p.id = std::move(id);
  p.theorem = theorem;
  p.roles = std::move(roles);
  p.fuzzy_arity = fuzzy_arity;
  p.crisp_arity = crisp_arity;
  p.check = std::move(check);
  p.reshape = std::move(reshape);
  return p;
}

void note_out(std::string* note, std::string text) {
  if (note) *note = std::move(text);
}

bool all_half(const FuzzySet& a) {
  return std::ranges::all_of(a.grades(),
                             [](const Rational& g) { return g == Rational::half(); });
}

bool none_half(const FuzzySet& a) {
  return std::ranges::none_of(a.grades(),
                              [](const Rational& g) { return g == Rational::half(); });
}

bool all_above_half(const FuzzySet& a) {
  return std::ranges::all_of(a.grades(),
                             [](const Rational& g) { return g > Rational::half(); });
}

bool all_at_least_half(const FuzzySet& a) {
  return std::ranges::all_of(a.grades(),
                             [](const Rational& g) { return g >= Rational::half(); });
}

// Random-mode reshapes. Each one maps the drawn tuple to another tuple of the
// same domain on which the claim's hypothesis holds (or is likelier to hold),
// so conditional claims are not tested vacuously all the time.

// sorts grades pointwise so that f[i0] <= f[i1] <= f[i2]
ReshapeFn chain3(std::size_t i0, std::size_t i1, std::size_t i2) {
  return [i0, i1, i2](std::vector<FuzzySet>& f, std::vector<CrispSet>&) {
    const auto& universe = f[0].universe();
    const std::size_t n = f[0].size();
    std::vector<Rational> lo, mid, hi;
    lo.reserve(n), mid.reserve(n), hi.reserve(n);
    for (std::size_t u = 0; u < n; ++u) {
      std::array<Rational, 3> g = {f[i0].grade(u), f[i1].grade(u), f[i2].grade(u)};
      std::sort(g.begin(), g.end());
      lo.push_back(g[0]), mid.push_back(g[1]), hi.push_back(g[2]);
    }
    f[i0] = FuzzySet(universe, std::move(lo));
    f[i1] = FuzzySet(universe, std::move(mid));
    f[i2] = FuzzySet(universe, std::move(hi));
  };
}

// forces f[lo] <= f[hi] by meeting f[lo] into f[hi]
ReshapeFn pair_below(std::size_t lo, std::size_t hi) {
  return [lo, hi](std::vector<FuzzySet>& f, std::vector<CrispSet>&) {
    f[lo] = meet(f[lo], f[hi]);
  };
}

// forces every grade of f[i] to at least 1/2
ReshapeFn lift_above_half(std::size_t i) {
  return [i](std::vector<FuzzySet>& f, std::vector<CrispSet>&) {
    f[i] = join(f[i], complement(f[i]));
  };
}

std::vector<Property> inclusion_suite() {
  std::vector<Property> out;

  out.push_back(make("I1", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string* note) {
    RelationValue x = incl(f[0], f[1]);
    if (x.all() != leq(f[0], f[1])) {
      note_out(note, "top clause failed");
      return false;
    }
    if (x.none() != pointwise_greater(f[0], f[1])) {
      note_out(note, "bottom clause failed");
      return false;
    }
    return true;
  }));

  out.push_back(make("I2", true, {"A"}, 1, 0, [](FS f, CS, std::string*) {
    return incl(f[0], complement(f[0])).none() == all_above_half(f[0]);
  }));

  out.push_back(make("I3", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
    return incl(f[0], f[1]) == incl(complement(f[1]), complement(f[0]));
  }));

  out.push_back(make("I4", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
    return join(incl(f[0], f[1]), incl(f[1], f[0])).all();
  }));

  out.push_back(make(
      "I5", true, {"A", "B", "C"}, 3, 0,
      [](FS f, CS, std::string*) {
        if (!leq(f[1], f[2])) return true;
        return leq(incl(f[0], f[1]), incl(f[0], f[2]));
      },
      pair_below(1, 2)));

  out.push_back(make(
      "I6", true, {"A", "B", "C"}, 3, 0,
      [](FS f, CS, std::string*) {
        if (!leq(f[1], f[2])) return true;
        return leq(incl(f[2], f[0]), incl(f[1], f[0]));
      },
      pair_below(1, 2)));

  out.push_back(make("I7", true, {"A", "B", "C", "D"}, 4, 0,
                     [](FS f, CS, std::string* note) {
                       const auto& [a, b, c, d] = std::tie(f[0], f[1], f[2], f[3]);
                       RelationValue lower = meet(incl(a, b), incl(c, d));
                       RelationValue im = incl(meet(a, c), meet(b, d));
                       RelationValue ij = incl(join(a, c), join(b, d));
                       RelationValue upper = join(incl(a, b), incl(c, d));
                       if (!leq(lower, meet(im, ij))) {
                         note_out(note, "lower bound failed");
                         return false;
                       }
                       if (!leq(join(im, ij), upper)) {
                         note_out(note, "upper bound failed");
                         return false;
                       }
                       return true;
                     }));

  out.push_back(make("I8", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    return incl(join(f[0], f[1]), f[2]) == meet(incl(f[0], f[2]), incl(f[1], f[2]));
  }));

  out.push_back(make("I9", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    return incl(meet(f[0], f[1]), f[2]) == join(incl(f[0], f[2]), incl(f[1], f[2]));
  }));

  out.push_back(make("I10", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    return incl(f[0], join(f[1], f[2])) == join(incl(f[0], f[1]), incl(f[0], f[2]));
  }));

  out.push_back(make("I11", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    return incl(f[0], meet(f[1], f[2])) == meet(incl(f[0], f[1]), incl(f[0], f[2]));
  }));

  out.push_back(make("I12", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    const auto& [a, b, c] = std::tie(f[0], f[1], f[2]);
    return leq(incl(a, b),
               meet(incl(meet(a, c), meet(b, c)), incl(join(a, c), join(b, c))));
  }));

  return out;
}

std::vector<Property> similarity_suite() {
  std::vector<Property> out;

  out.push_back(make("S1", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string* note) {
    RelationValue x = sim(f[0], f[1]);
    if (x.all() != (f[0] == f[1])) {
      note_out(note, "top clause failed");
      return false;
    }
    if (x.none() && f[0] == f[1]) {
      note_out(note, "bottom clause failed");
      return false;
    }
    return true;
  }));

  out.push_back(make("S2a", true, {"A"}, 1, 0, [](FS f, CS, std::string*) {
    return sim(f[0], complement(f[0])).none() == none_half(f[0]);
  }));

  out.push_back(make("S2b", true, {"A"}, 1, 0, [](FS f, CS, std::string*) {
    return sim(f[0], complement(f[0])).all() == all_half(f[0]);
  }));

  out.push_back(make("S3", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
    return sim(f[0], f[1]) == sim(complement(f[0]), complement(f[1]));
  }));

  out.push_back(make(
      "S4", true, {"A", "B", "C"}, 3, 0,
      [](FS f, CS, std::string* note) {
        if (!leq(f[0], f[1]) || !leq(f[1], f[2])) return true;
        RelationValue ab = sim(f[0], f[1]);
        RelationValue bc = sim(f[1], f[2]);
        RelationValue ac = sim(f[0], f[2]);
        if (!leq(ac, ab) || !leq(ac, bc)) {
          note_out(note, "monotonicity clause failed");
          return false;
        }
        if (ac != meet(ab, bc)) {
          note_out(note, "meet clause failed");
          return false;
        }
        return true;
      },
      chain3(0, 1, 2)));

  out.push_back(make("S5", true, {"A", "B", "C", "D"}, 4, 0,
                     [](FS f, CS, std::string*) {
                       const auto& [a, b, c, d] = std::tie(f[0], f[1], f[2], f[3]);
                       RelationValue lower = meet(sim(a, b), sim(c, d));
                       return leq(lower, sim(join(a, c), join(b, d))) &&
                              leq(lower, sim(meet(a, c), meet(b, d)));
                     }));

  out.push_back(make("S6", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    const auto& [a, b, c] = std::tie(f[0], f[1], f[2]);
    RelationValue lower = meet(sim(a, b), sim(a, c));
    return leq(lower, sim(a, join(b, c))) && leq(lower, sim(a, meet(b, c)));
  }));

  out.push_back(make("S7", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    const auto& [a, b, c] = std::tie(f[0], f[1], f[2]);
    RelationValue upper = join(sim(a, c), sim(b, c));
    return leq(sim(join(a, b), c), upper) && leq(sim(meet(a, b), c), upper);
  }));

  out.push_back(make("S8", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    const auto& [a, b, c] = std::tie(f[0], f[1], f[2]);
    RelationValue ab = sim(a, b);
    return leq(ab, sim(join(a, c), join(b, c))) && leq(ab, sim(meet(a, c), meet(b, c)));
  }));

  out.push_back(make("S9a", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
    return sim(f[0], join(f[0], f[1])) == sim(f[1], meet(f[0], f[1]));
  }));

  out.push_back(make("S9b", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
    return sim(f[0], meet(f[0], f[1])) == sim(f[1], join(f[0], f[1]));
  }));

  out.push_back(make("S10", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string* note) {
    const auto& a = f[0];
    const auto& b = f[1];
    FuzzySet lo = meet(a, b);
    FuzzySet hi = join(a, b);
    std::array<RelationValue, 6> q = {
        sim(a, b),
        meet(sim(lo, a), sim(a, hi)),
        meet(sim(lo, b), sim(b, hi)),
        sim(lo, hi),
        meet(sim(a, hi), sim(b, hi)),
        meet(sim(a, lo), sim(b, lo)),
    };
    static constexpr std::array<std::string_view, 6> tags = {"(i)",  "(ii)", "(iii)",
                                                             "(iv)", "(v)",  "(vi)"};
    for (std::size_t k = 1; k < q.size(); ++k) {
      if (q[k] != q[0]) {
        note_out(note, std::string(tags[k]) + " != (i)");
        return false;
      }
    }
    return true;
  }));

  out.push_back(make("sim.pointwise", true, {"A", "B"}, 2, 0,
                     [](FS f, CS, std::string*) {
                       RelationValue x = sim(f[0], f[1]);
                       for (std::size_t u = 0; u < x.size(); ++u) {
                         if (x.bit(u) != (f[0].grade(u) == f[1].grade(u))) return false;
                       }
                       return true;
                     }));

  return out;
}

std::vector<Property> distance_suite() {
  std::vector<Property> out;

  out.push_back(make("D1", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
    return dist(f[0], f[1]).none() == (f[0] == f[1]);
  }));

  out.push_back(make("D2a", true, {"A"}, 1, 0, [](FS f, CS, std::string*) {
    return dist(f[0], complement(f[0])).all() == none_half(f[0]);
  }));

  out.push_back(make("D2b", true, {"A"}, 1, 0, [](FS f, CS, std::string*) {
    return dist(f[0], complement(f[0])).none() == all_half(f[0]);
  }));

  out.push_back(make("D3", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
    return dist(f[0], f[1]) == dist(complement(f[0]), complement(f[1]));
  }));

  out.push_back(make(
      "D4", true, {"A", "B", "C"}, 3, 0,
      [](FS f, CS, std::string* note) {
        if (!leq(f[0], f[1]) || !leq(f[1], f[2])) return true;
        RelationValue ab = dist(f[0], f[1]);
        RelationValue bc = dist(f[1], f[2]);
        RelationValue ac = dist(f[0], f[2]);
        if (!leq(ab, ac) || !leq(bc, ac)) {
          note_out(note, "monotonicity clause failed");
          return false;
        }
        if (ac != join(ab, bc)) {
          note_out(note, "join clause failed");
          return false;
        }
        return true;
      },
      chain3(0, 1, 2)));

  out.push_back(make("D5", true, {"A", "B", "C", "E"}, 4, 0,
                     [](FS f, CS, std::string*) {
                       const auto& [a, b, c, e] = std::tie(f[0], f[1], f[2], f[3]);
                       RelationValue upper = join(dist(a, b), dist(c, e));
                       return leq(dist(join(a, c), join(b, e)), upper) &&
                              leq(dist(meet(a, c), meet(b, e)), upper);
                     }));

  out.push_back(make("D6", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    const auto& [a, b, c] = std::tie(f[0], f[1], f[2]);
    RelationValue upper = join(dist(a, b), dist(a, c));
    return leq(dist(a, join(b, c)), upper) && leq(dist(a, meet(b, c)), upper);
  }));

  out.push_back(make("D7", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    const auto& [a, b, c] = std::tie(f[0], f[1], f[2]);
    RelationValue lower = meet(dist(a, c), dist(b, c));
    return leq(lower, dist(join(a, b), c)) && leq(lower, dist(meet(a, b), c));
  }));

  out.push_back(make("D8", true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
    const auto& [a, b, c] = std::tie(f[0], f[1], f[2]);
    RelationValue ab = dist(a, b);
    return leq(dist(join(a, c), join(b, c)), ab) && leq(dist(meet(a, c), meet(b, c)), ab);
  }));

  out.push_back(make("D9a", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
    return dist(f[0], join(f[0], f[1])) == dist(f[1], meet(f[0], f[1]));
  }));

  out.push_back(make("D9b", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
    return dist(f[0], meet(f[0], f[1])) == dist(f[1], join(f[0], f[1]));
  }));

  out.push_back(make("D10", true, {"A", "B"}, 2, 0, [](FS f, CS, std::string* note) {
    const auto& a = f[0];
    const auto& b = f[1];
    FuzzySet lo = meet(a, b);
    FuzzySet hi = join(a, b);
    std::array<RelationValue, 6> q = {
        dist(a, b),
        join(dist(lo, a), dist(a, hi)),
        join(dist(lo, b), dist(b, hi)),
        dist(lo, hi),
        join(dist(a, hi), dist(b, hi)),
        join(dist(a, lo), dist(b, lo)),
    };
    static constexpr std::array<std::string_view, 6> tags = {"(i)",  "(ii)", "(iii)",
                                                             "(iv)", "(v)",  "(vi)"};
    for (std::size_t k = 1; k < q.size(); ++k) {
      if (q[k] != q[0]) {
        note_out(note, std::string(tags[k]) + " != (i)");
        return false;
      }
    }
    return true;
  }));

  out.push_back(make("dist.pointwise", true, {"A", "B"}, 2, 0,
                     [](FS f, CS, std::string*) {
                       RelationValue x = dist(f[0], f[1]);
                       for (std::size_t u = 0; u < x.size(); ++u) {
                         if (x.bit(u) != (f[0].grade(u) != f[1].grade(u))) return false;
                       }
                       return true;
                     }));

  out.push_back(make("dist.symmetric", true, {"A", "B"}, 2, 0,
                     [](FS f, CS, std::string*) {
                       return dist(f[0], f[1]) == dist(f[1], f[0]);
                     }));

  out.push_back(make("dist.ultrametric", true, {"A", "B", "C"}, 3, 0,
                     [](FS f, CS, std::string*) {
                       return leq(dist(f[0], f[1]),
                                  join(dist(f[0], f[2]), dist(f[2], f[1])));
                     }));

  out.push_back(make("dist.crisp-symmetric-difference", true, {"Theta", "Phi"}, 0, 2,
                     [](FS, CS c, std::string*) {
                       return crisp_symmetric_difference(c[0], c[1]) ==
                              dist(c[0].to_fuzzy(), c[1].to_fuzzy());
                     }));

  return out;
}

std::vector<Property> thresholds_suite() {
  std::vector<Property> out;

  out.push_back(make("threshold.incl", true, {"A", "B", "C", "Theta"}, 3, 1,
                     [](FS f, CS c, std::string*) {
                       const auto& [a, b, cc] = std::tie(f[0], f[1], f[2]);
                       if (!leq(c[0], incl(a, b))) return true;
                       return leq(c[0], meet(incl(meet(a, cc), meet(b, cc)),
                                             incl(join(a, cc), join(b, cc))));
                     }));

  out.push_back(make("threshold.sim.join", true, {"A", "B", "C", "Theta"}, 3, 1,
                     [](FS f, CS c, std::string*) {
                       if (!leq(c[0], sim(f[0], f[1]))) return true;
                       return leq(c[0], sim(join(f[0], f[2]), join(f[1], f[2])));
                     }));

  out.push_back(make("threshold.sim.meet", true, {"A", "B", "C", "Theta"}, 3, 1,
                     [](FS f, CS c, std::string*) {
                       if (!leq(c[0], sim(f[0], f[1]))) return true;
                       return leq(c[0], sim(meet(f[0], f[2]), meet(f[1], f[2])));
                     }));

  // Theta is pinned by the hypothesis here, so it is not quantified.
  out.push_back(make("threshold.sim.converse", true, {"A", "B", "C"}, 3, 0,
                     [](FS f, CS, std::string*) {
                       const auto& [a, b, c] = std::tie(f[0], f[1], f[2]);
                       RelationValue m = sim(meet(a, c), meet(b, c));
                       RelationValue j = sim(join(a, c), join(b, c));
                       if (m != j) return true;
                       return sim(a, b) == m;
                     }));

  out.push_back(make("threshold.dist.join", true, {"A", "B", "C", "Theta"}, 3, 1,
                     [](FS f, CS c, std::string*) {
                       if (!leq(dist(f[0], f[1]), c[0])) return true;
                       return leq(dist(join(f[0], f[2]), join(f[1], f[2])), c[0]);
                     }));

  out.push_back(make("threshold.dist.meet", true, {"A", "B", "C", "Theta"}, 3, 1,
                     [](FS f, CS c, std::string*) {
                       if (!leq(dist(f[0], f[1]), c[0])) return true;
                       return leq(dist(meet(f[0], f[2]), meet(f[1], f[2])), c[0]);
                     }));

  out.push_back(make("threshold.dist.converse", true, {"A", "B", "C"}, 3, 0,
                     [](FS f, CS, std::string*) {
                       const auto& [a, b, c] = std::tie(f[0], f[1], f[2]);
                       RelationValue m = dist(meet(a, c), meet(b, c));
                       RelationValue j = dist(join(a, c), join(b, c));
                       if (m != j) return true;
                       return dist(a, b) == m;
                     }));

  out.push_back(make("cut.reflexive", true, {"A", "Theta"}, 1, 1,
                     [](FS f, CS c, std::string*) { return cut_leq(f[0], f[0], c[0]); }));

  out.push_back(make("cut.transitive", true, {"A", "B", "C", "Theta"}, 3, 1,
                     [](FS f, CS c, std::string*) {
                       if (!cut_leq(f[0], f[1], c[0]) || !cut_leq(f[1], f[2], c[0])) {
                         return true;
                       }
                       return cut_leq(f[0], f[2], c[0]);
                     }));

  return out;
}

std::vector<Property> betweenness_suite() {
  std::vector<Property> out;

  out.push_back(make("between.order-implies-metric", true, {"A", "B", "C"}, 3, 0,
                     [](FS f, CS, std::string*) {
                       if (!order_between(f[0], f[1], f[2])) return true;
                       return metric_between(f[0], f[1], f[2]);
                     }));

  // The converse fails for fuzzy sets; recorded, not asserted.
  out.push_back(make("between.metric-implies-order", false, {"A", "B", "C"}, 3, 0,
                     [](FS f, CS, std::string*) {
                       if (!metric_between(f[0], f[1], f[2])) return true;
                       return order_between(f[0], f[1], f[2]);
                     }));

  out.push_back(make("between.crisp-equivalence", true, {"A", "B", "C"}, 0, 3,
                     [](FS, CS c, std::string*) {
                       FuzzySet a = c[0].to_fuzzy();
                       FuzzySet b = c[1].to_fuzzy();
                       FuzzySet cc = c[2].to_fuzzy();
                       return order_between(a, b, cc) == metric_between(a, b, cc);
                     }));

  return out;
}

std::vector<Property> lattice_laws_suite() {
  std::vector<Property> out;

  out.push_back(make("lattice.distributive-meet", true, {"A", "B", "C"}, 3, 0,
                     [](FS f, CS, std::string*) {
                       return meet(f[0], join(f[1], f[2])) ==
                              join(meet(f[0], f[1]), meet(f[0], f[2]));
                     }));

  out.push_back(make("lattice.distributive-join", true, {"A", "B", "C"}, 3, 0,
                     [](FS f, CS, std::string*) {
                       return join(f[0], meet(f[1], f[2])) ==
                              meet(join(f[0], f[1]), join(f[0], f[2]));
                     }));

  out.push_back(make("lattice.demorgan-meet", true, {"A", "B"}, 2, 0,
                     [](FS f, CS, std::string*) {
                       return complement(meet(f[0], f[1])) ==
                              join(complement(f[0]), complement(f[1]));
                     }));

  out.push_back(make("lattice.demorgan-join", true, {"A", "B"}, 2, 0,
                     [](FS f, CS, std::string*) {
                       return complement(join(f[0], f[1])) ==
                              meet(complement(f[0]), complement(f[1]));
                     }));

  out.push_back(make("lattice.complement-involution", true, {"A"}, 1, 0,
                     [](FS f, CS, std::string*) {
                       return complement(complement(f[0])) == f[0];
                     }));

  out.push_back(make(
      "lattice.complement-order-inverting", true, {"A", "B"}, 2, 0,
      [](FS f, CS, std::string*) {
        if (!leq(f[0], f[1])) return true;
        return leq(complement(f[1]), complement(f[0]));
      },
      pair_below(0, 1)));

  out.push_back(make("lattice.crisp-closure", true, {"A", "B"}, 0, 2,
                     [](FS, CS c, std::string* note) {
                       FuzzySet a = c[0].to_fuzzy();
                       FuzzySet b = c[1].to_fuzzy();
                       FuzzySet m = meet(a, b);
                       FuzzySet j = join(a, b);
                       FuzzySet cm = complement(a);
                       if (!m.is_crisp() || !j.is_crisp() || !cm.is_crisp()) {
                         note_out(note, "result left the crisp sublattice");
                         return false;
                       }
                       return CrispSet::from_fuzzy(m) == meet(c[0], c[1]) &&
                              CrispSet::from_fuzzy(j) == join(c[0], c[1]) &&
                              CrispSet::from_fuzzy(cm) == complement(c[0]);
                     }));

  return out;
}

RelationValue apply_relation(RelationKind k, const FuzzySet& a, const FuzzySet& b) {
  switch (k) {
    case RelationKind::Inclusion: return incl(a, b);
    case RelationKind::Similarity: return sim(a, b);
    case RelationKind::Distance: return dist(a, b);
  }
  throw DomainError("unknown relation kind");
}

bool relation_property_is_theorem(RelationKind k, RelationProperty p) {
  switch (k) {
    case RelationKind::Inclusion:
      return p == RelationProperty::Reflexive || p == RelationProperty::Antisymmetric ||
             p == RelationProperty::MeetTransitive;
    case RelationKind::Similarity:
      return p == RelationProperty::Reflexive || p == RelationProperty::Symmetric ||
             p == RelationProperty::MeetTransitive;
    case RelationKind::Distance:
      return p == RelationProperty::Symmetric || p == RelationProperty::JoinTransitive;
  }
  return false;
}

std::vector<Property> relation_definitions_suite() {
  std::vector<Property> out;
  for (RelationKind k : {RelationKind::Inclusion, RelationKind::Similarity,
                         RelationKind::Distance}) {
    for (RelationProperty p :
         {RelationProperty::Reflexive, RelationProperty::Symmetric,
          RelationProperty::Antisymmetric, RelationProperty::MeetTransitive,
          RelationProperty::JoinTransitive}) {
      out.push_back(relation_definition_property(k, p));
    }
  }
  return out;
}

ScalarValue eval(ScalarMeasureId id, const FuzzySet& a, const FuzzySet& b) {
  return eval_scalar(id, a, b);
}

}  // namespace

std::string_view to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Inclusion: return "incl";
    case RelationKind::Similarity: return "sim";
    case RelationKind::Distance: return "dist";
  }
  return "?";
}

std::string_view to_string(RelationProperty p) {
  switch (p) {
    case RelationProperty::Reflexive: return "reflexive";
    case RelationProperty::Symmetric: return "symmetric";
    case RelationProperty::Antisymmetric: return "antisymmetric";
    case RelationProperty::MeetTransitive: return "meet-transitive";
    case RelationProperty::JoinTransitive: return "join-transitive";
  }
  return "?";
}

Property relation_definition_property(RelationKind kind, RelationProperty prop) {
  std::string id = std::string(to_string(kind)) + "." + std::string(to_string(prop));
  bool theorem = relation_property_is_theorem(kind, prop);
  switch (prop) {
    case RelationProperty::Reflexive:
      return make(std::move(id), theorem, {"A"}, 1, 0, [kind](FS f, CS, std::string*) {
        return apply_relation(kind, f[0], f[0]).all();
      });
    case RelationProperty::Symmetric:
      return make(std::move(id), theorem, {"A", "B"}, 2, 0,
                  [kind](FS f, CS, std::string*) {
                    return apply_relation(kind, f[0], f[1]) ==
                           apply_relation(kind, f[1], f[0]);
                  });
    case RelationProperty::Antisymmetric:
      return make(std::move(id), theorem, {"A", "B"}, 2, 0,
                  [kind](FS f, CS, std::string*) {
                    RelationValue x = apply_relation(kind, f[0], f[1]);
                    RelationValue y = apply_relation(kind, f[1], f[0]);
                    if (x != y || x.none()) return true;
                    return f[0] == f[1];
                  });
    case RelationProperty::MeetTransitive:
      return make(std::move(id), theorem, {"A", "B", "C"}, 3, 0,
                  [kind](FS f, CS, std::string*) {
                    return leq(meet(apply_relation(kind, f[0], f[2]),
                                    apply_relation(kind, f[2], f[1])),
                               apply_relation(kind, f[0], f[1]));
                  });
    case RelationProperty::JoinTransitive:
      return make(std::move(id), theorem, {"A", "B", "C"}, 3, 0,
                  [kind](FS f, CS, std::string*) {
                    return leq(apply_relation(kind, f[0], f[1]),
                               join(apply_relation(kind, f[0], f[2]),
                                    apply_relation(kind, f[2], f[1])));
                  });
  }
  throw DomainError("unknown relation property");
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::InclusionI1I12: return "inclusion_I1_I12";
    case Suite::SimilarityS1S10: return "similarity_S1_S10";
    case Suite::DistanceD1D10: return "distance_D1_D10";
    case Suite::Thresholds: return "thresholds";
    case Suite::Betweenness: return "betweenness";
    case Suite::LatticeLaws: return "lattice_laws";
    case Suite::RelationDefinitions: return "relation_definitions";
  }
  return "?";
}

Suite suite_from_name(std::string_view name) {
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  throw DomainError("unknown audit suite: \"" + std::string(name) + "\"");
}

std::span<const Suite> all_suites() {
  static const std::array<Suite, 7> suites = {
      Suite::InclusionI1I12, Suite::SimilarityS1S10,     Suite::DistanceD1D10,
      Suite::Thresholds,     Suite::Betweenness,         Suite::LatticeLaws,
      Suite::RelationDefinitions,
  };
  return suites;
}

std::vector<Property> suite_properties(Suite suite) {
  switch (suite) {
    case Suite::InclusionI1I12: return inclusion_suite();
    case Suite::SimilarityS1S10: return similarity_suite();
    case Suite::DistanceD1D10: return distance_suite();
    case Suite::Thresholds: return thresholds_suite();
    case Suite::Betweenness: return betweenness_suite();
    case Suite::LatticeLaws: return lattice_laws_suite();
    case Suite::RelationDefinitions: return relation_definitions_suite();
  }
  throw DomainError("unknown audit suite");
}

Property scalar_axiom_property(ScalarMeasureId id, std::string_view axiom) {
  std::string pid = std::string(axiom) + "@m" + std::to_string(id.index());
  // The only scalar claim asserted as a theorem is meet-transitivity of the
  // kundu measure; every other cell is recorded descriptively.
  bool theorem = axiom == "and-transitive" && id.index() == 12;

  if (axiom == "i1") {
    return make(std::move(pid), theorem, {"A", "B"}, 2, 0, [id](FS f, CS, std::string*) {
      return leq(f[0], f[1]) == eval(id, f[0], f[1]).value.is_one();
    });
  }
  if (axiom == "i2a") {
    return make(std::move(pid), theorem, {"A"}, 1, 0, [id](FS f, CS, std::string*) {
      return eval(id, f[0], complement(f[0])).value.is_zero() == f[0].is_crisp();
    });
  }
  if (axiom == "i2b") {
    return make(
        std::move(pid), theorem, {"A"}, 1, 0,
        [id](FS f, CS, std::string*) {
          if (!all_at_least_half(f[0])) return true;
          bool is_universe = f[0] == FuzzySet::universal_set(f[0].universe());
          return eval(id, f[0], complement(f[0])).value.is_zero() == is_universe;
        },
        lift_above_half(0));
  }
  if (axiom == "i3") {
    return make(std::move(pid), theorem, {"A", "B"}, 2, 0, [id](FS f, CS, std::string*) {
      return eval(id, f[0], f[1]).value ==
             eval(id, complement(f[1]), complement(f[0])).value;
    });
  }
  if (axiom == "i4a") {
    return make(
        std::move(pid), theorem, {"A", "B", "C"}, 3, 0,
        [id](FS f, CS, std::string*) {
          if (!leq(f[1], f[2])) return true;
          return eval(id, f[0], f[1]).value <= eval(id, f[0], f[2]).value;
        },
        pair_below(1, 2));
  }
  if (axiom == "i4b") {
    return make(
        std::move(pid), theorem, {"A", "B", "C"}, 3, 0,
        [id](FS f, CS, std::string*) {
          if (!leq(f[1], f[2]) || !leq(f[2], f[0])) return true;
          return eval(id, f[0], f[1]).value <= eval(id, f[0], f[2]).value;
        },
        chain3(1, 2, 0));
  }
  if (axiom == "i5a") {
    return make(
        std::move(pid), theorem, {"A", "B", "C"}, 3, 0,
        [id](FS f, CS, std::string*) {
          if (!leq(f[1], f[2])) return true;
          return eval(id, f[2], f[0]).value <= eval(id, f[1], f[0]).value;
        },
        pair_below(1, 2));
  }
  if (axiom == "i5b") {
    return make(
        std::move(pid), theorem, {"A", "B", "C"}, 3, 0,
        [id](FS f, CS, std::string*) {
          if (!leq(f[0], f[1]) || !leq(f[1], f[2])) return true;
          return eval(id, f[2], f[0]).value <= eval(id, f[1], f[0]).value;
        },
        chain3(0, 1, 2));
  }
  if (axiom == "i6") {
    return make(std::move(pid), theorem, {"A", "B", "C"}, 3, 0,
                [id](FS f, CS, std::string*) {
                  return eval(id, join(f[0], f[1]), f[2]).value ==
                         min(eval(id, f[0], f[2]).value, eval(id, f[1], f[2]).value);
                });
  }
  if (axiom == "i7") {
    return make(std::move(pid), theorem, {"A", "B", "C"}, 3, 0,
                [id](FS f, CS, std::string*) {
                  return eval(id, meet(f[0], f[1]), f[2]).value >=
                         max(eval(id, f[0], f[2]).value, eval(id, f[1], f[2]).value);
                });
  }
  if (axiom == "i8") {
    return make(std::move(pid), theorem, {"A", "B", "C"}, 3, 0,
                [id](FS f, CS, std::string*) {
                  return eval(id, f[0], join(f[1], f[2])).value >=
                         max(eval(id, f[0], f[1]).value, eval(id, f[0], f[2]).value);
                });
  }
  if (axiom == "i9") {
    return make(std::move(pid), theorem, {"A", "B", "C"}, 3, 0,
                [id](FS f, CS, std::string*) {
                  return eval(id, f[0], meet(f[1], f[2])).value ==
                         min(eval(id, f[0], f[1]).value, eval(id, f[0], f[2]).value);
                });
  }
  if (axiom == "i10") {
    return make(std::move(pid), theorem, {"A", "B"}, 2, 0, [id](FS f, CS, std::string*) {
      bool hard_violation = false;
      for (std::size_t u = 0; u < f[0].size(); ++u) {
        if (f[0].grade(u).is_one() && f[1].grade(u).is_zero()) {
          hard_violation = true;
          break;
        }
      }
      return eval(id, f[0], f[1]).value.is_zero() == hard_violation;
    });
  }
  if (axiom == "and-transitive") {
    Property p = scalar_transitivity_property(id);
    p.theorem = theorem;
    return p;
  }
  throw DomainError("unknown scalar axiom: \"" + std::string(axiom) + "\"");
}

Property vector_axiom_property(std::string_view axiom) {
  std::string pid = std::string(axiom) + "@I";
  // Each cell checks the lattice-valued analogue of the scalar axiom.
  auto full_i1 = [](FS f, CS, std::string*) {
    RelationValue x = incl(f[0], f[1]);
    return x.all() == leq(f[0], f[1]) && x.none() == pointwise_greater(f[0], f[1]);
  };
  if (axiom == "i1" || axiom == "i10") {
    return make(std::move(pid), true, {"A", "B"}, 2, 0, full_i1);
  }
  if (axiom == "i2a" || axiom == "i2b") {
    return make(std::move(pid), true, {"A"}, 1, 0, [](FS f, CS, std::string*) {
      return incl(f[0], complement(f[0])).none() == all_above_half(f[0]);
    });
  }
  if (axiom == "i3") {
    return make(std::move(pid), true, {"A", "B"}, 2, 0, [](FS f, CS, std::string*) {
      return incl(f[0], f[1]) == incl(complement(f[1]), complement(f[0]));
    });
  }
  if (axiom == "i4a" || axiom == "i4b") {
    return make(
        std::move(pid), true, {"A", "B", "C"}, 3, 0,
        [](FS f, CS, std::string*) {
          if (!leq(f[1], f[2])) return true;
          return leq(incl(f[0], f[1]), incl(f[0], f[2]));
        },
        pair_below(1, 2));
  }
  if (axiom == "i5a" || axiom == "i5b") {
    return make(
        std::move(pid), true, {"A", "B", "C"}, 3, 0,
        [](FS f, CS, std::string*) {
          if (!leq(f[1], f[2])) return true;
          return leq(incl(f[2], f[0]), incl(f[1], f[0]));
        },
        pair_below(1, 2));
  }
  if (axiom == "i6") {
    return make(std::move(pid), true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
      return incl(join(f[0], f[1]), f[2]) == meet(incl(f[0], f[2]), incl(f[1], f[2]));
    });
  }
  if (axiom == "i7") {
    return make(std::move(pid), true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
      return incl(meet(f[0], f[1]), f[2]) == join(incl(f[0], f[2]), incl(f[1], f[2]));
    });
  }
  if (axiom == "i8") {
    return make(std::move(pid), true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
      return incl(f[0], join(f[1], f[2])) == join(incl(f[0], f[1]), incl(f[0], f[2]));
    });
  }
  if (axiom == "i9") {
    return make(std::move(pid), true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
      return incl(f[0], meet(f[1], f[2])) == meet(incl(f[0], f[1]), incl(f[0], f[2]));
    });
  }
  if (axiom == "and-transitive") {
    return make(std::move(pid), true, {"A", "B", "C"}, 3, 0, [](FS f, CS, std::string*) {
      return leq(meet(incl(f[0], f[2]), incl(f[2], f[1])), incl(f[0], f[1]));
    });
  }
  throw DomainError("unknown scalar axiom: \"" + std::string(axiom) + "\"");
}

Property scalar_transitivity_property(ScalarMeasureId id) {
  return make("and-transitive@m" + std::to_string(id.index()), false, {"A", "B", "C"}, 3,
              0, [id](FS f, CS, std::string*) {
                return eval(id, f[0], f[1]).value >=
                       min(eval(id, f[0], f[2]).value, eval(id, f[2], f[1]).value);
              });
}

}  // namespace lfuzzy::audit
