#include "lfuzzy/audit/engine.hpp"

#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>

#include "lfuzzy/audit/grid_space.hpp"
#include "lfuzzy/errors.hpp"

namespace lfuzzy::audit {

namespace {

// splitmix64: stable, platform-independent stream; one generator per trial
// keyed by (seed, trial) keeps draws independent of worker partitioning.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) {
    throw DomainError("tuple space does not fit in 64 bits");
  }
  return a * b;
}

struct TupleSpace {
  GridSpace grid;
  unsigned fuzzy_arity;
  unsigned crisp_arity;
  std::uint64_t total;

  TupleSpace(const Property& p, const SearchConfig& c)
      : grid(c.universe_size, c.grid_levels),
        fuzzy_arity(p.fuzzy_arity),
        crisp_arity(p.crisp_arity) {
    total = 1;
    for (unsigned i = 0; i < fuzzy_arity; ++i) total = checked_mul(total, grid.set_count());
    for (unsigned i = 0; i < crisp_arity; ++i) {
      total = checked_mul(total, grid.crisp_count());
    }
  }

  // Mixed-radix decode, fuzzy roles most significant and the last crisp role
  // least significant, so index order is lexicographic in the role tuple.
  void tuple_at(std::uint64_t index, std::vector<FuzzySet>& fuzzy,
                std::vector<CrispSet>& crisp) const {
    fuzzy.clear();
    crisp.clear();
    for (unsigned i = crisp_arity; i-- > 0;) {
      crisp.insert(crisp.begin(), grid.crisp_at(index % grid.crisp_count()));
      index /= grid.crisp_count();
    }
    for (unsigned i = fuzzy_arity; i-- > 0;) {
      fuzzy.insert(fuzzy.begin(), grid.set_at(index % grid.set_count()));
      index /= grid.set_count();
    }
  }

  void random_tuple(std::uint64_t seed, std::uint64_t trial,
                    std::vector<FuzzySet>& fuzzy, std::vector<CrispSet>& crisp) const {
    SplitMix64 rng{seed + 0x9E3779B97F4A7C15ULL * (trial + 1)};
    fuzzy.clear();
    crisp.clear();
    const unsigned n = grid.universe_size();
    const std::uint64_t levels = grid.grid_levels() + 1;
    for (unsigned i = 0; i < fuzzy_arity; ++i) {
      std::vector<Rational> grades;
      grades.reserve(n);
      for (unsigned u = 0; u < n; ++u) {
        grades.push_back(grid.level(static_cast<unsigned>(rng.next() % levels)));
      }
      fuzzy.emplace_back(grid.universe(), std::move(grades));
    }
    for (unsigned i = 0; i < crisp_arity; ++i) {
      std::vector<std::uint8_t> bits;
      bits.reserve(n);
      for (unsigned u = 0; u < n; ++u) {
        bits.push_back(static_cast<std::uint8_t>(rng.next() & 1));
      }
      crisp.emplace_back(grid.universe(), std::move(bits));
    }
  }
};

struct Violation {
  std::uint64_t index;
  std::string note;
};

/// Lowest violating tuple index in [0, limit), or nullopt. `eval` maps an
/// index to pass/fail. Workers scan disjoint ascending ranges and the merge
/// takes the minimum, so the outcome is independent of the worker count.
std::optional<Violation> first_violation(
    std::uint64_t limit, unsigned workers,
    const std::function<bool(std::uint64_t, std::string*)>& eval) {
  if (workers == 0) workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (static_cast<std::uint64_t>(workers) > limit) {
    workers = static_cast<unsigned>(limit ? limit : 1);
  }

  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::vector<std::thread> threads;
  threads.reserve(workers);

  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = limit / workers * w + std::min<std::uint64_t>(w, limit % workers);
    const std::uint64_t hi =
        limit / workers * (w + 1) + std::min<std::uint64_t>(w + 1, limit % workers);
    threads.emplace_back([&, lo, hi] {
      for (std::uint64_t i = lo; i < hi; ++i) {
        if ((i & 0x3FF) == 0 && best.load(std::memory_order_relaxed) < lo) return;
        if (!eval(i, nullptr)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          return;  // later indices in this range cannot beat i
        }
      }
    });
  }
  for (auto& t : threads) t.join();

  std::uint64_t found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  // Re-evaluate the winning index so the note matches it exactly.
  std::string note;
  eval(found, &note);
  return Violation{found, std::move(note)};
}

Witness make_witness(const Property& property, const TupleSpace& space,
                     const std::vector<FuzzySet>& fuzzy,
                     const std::vector<CrispSet>& crisp) {
  Witness w;
  w.universe = space.grid.universe();
  w.universe_size = space.grid.universe_size();
  w.grid_levels = space.grid.grid_levels();
  for (unsigned i = 0; i < property.fuzzy_arity; ++i) {
    w.sets.push_back({property.roles[i], false, fuzzy[i]});
  }
  for (unsigned i = 0; i < property.crisp_arity; ++i) {
    w.sets.push_back({property.roles[property.fuzzy_arity + i], true,
                      crisp[i].to_fuzzy()});
  }
  return w;
}

/// Exhaustive rescan over smaller grids, coarsest first, for the least
/// configuration that still exhibits a violation. Sequential by construction.
std::optional<Witness> minimize_witness(const Property& property,
                                        const SearchConfig& config) {
  for (unsigned n = 1; n <= config.universe_size; ++n) {
    for (unsigned g = 1; g <= config.grid_levels; ++g) {
      SearchConfig sub = config;
      sub.universe_size = n;
      sub.grid_levels = g;
      TupleSpace space(property, sub);
      if (space.total > config.case_cap) continue;
      std::vector<FuzzySet> fuzzy;
      std::vector<CrispSet> crisp;
      for (std::uint64_t i = 0; i < space.total; ++i) {
        space.tuple_at(i, fuzzy, crisp);
        if (!property.check(fuzzy, crisp, nullptr)) {
          return make_witness(property, space, fuzzy, crisp);
        }
      }
    }
  }
  return std::nullopt;
}

AuditResult run_exhaustive(const Property& property, const SearchConfig& config) {
  TupleSpace space(property, config);
  if (space.total > config.case_cap) {
    throw InfeasibleError("property " + property.id + ": exhaustive search needs " +
                              std::to_string(space.total) + " tuples, cap is " +
                              std::to_string(config.case_cap),
                          space.total, config.case_cap);
  }

  auto violation = first_violation(
      space.total, config.workers,
      [&](std::uint64_t index, std::string* note) {
        thread_local std::vector<FuzzySet> fuzzy;
        thread_local std::vector<CrispSet> crisp;
        space.tuple_at(index, fuzzy, crisp);
        return property.check(fuzzy, crisp, note);
      });

  AuditResult result;
  result.property_id = property.id;
  result.theorem = property.theorem;
  result.stats = {SearchMode::Exhaustive, space.total, space.total};
  if (!violation) {
    result.verdict = Verdict::Holds;
    return result;
  }

  result.verdict = Verdict::Refuted;
  result.stats.cases = violation->index + 1;
  result.note = violation->note;
  if (auto minimal = minimize_witness(property, config)) {
    result.witness = std::move(minimal);
  } else {
    std::vector<FuzzySet> fuzzy;
    std::vector<CrispSet> crisp;
    space.tuple_at(violation->index, fuzzy, crisp);
    result.witness = make_witness(property, space, fuzzy, crisp);
  }
  return result;
}

AuditResult run_random(const Property& property, const SearchConfig& config) {
  TupleSpace space(property, config);

  auto violation = first_violation(
      config.trials, config.workers,
      [&](std::uint64_t trial, std::string* note) {
        thread_local std::vector<FuzzySet> fuzzy;
        thread_local std::vector<CrispSet> crisp;
        space.random_tuple(config.seed, trial, fuzzy, crisp);
        if (property.reshape) property.reshape(fuzzy, crisp);
        return property.check(fuzzy, crisp, note);
      });

  AuditResult result;
  result.property_id = property.id;
  result.theorem = property.theorem;
  result.stats = {SearchMode::Random, config.trials, config.trials};
  if (!violation) {
    // A sample cannot certify a universally quantified claim.
    result.verdict = Verdict::Inconclusive;
    result.note = "no violation in " + std::to_string(config.trials) + " trials";
    return result;
  }

  result.verdict = Verdict::Refuted;
  result.stats.cases = violation->index + 1;
  result.note = violation->note;
  if (auto minimal = minimize_witness(property, config)) {
    result.witness = std::move(minimal);
  } else {
    std::vector<FuzzySet> fuzzy;
    std::vector<CrispSet> crisp;
    space.random_tuple(config.seed, violation->index, fuzzy, crisp);
    if (property.reshape) property.reshape(fuzzy, crisp);
    result.witness = make_witness(property, space, fuzzy, crisp);
  }
  return result;
}

}  // namespace

std::uint64_t tuple_space_size(const Property& property, const SearchConfig& config) {
  return TupleSpace(property, config).total;
}

AuditResult run_property(const Property& property, const SearchConfig& config) {
  config.validate();
  return config.mode == SearchMode::Exhaustive ? run_exhaustive(property, config)
                                               : run_random(property, config);
}

std::vector<AuditResult> run_suite(Suite suite, const SearchConfig& config) {
  std::vector<AuditResult> out;
  for (const Property& p : suite_properties(suite)) {
    out.push_back(run_property(p, config));
  }
  return out;
}

AuditResult check_relation_property(RelationKind kind, RelationProperty prop,
                                    const SearchConfig& config) {
  return run_property(relation_definition_property(kind, prop), config);
}

AuditResult find_transitivity_counterexample(ScalarMeasureId id,
                                             const SearchConfig& config) {
  AuditResult result = run_property(scalar_transitivity_property(id), config);
  if (result.verdict == Verdict::Holds) {
    // Exhaustive over the grid only; the claim ranges over all fuzzy sets.
    result.verdict = Verdict::Inconclusive;
    result.note = "no violation among " + std::to_string(result.stats.space) +
                  " grid tuples";
  }
  return result;
}

}  // namespace lfuzzy::audit
