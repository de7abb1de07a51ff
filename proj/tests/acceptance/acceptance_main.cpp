// Acceptance checks for the library: each criterion prints one PASS/FAIL
// line and the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <lfuzzy/lfuzzy.hpp>

using namespace lfuzzy;
using namespace lfuzzy::audit;

namespace {

std::string fail(std::string detail) { return detail; }

struct Example {
    UniverseRef u = Universe::numbered(4);
    FuzzySet A, B, C, Theta, Phi;

    Example()
        : A(parse("0.2", "0.3", "0", "0.9")),
          B(parse("0.3", "0.4", "0.2", "0.8")),
          C(parse("0.3", "0.5", "0.8", "1")),
          Theta(parse("0", "1", "1", "1")),
          Phi(parse("1", "1", "0", "1")) {}

    FuzzySet parse(const char* a, const char* b, const char* c, const char* d) {
        return FuzzySet(u, {Rational::parse(a), Rational::parse(b),
                            Rational::parse(c), Rational::parse(d)});
    }
};

std::string check_worked_example() {
    auto start = std::chrono::steady_clock::now();
    Example ex;
    std::ostringstream bad;

    auto expect_bits = [&](const char* what, const RelationValue& got,
                           const char* want) {
        if (got.bit_string() != want) {
            bad << what << " = " << got.bit_string() << ", expected " << want
                << "; ";
        }
    };
    expect_bits("incl(A,C)", incl(ex.A, ex.C), "1111");
    expect_bits("incl(A,B)", incl(ex.A, ex.B), "1110");
    expect_bits("incl(A,Phi)", incl(ex.A, ex.Phi), "1111");
    expect_bits("incl(Theta,A)", incl(ex.Theta, ex.A), "1000");
    expect_bits("incl(B,A)", incl(ex.B, ex.A), "0001");
    expect_bits("incl(Phi,Theta)", incl(ex.Phi, ex.Theta), "0111");
    expect_bits("incl(Theta,Phi)", incl(ex.Theta, ex.Phi), "1101");
    expect_bits("incl(Phi,A)", incl(ex.Phi, ex.A), "0010");
    expect_bits("sim(Phi,Theta)", sim(ex.Phi, ex.Theta), "0101");
    expect_bits("sim(Phi,A)", sim(ex.Phi, ex.A), "0010");
    expect_bits("dist(Phi,Theta)", dist(ex.Phi, ex.Theta), "1010");
    expect_bits("dist(Phi,A)", dist(ex.Phi, ex.A), "1101");

    auto expect_set = [&](const char* what, const FuzzySet& got,
                          const FuzzySet& want) {
        if (!(got == want)) {
            bad << what << " = " << got.str() << ", expected " << want.str()
                << "; ";
        }
    };
    expect_set("join(A,B)", join(ex.A, ex.B),
               ex.parse("0.3", "0.4", "0.2", "0.9"));
    expect_set("meet(A,B)", meet(ex.A, ex.B),
               ex.parse("0.2", "0.3", "0", "0.8"));
    expect_set("join(B,Phi)", join(ex.B, ex.Phi),
               ex.parse("1", "1", "0.2", "1"));
    expect_set("complement(A)", complement(ex.A),
               ex.parse("0.8", "0.7", "1", "0.1"));

    if (compare(ex.A, ex.C) != Comparison::LessEq) bad << "A <= C not seen; ";
    if (compare(ex.A, ex.B) != Comparison::Incomparable) {
        bad << "A, B not incomparable; ";
    }
    if (!incl(ex.A, ex.C).all()) bad << "incl(A,C) is not the top verdict; ";
    if (!(crisp_symmetric_difference(CrispSet::from_fuzzy(ex.Theta),
                                     CrispSet::from_fuzzy(ex.Phi)) ==
          dist(ex.Theta, ex.Phi))) {
        bad << "crisp symmetric difference disagrees with dist; ";
    }

    auto elapsed = std::chrono::steady_clock::now() - start;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed);
    if (ms.count() >= 1000) {
        bad << "took " << ms.count() << " ms (budget 1000 ms); ";
    }
    std::string detail = bad.str();
    if (!detail.empty()) return fail(detail);
    return "";
}

std::vector<Suite> theorem_suites() {
    return {Suite::InclusionI1I12, Suite::SimilarityS1S10, Suite::DistanceD1D10,
            Suite::Thresholds,     Suite::Betweenness,     Suite::LatticeLaws,
            Suite::RelationDefinitions};
}

std::string refutations_in(const SearchConfig& config) {
    std::ostringstream bad;
    for (Suite suite : theorem_suites()) {
        for (const AuditResult& r : run_suite(suite, config)) {
            if (r.theorem && r.verdict == Verdict::Refuted) {
                bad << r.property_id << " refuted";
                if (r.witness) {
                    bad << " at n=" << r.witness->universe_size
                        << " g=" << r.witness->grid_levels;
                }
                bad << "; ";
            }
        }
    }
    return bad.str();
}

std::string check_theorems_exhaustive() {
    SearchConfig c;
    c.workers = 0;
    c.universe_size = 2;
    c.grid_levels = 2;
    std::string bad = refutations_in(c);
    c.grid_levels = 4;
    bad += refutations_in(c);
    if (!bad.empty()) return fail(bad);
    return "";
}

std::string check_theorems_random() {
    SearchConfig c;
    c.workers = 0;
    c.universe_size = 4;
    c.grid_levels = 10;
    c.mode = SearchMode::Random;
    c.trials = 100000;
    c.seed = 2026;
    std::string bad = refutations_in(c);
    if (!bad.empty()) return fail(bad);
    return "";
}

std::string check_axiom_grid() {
    SearchConfig c;
    c.workers = 0;
    c.universe_size = 2;
    c.grid_levels = 4;
    AxiomGrid grid = scalar_axiom_grid(c);
    if (grid.rows.empty() || grid.rows.back().label != "I") {
        return fail("lattice-valued row missing");
    }
    std::ostringstream bad;
    const AxiomGridRow& vec = grid.rows.back();
    if (vec.cells.size() != axiom_column_ids().size()) {
        bad << "expected " << axiom_column_ids().size() << " columns, got "
            << vec.cells.size() << "; ";
    }
    for (const AuditResult& cell : vec.cells) {
        if (cell.verdict != Verdict::Holds) {
            bad << cell.property_id << " is " << to_string(cell.verdict) << "; ";
        }
    }
    std::string detail = bad.str();
    if (!detail.empty()) return fail(detail);
    return "";
}

std::string check_transitivity_landscape() {
    SearchConfig c;
    c.workers = 0;
    c.universe_size = 2;
    c.grid_levels = 4;
    std::ostringstream bad;

    for (int index = 1; index <= 11; ++index) {
        AuditResult r =
            find_transitivity_counterexample(ScalarMeasureId::from_index(index), c);
        if (r.verdict == Verdict::Holds) {
            bad << "measure " << index << " claimed to hold; ";
        }
        if (index == 1 && r.verdict != Verdict::Refuted) {
            bad << "kosko not refuted at n=2 g=4; ";
        }
        if (r.verdict == Verdict::Refuted && !r.witness) {
            bad << "measure " << index << " refuted without witness; ";
        }
    }

    ScalarMeasureId kundu = ScalarMeasureId::from_index(12);
    struct Point {
        unsigned n, g;
    };
    for (Point p : {Point{2, 4}, Point{3, 3}, Point{2, 6}}) {
        SearchConfig k = c;
        k.universe_size = p.n;
        k.grid_levels = p.g;
        AuditResult r = find_transitivity_counterexample(kundu, k);
        if (r.verdict != Verdict::Inconclusive || r.witness) {
            bad << "kundu at n=" << p.n << " g=" << p.g << ": "
                << to_string(r.verdict) << "; ";
        }
    }

    std::mt19937_64 rng(20260823);
    UniverseRef u5 = Universe::numbered(5);
    std::uniform_int_distribution<int> pick(0, 12);
    int mismatches = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Rational> ga, gb;
        for (int i = 0; i < 5; ++i) {
            ga.emplace_back(pick(rng), 12);
            gb.emplace_back(pick(rng), 12);
        }
        FuzzySet a(u5, std::move(ga)), b(u5, std::move(gb));
        if (!(kundu_closed(a, b) == kundu_oracle(a, b, 12))) ++mismatches;
    }
    if (mismatches > 0) {
        bad << mismatches << " kundu closed-form mismatches in 10000 pairs; ";
    }

    std::string detail = bad.str();
    if (!detail.empty()) return fail(detail);
    return "";
}

std::string check_betweenness() {
    SearchConfig c;
    c.workers = 0;
    c.universe_size = 2;
    c.grid_levels = 4;
    std::ostringstream bad;

    AuditResult forward, converse, crisp;
    for (AuditResult& r : run_suite(Suite::Betweenness, c)) {
        if (r.property_id == "between.order-implies-metric") forward = std::move(r);
        else if (r.property_id == "between.metric-implies-order") converse = std::move(r);
        else if (r.property_id == "between.crisp-equivalence") crisp = std::move(r);
    }

    if (forward.verdict != Verdict::Holds) {
        bad << "order-implies-metric: " << to_string(forward.verdict) << "; ";
    }
    if (converse.verdict != Verdict::Refuted || !converse.witness) {
        bad << "metric-implies-order not refuted with witness; ";
    } else {
        const Witness& w = *converse.witness;
        std::string a, b, cc;
        for (const WitnessSet& ws : w.sets) {
            if (ws.role == "A") a = ws.set.str();
            if (ws.role == "B") b = ws.set.str();
            if (ws.role == "C") cc = ws.set.str();
        }
        if (w.universe_size != 1 || w.grid_levels != 2 || a != "[0]" ||
            b != "[1]" || cc != "[1/2]") {
            bad << "minimal witness is n=" << w.universe_size
                << " g=" << w.grid_levels << " A=" << a << " B=" << b
                << " C=" << cc << ", expected n=1 g=2 A=[0] B=[1] C=[1/2]; ";
        }
    }
    if (crisp.verdict != Verdict::Holds) {
        bad << "crisp-equivalence: " << to_string(crisp.verdict) << "; ";
    }

    std::string detail = bad.str();
    if (!detail.empty()) return fail(detail);
    return "";
}

std::string check_determinism() {
    std::ostringstream bad;

    SearchConfig base;
    base.universe_size = 2;
    base.grid_levels = 2;
    auto render = [](Suite suite, const SearchConfig& config) {
        Report report{std::string(suite_name(suite)), config,
                      run_suite(suite, config)};
        return report.text() + "\n" + report.json_text();
    };

    SearchConfig w1 = base;
    w1.workers = 1;
    SearchConfig w4 = base;
    w4.workers = 4;
    if (render(Suite::RelationDefinitions, w1) !=
        render(Suite::RelationDefinitions, w4)) {
        bad << "exhaustive report differs between workers=1 and workers=4; ";
    }
    if (render(Suite::DistanceD1D10, w1) != render(Suite::DistanceD1D10, w1)) {
        bad << "repeat exhaustive runs differ; ";
    }

    SearchConfig r1 = base;
    r1.universe_size = 3;
    r1.grid_levels = 5;
    r1.mode = SearchMode::Random;
    r1.trials = 20000;
    r1.seed = 11;
    r1.workers = 1;
    SearchConfig r4 = r1;
    r4.workers = 4;
    if (render(Suite::Betweenness, r1) != render(Suite::Betweenness, r4)) {
        bad << "random report differs between workers=1 and workers=4; ";
    }
    if (render(Suite::Betweenness, r4) != render(Suite::Betweenness, r4)) {
        bad << "repeat random runs differ; ";
    }

    std::string detail = bad.str();
    if (!detail.empty()) return fail(detail);
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria{
        {"worked-example-fidelity", check_worked_example},
        {"theorem-suites-exhaustive", check_theorems_exhaustive},
        {"theorem-suites-random", check_theorems_random},
        {"axiom-grid-lattice-row", check_axiom_grid},
        {"transitivity-landscape", check_transitivity_landscape},
        {"betweenness-split", check_betweenness},
        {"deterministic-reports", check_determinism},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        try {
            detail = criterion.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            std::cout << "[PASS] " << criterion.name << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << criterion.name << ": " << detail << "\n";
        }
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: criteria failed")
              << " (" << (criteria.size() - failures) << "/" << criteria.size()
              << ")\n";
    return failures == 0 ? 0 : 1;
}
