#include "doctest.h"

#include <lfuzzy/errors.hpp>
#include <lfuzzy/audit/axiom_grid.hpp>
#include <lfuzzy/audit/engine.hpp>
#include <lfuzzy/audit/grid_space.hpp>
#include <lfuzzy/audit/report.hpp>

#include <cstdlib>
#include <map>
#include <string>

using namespace lfuzzy;
using namespace lfuzzy::audit;

namespace {

SearchConfig small() {
    SearchConfig c;
    c.universe_size = 2;
    c.grid_levels = 2;
    return c;
}

AuditResult run_relation(RelationKind kind, RelationProperty prop) {
    return check_relation_property(kind, prop, small());
}

std::string witness_grades(const AuditResult& r, std::string_view role) {
    REQUIRE(r.witness.has_value());
    for (const auto& ws : r.witness->sets) {
        if (ws.role == role) return ws.set.str();
    }
    FAIL("no witness role " << std::string(role));
    return {};
}

}  // namespace

TEST_CASE("grid spaces enumerate sets lexicographically") {
    GridSpace grid(2, 2);
    CHECK(grid.set_count() == 9);
    CHECK(grid.crisp_count() == 4);
    CHECK(grid.set_at(0).str() == "[0, 0]");
    CHECK(grid.set_at(1).str() == "[0, 1/2]");
    CHECK(grid.set_at(2).str() == "[0, 1]");
    CHECK(grid.set_at(3).str() == "[1/2, 0]");
    CHECK(grid.set_at(8).str() == "[1, 1]");
    CHECK(grid.crisp_at(0).bit_string() == "00");
    CHECK(grid.crisp_at(1).bit_string() == "01");
    CHECK(grid.crisp_at(2).bit_string() == "10");
    CHECK(grid.crisp_at(3).bit_string() == "11");
    CHECK_THROWS_AS(GridSpace(64, 9), DomainError);
}

TEST_CASE("search config validation") {
    SearchConfig c = small();
    CHECK_NOTHROW(c.validate());
    c.universe_size = 0;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = small();
    c.grid_levels = 0;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = small();
    c.mode = SearchMode::Random;
    c.trials = 0;
    CHECK_THROWS_AS(c.validate(), DomainError);
    CHECK(search_mode_from_name("exhaustive") == SearchMode::Exhaustive);
    CHECK(search_mode_from_name("random") == SearchMode::Random);
    CHECK_THROWS_AS(search_mode_from_name("sideways"), DomainError);
}

TEST_CASE("case cap honours the environment override") {
    ::setenv(std::string(kCaseCapEnvVar).c_str(), "5000", 1);
    CHECK(SearchConfig::default_case_cap() == 5000);
    ::unsetenv(std::string(kCaseCapEnvVar).c_str());
    CHECK(SearchConfig::default_case_cap() == 100000000ULL);
}

TEST_CASE("definition checks sort the relations by their properties") {
    using K = RelationKind;
    using P = RelationProperty;
    const std::map<std::pair<K, P>, Verdict> expected{
        {{K::Inclusion, P::Reflexive}, Verdict::Holds},
        {{K::Inclusion, P::Symmetric}, Verdict::Refuted},
        {{K::Inclusion, P::Antisymmetric}, Verdict::Holds},
        {{K::Inclusion, P::MeetTransitive}, Verdict::Holds},
        {{K::Inclusion, P::JoinTransitive}, Verdict::Holds},
        {{K::Similarity, P::Reflexive}, Verdict::Holds},
        {{K::Similarity, P::Symmetric}, Verdict::Holds},
        {{K::Similarity, P::Antisymmetric}, Verdict::Refuted},
        {{K::Similarity, P::MeetTransitive}, Verdict::Holds},
        {{K::Similarity, P::JoinTransitive}, Verdict::Refuted},
        {{K::Distance, P::Reflexive}, Verdict::Refuted},
        {{K::Distance, P::Symmetric}, Verdict::Holds},
        {{K::Distance, P::Antisymmetric}, Verdict::Refuted},
        {{K::Distance, P::MeetTransitive}, Verdict::Refuted},
        {{K::Distance, P::JoinTransitive}, Verdict::Holds},
    };
    for (const auto& [combo, verdict] : expected) {
        AuditResult r = run_relation(combo.first, combo.second);
        CAPTURE(r.property_id);
        CHECK(r.verdict == verdict);
        CHECK(r.witness.has_value() == (verdict == Verdict::Refuted));
        if (r.theorem) CHECK(verdict == Verdict::Holds);
    }
}

TEST_CASE("refutations carry minimal witnesses") {
    AuditResult r = run_relation(RelationKind::Inclusion, RelationProperty::Symmetric);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->universe_size == 1);
    CHECK(r.witness->grid_levels == 1);
    CHECK(witness_grades(r, "A") == "[0]");
    CHECK(witness_grades(r, "B") == "[1]");

    r = run_relation(RelationKind::Distance, RelationProperty::Reflexive);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->universe_size == 1);
    CHECK(r.witness->grid_levels == 1);
    CHECK(witness_grades(r, "A") == "[0]");

    r = run_relation(RelationKind::Similarity, RelationProperty::Antisymmetric);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->universe_size == 2);
    CHECK(r.witness->grid_levels == 1);
    CHECK(witness_grades(r, "A") == "[0, 0]");
    CHECK(witness_grades(r, "B") == "[0, 1]");

    r = run_relation(RelationKind::Distance, RelationProperty::MeetTransitive);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->universe_size == 1);
    CHECK(r.witness->grid_levels == 1);
    CHECK(witness_grades(r, "A") == "[0]");
    CHECK(witness_grades(r, "B") == "[0]");
    CHECK(witness_grades(r, "C") == "[1]");
}

TEST_CASE("witness stats count tuples up to the first violation") {
    AuditResult r = run_relation(RelationKind::Distance, RelationProperty::Reflexive);
    CHECK(r.stats.mode == SearchMode::Exhaustive);
    CHECK(r.stats.space == 9);
    CHECK(r.stats.cases == 1);

    r = run_relation(RelationKind::Inclusion, RelationProperty::Reflexive);
    CHECK(r.stats.space == 9);
    CHECK(r.stats.cases == 9);
}

TEST_CASE("theorem suites hold exhaustively on the small grid") {
    for (Suite suite : {Suite::InclusionI1I12, Suite::SimilarityS1S10,
                        Suite::DistanceD1D10, Suite::Thresholds,
                        Suite::LatticeLaws}) {
        for (const AuditResult& r : run_suite(suite, small())) {
            CAPTURE(r.property_id);
            if (r.theorem) CHECK(r.verdict == Verdict::Holds);
        }
    }
}

TEST_CASE("betweenness separates the order and metric notions") {
    std::map<std::string, AuditResult> results;
    for (AuditResult& r : run_suite(Suite::Betweenness, small())) {
        results.emplace(r.property_id, std::move(r));
    }
    REQUIRE(results.size() == 3);

    const AuditResult& forward = results.at("between.order-implies-metric");
    CHECK(forward.theorem);
    CHECK(forward.verdict == Verdict::Holds);

    const AuditResult& converse = results.at("between.metric-implies-order");
    CHECK(!converse.theorem);
    CHECK(converse.verdict == Verdict::Refuted);
    REQUIRE(converse.witness.has_value());
    CHECK(converse.witness->universe_size == 1);
    CHECK(converse.witness->grid_levels == 2);
    CHECK(witness_grades(converse, "A") == "[0]");
    CHECK(witness_grades(converse, "B") == "[1]");
    CHECK(witness_grades(converse, "C") == "[1/2]");

    const AuditResult& crisp = results.at("between.crisp-equivalence");
    CHECK(crisp.theorem);
    CHECK(crisp.verdict == Verdict::Holds);
}

TEST_CASE("random mode is sound and never claims Holds") {
    SearchConfig c;
    c.universe_size = 3;
    c.grid_levels = 6;
    c.mode = SearchMode::Random;
    c.trials = 400;
    c.seed = 123;
    for (const AuditResult& r : run_suite(Suite::InclusionI1I12, c)) {
        CAPTURE(r.property_id);
        CHECK(r.verdict != Verdict::Holds);
        if (r.verdict == Verdict::Inconclusive) {
            CHECK(r.note.find("400") != std::string::npos);
        }
        CHECK(r.stats.mode == SearchMode::Random);
        CHECK(r.stats.space == 400);
    }
}

TEST_CASE("random refutations still minimise their witness") {
    SearchConfig c;
    c.universe_size = 2;
    c.grid_levels = 2;
    c.mode = SearchMode::Random;
    c.trials = 4000;
    c.seed = 9;
    AuditResult r = check_relation_property(RelationKind::Distance,
                                            RelationProperty::Reflexive, c);
    REQUIRE(r.verdict == Verdict::Refuted);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->universe_size == 1);
    CHECK(r.witness->grid_levels == 1);
    CHECK(witness_grades(r, "A") == "[0]");
}

TEST_CASE("reports are identical across worker counts") {
    SearchConfig one = small();
    one.workers = 1;
    SearchConfig four = small();
    four.workers = 4;

    Report a{std::string(suite_name(Suite::RelationDefinitions)), one,
             run_suite(Suite::RelationDefinitions, one)};
    Report b{std::string(suite_name(Suite::RelationDefinitions)), four,
             run_suite(Suite::RelationDefinitions, four)};
    CHECK(a.text() == b.text());
    CHECK(a.json_text() == b.json_text());
    // refuted non-theorems are recorded but do not fail the report
    CHECK(a.pass());
    unsigned refuted = 0;
    for (const AuditResult& r : a.results) {
        if (r.verdict == Verdict::Refuted) ++refuted;
    }
    CHECK(refuted == 6);

    SearchConfig r1 = one;
    r1.mode = SearchMode::Random;
    r1.trials = 600;
    r1.seed = 77;
    SearchConfig r4 = r1;
    r4.workers = 3;
    Report c{std::string(suite_name(Suite::Betweenness)), r1,
             run_suite(Suite::Betweenness, r1)};
    Report d{std::string(suite_name(Suite::Betweenness)), r4,
             run_suite(Suite::Betweenness, r4)};
    CHECK(c.text() == d.text());
    CHECK(c.json_text() == d.json_text());
}

TEST_CASE("exhaustive spaces beyond the cap are rejected up front") {
    SearchConfig c = small();
    c.case_cap = 10;
    std::vector<Property> props = suite_properties(Suite::InclusionI1I12);
    try {
        run_property(props.front(), c);
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK(e.estimated_cases() == 81);
        CHECK(e.cap() == 10);
        CHECK(std::string(e.what()).find("81") != std::string::npos);
    }
}

TEST_CASE("tuple spaces multiply fuzzy and crisp quantifiers") {
    std::vector<Property> thresholds = suite_properties(Suite::Thresholds);
    bool saw_mixed = false;
    for (const Property& p : thresholds) {
        if (p.crisp_arity > 0 && p.fuzzy_arity == 3) {
            std::uint64_t expect = 9ULL * 9 * 9 * 4;
            CHECK(tuple_space_size(p, small()) == expect);
            saw_mixed = true;
            break;
        }
    }
    CHECK(saw_mixed);
}

TEST_CASE("scalar transitivity search separates kosko from kundu") {
    SearchConfig c = small();
    AuditResult kosko =
        find_transitivity_counterexample(ScalarMeasureId::from_index(1), c);
    CHECK(kosko.verdict == Verdict::Refuted);
    REQUIRE(kosko.witness.has_value());
    CHECK(kosko.witness->universe_size == 2);
    CHECK(kosko.witness->grid_levels == 1);
    CHECK(witness_grades(kosko, "A") == "[0, 1]");
    CHECK(witness_grades(kosko, "B") == "[1, 0]");
    CHECK(witness_grades(kosko, "C") == "[1, 1]");

    AuditResult kundu =
        find_transitivity_counterexample(ScalarMeasureId::from_index(12), c);
    CHECK(kundu.verdict == Verdict::Inconclusive);
    CHECK(!kundu.witness.has_value());
    CHECK(kundu.note.find("no violation") != std::string::npos);
}

TEST_CASE("witnesses render as loadable set files") {
    AuditResult r = run_relation(RelationKind::Inclusion, RelationProperty::Symmetric);
    REQUIRE(r.witness.has_value());
    std::string json = r.witness->sets_file_json();
    CHECK(json.find("\"universe\"") != std::string::npos);
    CHECK(json.find("\"A\"") != std::string::npos);
    CHECK(json.find("\"B\"") != std::string::npos);
}

TEST_CASE("suite names round-trip") {
    for (Suite s : all_suites()) {
        CHECK(suite_from_name(suite_name(s)) == s);
    }
    CHECK_THROWS_AS(suite_from_name("unknown"), DomainError);
    CHECK(suite_properties(Suite::InclusionI1I12).size() == 12);
    CHECK(suite_properties(Suite::RelationDefinitions).size() == 15);
    CHECK(suite_properties(Suite::Betweenness).size() == 3);
}
