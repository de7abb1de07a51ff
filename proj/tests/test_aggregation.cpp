#include "doctest.h"

#include <lfuzzy/errors.hpp>
#include <lfuzzy/aggregation.hpp>

#include <vector>

using namespace lfuzzy;

namespace {

UniverseRef u4() {
    static UniverseRef u = Universe::numbered(4);
    return u;
}

FuzzySet make(std::initializer_list<const char*> grades) {
    std::vector<Rational> gs;
    for (const char* g : grades) gs.push_back(Rational::parse(g));
    return FuzzySet(u4(), std::move(gs));
}

const FuzzySet A = make({"0.2", "0.3", "0", "0.9"});
const FuzzySet B = make({"0.3", "0.4", "0.2", "0.8"});

Partition halves() { return Partition(u4(), {{"1", "2"}, {"3", "4"}}); }

}  // namespace

TEST_CASE("partition construction validates its blocks") {
    CHECK_NOTHROW(halves());
    CHECK_NOTHROW(Partition(u4(), {{"4", "2"}, {"1"}, {"3"}}));
    CHECK_THROWS_AS(Partition(u4(), {}), DomainError);
    CHECK_THROWS_AS(Partition(u4(), {{"1", "2"}, {}}), DomainError);
    CHECK_THROWS_AS(Partition(u4(), {{"1", "2"}, {"2", "3", "4"}}), DomainError);
    CHECK_THROWS_AS(Partition(u4(), {{"1", "2"}, {"3"}}), DomainError);
    CHECK_THROWS_AS(Partition(u4(), {{"1", "2"}, {"3", "5"}}), DomainError);
}

TEST_CASE("partition errors name the offending block and label") {
    try {
        Partition(u4(), {{"1", "2"}, {"3", "5"}});
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        std::string what = e.what();
        CHECK(what.find("block 2") != std::string::npos);
        CHECK(what.find("\"5\"") != std::string::npos);
    }
    try {
        Partition(u4(), {{"1", "2"}, {"2", "3", "4"}});
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("\"2\"") != std::string::npos);
    }
}

TEST_CASE("block accessors expose order and sub-universes") {
    Partition p = halves();
    CHECK(p.block_count() == 2);
    CHECK(p.block_labels(0) == std::vector<std::string>{"1", "2"});
    CHECK(p.block_indices(1) == std::vector<std::size_t>{2, 3});
    CHECK(p.block_universe(1)->labels() == std::vector<std::string>{"3", "4"});
}

TEST_CASE("restriction keeps grades of the block in block order") {
    Partition p(u4(), {{"4", "2"}, {"1"}, {"3"}});
    FuzzySet r = restrict_to_block(A, p, 0);
    CHECK(r.universe()->labels() == std::vector<std::string>{"4", "2"});
    CHECK(r.grade(0) == Rational(9, 10));
    CHECK(r.grade(1) == Rational(3, 10));
}

TEST_CASE("aggregated kosko verdicts on the worked pair") {
    AggregatedInclusion agg =
        aggregate_incl(A, B, halves(), ScalarMeasureId::from_index(1));
    REQUIRE(agg.values.size() == 2);
    CHECK(agg.values[0].value == Rational::one());
    CHECK(!agg.values[0].degenerate);
    CHECK(agg.values[1].value == Rational(8, 9));
    CHECK(!agg.values[1].degenerate);
}

TEST_CASE("a single block reproduces the global measure") {
    Partition whole(u4(), {{"1", "2", "3", "4"}});
    AggregatedInclusion agg =
        aggregate_incl(A, B, whole, ScalarMeasureId::from_index(1));
    REQUIRE(agg.values.size() == 1);
    CHECK(agg.values[0].value == Rational(13, 14));
}

TEST_CASE("singleton blocks give elementwise verdicts with degeneracy") {
    Partition singles(u4(), {{"1"}, {"2"}, {"3"}, {"4"}});
    AggregatedInclusion agg =
        aggregate_incl(A, B, singles, ScalarMeasureId::from_index(1));
    REQUIRE(agg.values.size() == 4);
    CHECK(agg.values[0].value == Rational::one());
    CHECK(agg.values[1].value == Rational::one());
    CHECK(agg.values[2].value == Rational::one());
    CHECK(agg.values[2].degenerate);
    CHECK(agg.values[3].value == Rational(8, 9));
    CHECK(!agg.values[0].degenerate);
    CHECK(!agg.values[3].degenerate);
}

TEST_CASE("block verdicts depend only on grades inside the block") {
    Partition p = halves();
    FuzzySet a2 = make({"0.2", "0.3", "1", "0.1"});
    FuzzySet b2 = make({"0.3", "0.4", "0.5", "0.5"});
    for (int index : {1, 2, 9, 12}) {
        ScalarMeasureId id = ScalarMeasureId::from_index(index);
        CHECK(aggregate_incl(A, B, p, id).values[0] ==
              aggregate_incl(a2, b2, p, id).values[0]);
    }
}

TEST_CASE("aggregation requires sets on the partition universe") {
    UniverseRef other = Universe::make({"a", "b", "c", "d"});
    FuzzySet foreign(other, std::vector<Rational>(4, Rational::half()));
    CHECK_THROWS_AS(aggregate_incl(foreign, foreign, halves(),
                                   ScalarMeasureId::from_index(1)),
                    DomainError);
}
