#include "doctest.h"

#include <lfuzzy/errors.hpp>
#include <lfuzzy/set_collection.hpp>

#include <string>

using namespace lfuzzy;

namespace {

const std::string kDataDir = LFUZZY_TEST_DATA_DIR;

}  // namespace

TEST_CASE("loading the example file yields the expected sets") {
    SetCollection sets = SetCollection::load(kDataDir + "/example_sets.json");
    CHECK(sets.universe()->labels() ==
          std::vector<std::string>{"1", "2", "3", "4"});
    REQUIRE(sets.sets().size() == 5);
    CHECK(sets.sets()[0].first == "A");
    CHECK(sets.sets()[4].first == "Phi");
    CHECK(sets.at("A").grade(0) == Rational(1, 5));
    CHECK(sets.at("A").grade(3) == Rational(9, 10));
    CHECK(sets.at("Theta").is_crisp());
    CHECK(sets.contains("C"));
    CHECK(!sets.contains("Z"));
}

TEST_CASE("missing sets are reported by name") {
    SetCollection sets = SetCollection::load(kDataDir + "/example_sets.json");
    try {
        sets.at("Z");
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("\"Z\"") != std::string::npos);
    }
}

TEST_CASE("grades accept fraction and decimal spellings") {
    SetCollection sets = SetCollection::from_json_text(R"({
        "universe": ["x", "y"],
        "sets": {"S": ["1/3", "0.25"]}
    })");
    CHECK(sets.at("S").grade(0) == Rational(1, 3));
    CHECK(sets.at("S").grade(1) == Rational(1, 4));
}

TEST_CASE("malformed documents fail with pointed messages") {
    CHECK_THROWS_AS(SetCollection::from_json_text("not json"), ParseError);
    CHECK_THROWS_AS(SetCollection::from_json_text("[]"), ParseError);
    CHECK_THROWS_AS(SetCollection::from_json_text(R"({"sets": {}})"), ParseError);
    CHECK_THROWS_AS(SetCollection::from_json_text(R"({"universe": ["1"]})"),
                    ParseError);
    CHECK_THROWS_AS(
        SetCollection::from_json_text(R"({"universe": [], "sets": {}})"),
        ParseError);
    CHECK_THROWS_AS(
        SetCollection::from_json_text(
            R"({"universe": ["1", "1"], "sets": {}})"),
        ParseError);

    try {
        SetCollection::from_json_text(
            R"({"universe": ["1", "2"], "sets": {"A": ["0.2"]}})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("\"A\"") != std::string::npos);
    }
    try {
        SetCollection::from_json_text(
            R"({"universe": ["1", "2"], "sets": {"A": ["0.2", "nope"]}})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        std::string what = e.what();
        CHECK(what.find("\"A\"") != std::string::npos);
        CHECK(what.find("\"2\"") != std::string::npos);
    }
    try {
        SetCollection::from_json_text(
            R"({"universe": ["1", "2"], "sets": {"A": ["0.2", "1.5"]}})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("\"A\"") != std::string::npos);
    }
}

TEST_CASE("collections round-trip through their JSON rendering") {
    SetCollection sets = SetCollection::load(kDataDir + "/example_sets.json");
    SetCollection again = SetCollection::from_json_text(sets.to_json_text());
    CHECK(same_universe(sets.universe(), again.universe()));
    REQUIRE(again.sets().size() == sets.sets().size());
    for (std::size_t i = 0; i < sets.sets().size(); ++i) {
        CHECK(again.sets()[i].first == sets.sets()[i].first);
        CHECK(again.sets()[i].second == sets.sets()[i].second);
    }
    CHECK(sets.to_json_text() == again.to_json_text());
}

TEST_CASE("partitions load against the collection universe") {
    SetCollection sets = SetCollection::load(kDataDir + "/example_sets.json");
    Partition p = load_partition(kDataDir + "/partition_2x2.json", sets.universe());
    CHECK(p.block_count() == 2);
    CHECK(p.block_labels(0) == std::vector<std::string>{"1", "2"});

    CHECK_THROWS_AS(partition_from_json_text("{}", sets.universe()), ParseError);
    CHECK_THROWS_AS(partition_from_json_text(R"({"blocks": "x"})", sets.universe()),
                    ParseError);
    CHECK_THROWS_AS(
        partition_from_json_text(R"({"blocks": [["1"]]})", sets.universe()),
        DomainError);
}

TEST_CASE("files that do not exist are reported with their path") {
    try {
        SetCollection::load(kDataDir + "/absent.json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("absent.json") != std::string::npos);
    }
}
