#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hwz/cumulants.hpp"
#include "hwz/serialize.hpp"
#include "hwz/weingarten.hpp"

using namespace hwz;

TEST_CASE("rationals and partitions") {
    for (const char* s : {"0", "-3", "128/63", "-7/2"}) {
        const BigRat q = parse_rational(s);
        CHECK(rational_from_json(to_json(q)) == q);
    }
    CHECK(rational_from_json(nlohmann::json(5)) == 5);
    const IntPartition mu = IntPartition::parse("3,1,1");
    CHECK(to_json(mu).dump() == "[3,1,1]");
    CHECK(partition_from_json(to_json(mu)) == mu);
}

TEST_CASE("Weingarten values survive a text round trip") {
    const CentralElement w = wg(4);
    for (const RatFunc& f : w.values()) {
        const auto text = to_json(f).dump();
        CHECK(ratfunc_from_json(nlohmann::json::parse(text)) == f);
    }
}

TEST_CASE("cumulant series round trip") {
    const CumulantSeries s = scaled_cumulant_hurwitz({IntPartition::parse("2,1"), Ensemble::inverse}, 2);
    const auto back = series_from_json(nlohmann::json::parse(to_json(s).dump()));
    CHECK(back == s);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(rational_from_json(nlohmann::json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(ratfunc_from_json(nlohmann::json{{"num", {"1"}}, {"den", {"1"}}, {"var", "zz"}}),
                    std::invalid_argument);
    CHECK_THROWS(partition_from_json(nlohmann::json{0, 1}));
}
