#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hwz/weingarten.hpp"

using namespace hwz;

namespace {
const RatFunc z = RatFunc::variable('z');
IntPartition P(const char* s) { return IntPartition::parse(s); }
}  // namespace

TEST_CASE("omega on small groups") {
    CHECK(omega(1).at(P("1")) == z);
    CHECK(omega(2).at(P("1,1")) == z * z);
    CHECK(omega(2).at(P("2")) == z);
    CHECK(omega(3).at(P("2,1")) == z * z);
    CHECK(omega(3).at(P("3")) == z);
}

TEST_CASE("convolution identities") {
    for (int n = 1; n <= 5; ++n) CHECK(convolve(omega(n), CentralElement::delta_id(n)) == omega(n));
    CentralElement t(2);
    t.set(P("2"), RatFunc(1));
    CHECK(convolve(t, t).at(P("1,1")) == RatFunc(1));
    CHECK(convolve(t, t).at(P("2")) == RatFunc(0));
}

TEST_CASE("Weingarten function: closed forms and defining identity") {
    CHECK(wg(1).at(P("1")) == RatFunc(1) / z);
    CHECK(wg(2).at(P("1,1")) == RatFunc(1) / (z * z - RatFunc(1)));
    CHECK(wg(2).at(P("2")) == RatFunc(-1) / (z * (z * z - RatFunc(1))));
    for (int n = 1; n <= 6; ++n) {
        const auto w = wg(n);
        CHECK(convolve(w, omega(n)) == CentralElement::delta_id(n));
        CHECK(convolve(omega(n), w) == CentralElement::delta_id(n));
        CHECK(wg_poles_in_range(w));
    }
}

TEST_CASE("pole check rejects out-of-range poles") {
    CentralElement bad(2);
    bad.set(P("2"), RatFunc(1) / (z - RatFunc(2)));
    CHECK_FALSE(wg_poles_in_range(bad));
}

TEST_CASE("Jucys-Murphy factorization") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(omega_via_jm(n) == omega(n));
        CHECK(omega_via_strict_tuples(n) == omega(n));
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) CHECK(jucys_murphy(5, i) * jucys_murphy(5, j) == jucys_murphy(5, j) * jucys_murphy(5, i));
    CHECK_FALSE(jucys_murphy(3, 3).is_central());
    CHECK_THROWS_AS(jucys_murphy(3, 2).to_central(), std::logic_error);
}

TEST_CASE("monotone expansion of the Weingarten function") {
    CHECK(wg_series(1, 5)[0].terms().size() == 1);
    for (int n = 1; n <= 5; ++n) {
        const auto w = wg(n);
        for (int order = 0; order <= 6; ++order) {
            const auto series = wg_series(n, order);
            for (std::size_t k = 0; k < series.size(); ++k)
                CHECK(series[k] == series_expand_at_infinity(w.values()[k], n + order));
        }
    }
}
