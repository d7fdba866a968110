#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hwz/identities.hpp"

using namespace hwz;

namespace {

MonotonePath path(int n, std::vector<Transposition> taus, Monotonicity kind = Monotonicity::weak) {
    return {n, std::move(taus), kind};
}

void require_ok(const IdentityReport& r) {
    INFO(r.name << " " << r.parameters);
    for (const auto& w : r.witnesses) INFO(w.input << ": expected " << w.expected << ", got " << w.actual);
    CHECK(r.status == ReportStatus::pass);
    CHECK(r.checked > 0);
}

}  // namespace

TEST_CASE("record-time map") {
    const auto w = path(5, {{1, 3}, {2, 3}, {1, 5}, {4, 5}});
    REQUIRE(w.is_monotone());
    REQUIRE(w.is_minimal());
    const auto image = phi_map(w);
    CHECK(image.n == 4);
    CHECK(image.kind == Monotonicity::strict);
    CHECK(image.taus == std::vector<Transposition>{{1, 3}});

    CHECK(phi_map(path(3, {{2, 3}})).taus.empty());
    CHECK(phi_map(path(3, {})).taus.empty());
    CHECK_THROWS_AS(phi_map(path(3, {{2, 3}, {1, 2}})), std::invalid_argument);
    // (1 2 3)(1 2)(1 2) returns to three... two cycles only: not minimal
    CHECK_THROWS_AS(phi_map(path(3, {{1, 2}, {1, 2}})), std::invalid_argument);
}

TEST_CASE("preimage counts") {
    CHECK(preimage_count(path(2, {}, Monotonicity::strict), 0) == 1);
    CHECK(preimage_count(path(3, {{1, 2}}, Monotonicity::strict), 2) == 2);
    CHECK(preimage_count(path(3, {}, Monotonicity::strict), 4) == 0);
}

TEST_CASE("Schroeder numbers and the recursion") {
    CHECK(schroeder_S(0, 0) == 1);
    CHECK(schroeder_S(0, 2) == 0);
    CHECK(schroeder_S(1, 0) == 1);
    CHECK(schroeder_S(1, 1) == 0);
    const long large[] = {1, 2, 6, 22, 90, 394};
    for (int n = 1; n <= 6; ++n) {
        CHECK(schroeder_S(n, 0) == large[n - 1]);
        CHECK(schroeder_hypergeometric(n) == large[n - 1]);
    }
    CHECK(schroeder_S(2, 1) == 2);
    require_ok(check_recursion(4, 2));
    require_ok(check_schroeder(6));
}

TEST_CASE("w(n; g)") {
    for (int n = 1; n <= 4; ++n) CHECK(w_weight(n, 0) == 1);
    for (int g = 0; g <= 4; ++g) CHECK(w_weight(1, g) == 1);
    CHECK(w_weight(2, 1) == 5);
    CHECK(w_weight(2, 2) == 1 + 4 + 16);
}

TEST_CASE("identity checks on small ranges") {
    for (const auto& r : check_duality(4)) require_ok(r);
    require_ok(check_reciprocity(3));
    require_ok(check_functional_relation(3, 2));
    require_ok(check_preimage(4));
    require_ok(check_weingarten(4, 4));
    require_ok(check_oracle_equivalence(3, 2));
    require_ok(check_parity(3, 2));
    require_ok(check_integrality(4, 2));
}

TEST_CASE("covariance duality: stated form is reported, variant holds") {
    const auto reports = check_covariance_duality(4);
    REQUIRE(reports.size() == 2);
    const auto& stated = reports[0];
    CHECK(stated.name == "covariance_duality.stated");
    CHECK(stated.ok());
    CHECK(stated.status == ReportStatus::discrepancy);
    CHECK_FALSE(stated.witnesses.empty());
    require_ok(reports[1]);
}

TEST_CASE("suites are deterministic and sorted") {
    SuiteOptions opt;
    opt.nmax = 3;
    opt.gmax = 1;
    opt.dmax = 2;
    opt.jobs = 2;
    const auto a = run_suite("all", opt);
    opt.jobs = 1;
    const auto b = run_suite("all", opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].checked == b[i].checked);
        if (i > 0) CHECK(a[i - 1].name <= a[i].name);
    }
    CHECK(all_ok(a));
    CHECK_THROWS_AS(run_suite("nonsense", opt), std::invalid_argument);
}
