#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hwz/hurwitz.hpp"

using namespace hwz;

namespace {

IntPartition P(const char* s) { return IntPartition::parse(s); }

BigInt summed(const char* mu, const char* nu, int g, Monotonicity kind, Route route = Route::automatic) {
    return count_double_hurwitz(P(mu), P(nu), g, kind, route).summed;
}

}  // namespace

TEST_CASE("small path counts") {
    auto swap = Permutation::from_cycles(2, {{1, 2}});
    CHECK(count_paths_serial({swap, 2, 1, Monotonicity::weak}) == 1);
    CHECK(count_paths({swap, 2, 1, Monotonicity::weak}) == 1);
    CHECK(count_paths_fast({swap, 2, 1, Monotonicity::weak}) == 1);

    CHECK(count_paths_serial({Permutation::identity(1), 0, 0, Monotonicity::weak}) == 1);
    CHECK(count_paths_fast({Permutation::identity(1), 0, 0, Monotonicity::weak}) == 1);

    auto cyc = Permutation::full_cycle(3);
    for (int r = 3; r <= 8; ++r)
        for (int d = 0; d <= 3; ++d) {
            CHECK(count_paths({cyc, r, d, Monotonicity::strict}) == 0);
            CHECK(count_paths_fast({cyc, r, d, Monotonicity::strict}) == 0);
        }
    CHECK_THROWS_AS(count_paths({cyc, 2, -1, Monotonicity::weak}), std::invalid_argument);
}

TEST_CASE("n = 3, genus 0 table") {
    for (Route route : {Route::dfs, Route::fast}) {
        auto weak = hurwitz_row(P("1,1,1"), 0, Monotonicity::weak, route);
        auto strict = hurwitz_row(P("1,1,1"), 0, Monotonicity::strict, route);
        REQUIRE(weak.size() == 3);
        CHECK(weak[0].first == P("3"));
        CHECK(weak[0].second.summed == 4);
        CHECK(weak[1].second.summed == 12);
        CHECK(weak[2].second.summed == 8);
        CHECK(strict[0].second.summed == 2);
        CHECK(strict[1].second.summed == 0);
        CHECK(strict[2].second.summed == 0);
    }
}

TEST_CASE("one- and two-sheeted covers") {
    for (int g = 0; g <= 5; ++g) {
        CHECK(summed("1", "1", g, Monotonicity::weak) == (g == 0 ? 1 : 0));
        CHECK(summed("1", "1", g, Monotonicity::strict) == (g == 0 ? 1 : 0));
        CHECK(summed("2", "2", g, Monotonicity::weak) == 1);
        CHECK(summed("2", "1,1", g, Monotonicity::weak) == 1);
        CHECK(summed("2", "2", g, Monotonicity::weak, Route::dfs) == 1);
        CHECK(summed("2", "1,1", g, Monotonicity::weak, Route::dfs) == 1);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(count_double_hurwitz(P("2,1"), P("2"), 0, Monotonicity::weak), std::invalid_argument);
    CHECK_THROWS_AS(count_double_hurwitz(P("2"), P("2"), -1, Monotonicity::weak), std::invalid_argument);
    CHECK(parse_monotonicity("strict") == Monotonicity::strict);
    CHECK_THROWS(parse_monotonicity("loose"));
}

TEST_CASE("depth-first and group-algebra routes agree on all of S_4") {
    for (const auto& alpha : all_permutations(4)) {
        for (Monotonicity kind : {Monotonicity::weak, Monotonicity::strict}) {
            const PathTable table = path_table_fast(alpha, 6, kind);
            for (int r = 0; r <= 6; ++r) {
                for (int d = 0; d <= 2; ++d) {
                    const PathQuery q{alpha, r, d, kind};
                    const BigInt dfs = count_paths_serial(q);
                    CHECK(dfs == count_paths(q));
                    CHECK(dfs == count_paths_fast(q));
                    const int target = q.target_cycles();
                    CHECK(dfs == ((target >= 1 && target <= 4) ? table.with_cycles(r, target) : BigInt(0)));
                }
            }
        }
    }
}

TEST_CASE("routes agree on random queries in S_5 and S_6") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 24; ++trial) {
        const int n = 5 + trial % 2;
        const auto parts = partitions_of(n);
        const IntPartition& mu = parts[rng() % parts.size()];
        const IntPartition& nu = parts[rng() % parts.size()];
        const int g = static_cast<int>(rng() % 2);
        const auto kind = trial % 3 == 0 ? Monotonicity::strict : Monotonicity::weak;
        CHECK(count_double_hurwitz(mu, nu, g, kind, Route::dfs).summed ==
              count_double_hurwitz(mu, nu, g, kind, Route::fast).summed);
    }
}

TEST_CASE("per-representative counts do not depend on the representative") {
    for (const auto& mu : partitions_of(4)) {
        const BigInt ref = count_paths_serial({Permutation::canonical(mu), 5, 0, Monotonicity::weak});
        for (const auto& alpha : all_permutations(4))
            if (alpha.cycle_type() == mu) CHECK(count_paths_serial({alpha, 5, 0, Monotonicity::weak}) == ref);
    }
}

TEST_CASE("every visited path satisfies the defining conditions") {
    const auto alpha = Permutation::canonical(P("2,1,1"));
    for (Monotonicity kind : {Monotonicity::weak, Monotonicity::strict}) {
        const PathQuery q{alpha, 5, 1, kind};
        std::uint64_t visited = 0;
        for_each_path(q, [&](std::span<const Transposition> path, const Permutation& beta) {
            ++visited;
            Permutation end = alpha;
            std::vector<Permutation> gens{alpha};
            for (std::size_t i = 0; i < path.size(); ++i) {
                if (i > 0) {
                    if (kind == Monotonicity::weak) CHECK(path[i - 1].b <= path[i].b);
                    else CHECK(path[i - 1].b < path[i].b);
                }
                gens.push_back(path[i].as_permutation(4));
                end = end * gens.back();
            }
            CHECK(end == beta);
            CHECK(alpha.num_cycles() + beta.num_cycles() - 5 == 2 - 2 * 1);
            CHECK(orbit_partition(gens, 4).num_blocks() == 1);
        });
        CHECK(BigInt(static_cast<unsigned long>(visited)) == count_paths_serial(q));
    }
}

TEST_CASE("constellations equal strictly monotone numbers") {
    CHECK(count_constellations(P("1"), P("1"), 0) == 1);
    CHECK(count_constellations(P("1,1,1"), P("3"), 0) == 2);
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& nu : partitions_of(n))
                for (int g = 0; g <= 2; ++g)
                    CHECK(count_constellations(mu, nu, g) ==
                          count_double_hurwitz(mu, nu, g, Monotonicity::strict).summed);
}

TEST_CASE("resource guards") {
    Limits tight;
    tight.max_n_groupalgebra = 3;
    tight.max_n_dfs = 3;
    CHECK_THROWS_AS(path_table_fast(Permutation::identity(4), 2, Monotonicity::weak, tight), ResourceGuardError);
    CHECK_THROWS_AS(count_double_hurwitz(P("4"), P("4"), 0, Monotonicity::weak, Route::dfs, tight),
                    ResourceGuardError);
}
