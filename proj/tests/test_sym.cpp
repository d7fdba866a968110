#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hwz/perm_table.hpp"
#include "hwz/sym.hpp"

using namespace hwz;

TEST_CASE("partitions: counts, ordering and z") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));

    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].to_string() == "(3)");
    CHECK(p3[1].to_string() == "(2,1)");
    CHECK(p3[2].to_string() == "(1,1,1)");
    CHECK(p3[0] < p3[1]);

    auto mu = IntPartition::parse("1,2,2");
    CHECK(mu.parts() == std::vector<int>{2, 2, 1});
    CHECK(mu.z() == 8);
    CHECK(mu.class_size() == 15);
    CHECK_THROWS(IntPartition::parse("2,,1"));
    CHECK_THROWS(IntPartition::parse("0"));

    for (int n = 1; n <= 6; ++n) {
        std::uint64_t total = 0;
        for (const auto& p : partitions_of(n)) total += p.class_size();
        CHECK(total == factorial(n));
    }
}

TEST_CASE("permutations: composition applies the right factor first") {
    auto p = Permutation::from_cycles(3, {{1, 2}});
    auto q = Permutation::from_cycles(3, {{2, 3}});
    auto pq = p * q;  // 2 -> 3 -> 3, 3 -> 2 -> 1, 1 -> 1 -> 2
    CHECK(pq(1) == 2);
    CHECK(pq(2) == 3);
    CHECK(pq(3) == 1);
    CHECK((p * p).is_identity());
    CHECK((pq * pq.inverse()).is_identity());

    auto c = Permutation::canonical(IntPartition::parse("3,2,1"));
    CHECK(c.cycle_type().to_string() == "(3,2,1)");
    CHECK(c.num_cycles() == 3);
    CHECK(c.length() == 3);
    CHECK(Permutation::full_cycle(5).num_cycles() == 1);
}

TEST_CASE("multiplying by a transposition changes the cycle count by one") {
    for (const auto& s : all_permutations(5)) {
        for (int b = 2; b <= 5; ++b) {
            for (int a = 1; a < b; ++a) {
                const auto t = s * Permutation::transposition(5, a, b);
                CHECK(std::abs(t.num_cycles() - s.num_cycles()) == 1);
            }
        }
    }
}

TEST_CASE("set partitions: Bell numbers and refinement") {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 1; n <= 6; ++n) CHECK(set_partitions_coarser_than(SetPartition::finest(n)).size() == bell[n]);

    auto pi = SetPartition::from_blocks(4, {{1, 3}, {2}, {4}});
    auto coarser = set_partitions_coarser_than(pi);
    CHECK(coarser.size() == 5);
    std::set<SetPartition> unique(coarser.begin(), coarser.end());
    CHECK(unique.size() == coarser.size());
    for (const auto& sigma : coarser) CHECK(pi.refines(sigma));
    CHECK(SetPartition::finest(4).refines(pi));
    CHECK_FALSE(SetPartition::coarsest(4).refines(pi));
}

TEST_CASE("orbit partition of generators") {
    auto a = Permutation::from_cycles(5, {{1, 2}});
    auto b = Permutation::from_cycles(5, {{2, 4}});
    const Permutation gens[] = {a, b};
    auto orbits = orbit_partition(gens, 5);
    CHECK(orbits.num_blocks() == 3);
    CHECK(orbits.blocks() == std::vector<std::vector<int>>{{1, 2, 4}, {3}, {5}});
}

TEST_CASE("union-find rollback restores the class count") {
    UnionFind uf(5);
    uf.unite(0, 1);
    auto mark = uf.checkpoint();
    uf.unite(1, 2);
    uf.unite(3, 4);
    CHECK(uf.classes() == 2);
    uf.rollback(mark);
    CHECK(uf.classes() == 4);
    CHECK(uf.find(0) == uf.find(1));
    CHECK(uf.find(1) != uf.find(2));
}

TEST_CASE("permutation table indexes S_n consistently") {
    const auto& t = perm_table(4);
    CHECK(t.size() == 24);
    for (std::uint32_t i = 0; i < t.size(); ++i) {
        CHECK(t.index_of(t.perm(i)) == i);
        CHECK(t.perm(t.inverse_index(i)) == t.perm(i).inverse());
        CHECK(t.perm(t.right_mul(i, 2, 4)) == t.perm(i) * Permutation::transposition(4, 2, 4));
        CHECK(t.classes()[t.class_index(i)] == t.perm(i).cycle_type());
    }
}
