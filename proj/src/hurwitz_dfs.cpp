#include <cstdint>
#include <cstdlib>

#include "hwz/hurwitz.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hwz {

int PathQuery::target_cycles() const { return 2 - 2 * d - alpha.num_cycles() + r; }

namespace {

struct DfsState {
    int n;
    std::vector<std::uint8_t> cur;
    int cycles;
    UnionFind uf;
    std::vector<Transposition> path;

    explicit DfsState(const Permutation& alpha)
        : n(alpha.size()),
          cur(alpha.raw().begin(), alpha.raw().end()),
          cycles(alpha.num_cycles()),
          uf(alpha.size()) {
        for (int k = 0; k < n; ++k) uf.unite(k, cur[k]);
    }

    bool same_cycle(int x, int y) const {
        for (int j = cur[x];; j = cur[j]) {
            if (j == y) return true;
            if (j == x) return false;
        }
    }
};

struct Move {
    int a;
    int b;
};

class Search {
public:
    Search(int r, int target, bool strict) : r_(r), target_(target), strict_(strict) {}

    // Applies (a b) when the pruning bounds allow it; returns false otherwise
    // and leaves the state untouched.
    bool push(DfsState& s, int depth, Move m, std::size_t& mark) const {
        const int after = r_ - depth - 1;
        const bool split = s.same_cycle(m.a - 1, m.b - 1);
        const int cycles = s.cycles + (split ? 1 : -1);
        if (std::abs(cycles - target_) > after) return false;
        mark = s.uf.checkpoint();
        s.uf.unite(m.a - 1, m.b - 1);
        if (s.uf.classes() - 1 > after) {
            s.uf.rollback(mark);
            return false;
        }
        std::swap(s.cur[m.a - 1], s.cur[m.b - 1]);
        s.cycles = cycles;
        s.path.emplace_back(m.a, m.b);
        return true;
    }

    void pop(DfsState& s, Move m, std::size_t mark, int cycles_before) const {
        s.path.pop_back();
        s.cycles = cycles_before;
        std::swap(s.cur[m.a - 1], s.cur[m.b - 1]);
        s.uf.rollback(mark);
    }

    template <class Leaf>
    void run(DfsState& s, int depth, int lastb, Leaf& leaf) const {
        const int remaining = r_ - depth;
        if (remaining == 0) {
            if (s.cycles == target_ && s.uf.classes() == 1) leaf(s);
            return;
        }
        const int first_b = strict_ ? lastb + 1 : std::max(lastb, 2);
        for (int b = first_b; b <= s.n; ++b) {
            // strict paths need distinct b values for every remaining step
            if (strict_ && s.n - b < remaining - 1) break;
            for (int a = 1; a < b; ++a) {
                const int before = s.cycles;
                std::size_t mark = 0;
                if (!push(s, depth, {a, b}, mark)) continue;
                run(s, depth + 1, b, leaf);
                pop(s, {a, b}, mark, before);
            }
        }
    }

private:
    int r_;
    int target_;
    bool strict_;
};

bool trivially_empty(const PathQuery& q) {
    if (q.d < 0 || q.r < 0) throw std::invalid_argument("path query needs r >= 0 and d >= 0");
    const int n = q.alpha.size();
    const int target = q.target_cycles();
    if (target < 1 || target > n) return true;
    if ((q.alpha.num_cycles() + q.r - target) % 2 != 0) return true;
    if (q.kind == Monotonicity::strict && q.r > n - 1) return true;
    return false;
}

struct CountLeaf {
    const IntPartition* type;
    std::uint64_t count = 0;
    void operator()(const DfsState& s) {
        if (type) {
            if (Permutation::from_raw(s.cur).cycle_type() != *type) return;
        }
        ++count;
    }
};

}  // namespace

FactorizationCount count_paths_serial(const PathQuery& q, const IntPartition* beta_type) {
    require_dfs(q.alpha.size());
    if (trivially_empty(q)) return 0;
    DfsState s(q.alpha);
    Search search(q.r, q.target_cycles(), q.kind == Monotonicity::strict);
    CountLeaf leaf{beta_type};
    search.run(s, 0, 0, leaf);
    return BigInt(static_cast<unsigned long>(leaf.count));
}

FactorizationCount count_paths(const PathQuery& q, const IntPartition* beta_type) {
    require_dfs(q.alpha.size());
    if (trivially_empty(q)) return 0;
    if (q.r == 0) return count_paths_serial(q, beta_type);

    const int n = q.alpha.size();
    const bool strict = q.kind == Monotonicity::strict;
    std::vector<Move> first;
    for (int b = 2; b <= n; ++b)
        for (int a = 1; a < b; ++a) first.push_back({a, b});

    const Search search(q.r, q.target_cycles(), strict);
    const long moves = static_cast<long>(first.size());
    unsigned long long total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (long i = 0; i < moves; ++i) {
        DfsState s(q.alpha);
        std::size_t mark = 0;
        const Move m = first[i];
        if (strict && n - m.b < q.r - 1) continue;
        if (!search.push(s, 0, m, mark)) continue;
        CountLeaf leaf{beta_type};
        search.run(s, 1, m.b, leaf);
        total += leaf.count;
    }
    return BigInt(static_cast<unsigned long>(total));
}

void for_each_path(const PathQuery& q, const PathVisitor& visit) {
    require_dfs(q.alpha.size());
    if (trivially_empty(q)) return;
    DfsState s(q.alpha);
    Search search(q.r, q.target_cycles(), q.kind == Monotonicity::strict);
    auto leaf = [&](const DfsState& st) { visit(st.path, Permutation::from_raw(st.cur)); };
    search.run(s, 0, 0, leaf);
}

}  // namespace hwz
