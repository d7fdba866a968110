#include <algorithm>
#include <mutex>

#include "hwz/hurwitz.hpp"
#include "hwz/perm_table.hpp"

namespace hwz {

FactorizationCount PathTable::at(int r, const IntPartition& beta_type) const {
    auto it = counts_.find({r, beta_type});
    return it == counts_.end() ? FactorizationCount(0) : it->second;
}

FactorizationCount PathTable::with_cycles(int r, int cycles) const {
    FactorizationCount total = 0;
    for (const auto& [key, c] : counts_)
        if (key.first == r && key.second.length() == cycles) total += c;
    return total;
}

void PathTable::add(int r, const IntPartition& beta_type, const FactorizationCount& c) {
    if (c == 0) return;
    auto& slot = counts_[{r, beta_type}];
    slot += c;
    if (slot == 0) counts_.erase({r, beta_type});
}

namespace {

using u128 = unsigned __int128;
using TypeKey = std::vector<int>;  // cycle lengths, descending
using BlockGF = std::map<std::pair<int, TypeKey>, BigInt>;

BigInt to_big(u128 v) {
    BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
    BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
    return (hi << 64) + lo;
}

// All (not necessarily transitive) paths of length <= rmax from alpha in S_m,
// by length and cycle type of the end point.
BlockGF block_gf(const std::vector<std::uint8_t>& alpha, int rmax, Monotonicity kind) {
    const int m = static_cast<int>(alpha.size());
    const PermTable& table = perm_table(m);
    const std::size_t size = table.size();
    std::vector<std::vector<u128>> w(rmax + 1, std::vector<u128>(size, 0));
    w[0][table.index_of(Permutation::from_raw(alpha))] = 1;

    auto apply_jm = [&](const std::vector<u128>& from, std::vector<u128>& to, int b) {
        for (std::uint32_t i = 0; i < size; ++i) {
            if (from[i] == 0) continue;
            for (int a = 1; a < b; ++a) {
                u128& slot = to[table.right_mul(i, a, b)];
                if (__builtin_add_overflow(slot, from[i], &slot))
                    throw std::overflow_error("path count exceeds 128 bits");
            }
        }
    };

    for (int b = 2; b <= m; ++b) {
        if (kind == Monotonicity::weak) {
            // w[d] already holds the new w[d-1] when d is visited: repeated J_b
            for (int d = 1; d <= rmax; ++d) apply_jm(w[d - 1], w[d], b);
        } else {
            for (int d = rmax; d >= 1; --d) apply_jm(w[d - 1], w[d], b);
        }
    }

    BlockGF out;
    for (int d = 0; d <= rmax; ++d)
        for (std::uint32_t i = 0; i < size; ++i)
            if (w[d][i] != 0) out[{d, table.perm(i).cycle_type().parts()}] += to_big(w[d][i]);
    return out;
}

BlockGF multiply(const BlockGF& x, const BlockGF& y, int rmax) {
    BlockGF out;
    for (const auto& [kx, cx] : x) {
        for (const auto& [ky, cy] : y) {
            const int r = kx.first + ky.first;
            if (r > rmax) continue;
            TypeKey type = kx.second;
            type.insert(type.end(), ky.second.begin(), ky.second.end());
            std::sort(type.begin(), type.end(), std::greater<>());
            out[{r, std::move(type)}] += cx * cy;
        }
    }
    return out;
}

struct BlockCache {
    std::mutex mutex;
    std::map<std::tuple<std::vector<std::uint8_t>, int, Monotonicity>, BlockGF> entries;
};

BlockCache& block_cache() {
    static BlockCache cache;
    return cache;
}

const BlockGF& cached_block_gf(const std::vector<std::uint8_t>& alpha, int rmax, Monotonicity kind) {
    BlockCache& cache = block_cache();
    auto key = std::make_tuple(alpha, rmax, kind);
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return it->second;
    }
    BlockGF gf = block_gf(alpha, rmax, kind);
    std::lock_guard lock(cache.mutex);
    return cache.entries.emplace(std::move(key), std::move(gf)).first->second;
}

// alpha restricted to an invariant block, relabelled 0..|B|-1 in increasing order.
// Relabelling preserves the order of points, hence monotonicity.
std::vector<std::uint8_t> restrict_to(std::span<const std::uint8_t> alpha, const std::vector<int>& block) {
    std::vector<int> local(alpha.size(), -1);
    for (std::size_t k = 0; k < block.size(); ++k) local[block[k] - 1] = static_cast<int>(k);
    std::vector<std::uint8_t> out(block.size());
    for (std::size_t k = 0; k < block.size(); ++k) {
        const int image = local[alpha[block[k] - 1]];
        if (image < 0) throw std::logic_error("block is not invariant under alpha");
        out[k] = static_cast<std::uint8_t>(image);
    }
    return out;
}

}  // namespace

PathTable path_table_fast(const Permutation& alpha, int rmax, Monotonicity kind, const Limits& lim) {
    const int n = alpha.size();
    require_groupalgebra(n, lim);
    if (rmax < 0) throw std::invalid_argument("rmax must be non-negative");
    PathTable result(n, rmax);
    if (n == 0) return result;

    const Permutation gens[] = {alpha};
    const SetPartition cycles = orbit_partition(gens, n);

    // Paths whose orbit partition is exactly pi multiply over the blocks of pi;
    // the transitive part is the Moebius inversion at the top of the lattice.
    BlockGF total;
    for_each_coarsening(cycles, [&](const SetPartition& pi) {
        const int k = pi.num_blocks();
        BigInt weight = static_cast<unsigned long>(factorial(k - 1));
        if ((k - 1) % 2 == 1) weight = -weight;
        BlockGF product{{{0, TypeKey{}}, BigInt(1)}};
        for (const auto& block : pi.blocks()) {
            product = multiply(product, cached_block_gf(restrict_to(alpha.raw(), block), rmax, kind), rmax);
            if (product.empty()) break;
        }
        for (auto& [key, c] : product) total[key] += weight * c;
    });

    for (const auto& [key, c] : total) {
        if (c < 0) throw std::logic_error("negative transitive path count");
        if (c != 0) result.add(key.first, IntPartition(key.second), c);
    }
    return result;
}

FactorizationCount count_paths_fast(const PathQuery& q, const Limits& lim) {
    if (q.d < 0 || q.r < 0) throw std::invalid_argument("path query needs r >= 0 and d >= 0");
    const int target = q.target_cycles();
    if (target < 1 || target > q.alpha.size()) return 0;
    return path_table_fast(q.alpha, q.r, q.kind, lim).with_cycles(q.r, target);
}

}  // namespace hwz
