#include "hwz/perm_table.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace hwz {

std::uint64_t PermTable::code(std::span<const std::uint8_t> img) {
    std::uint64_t c = 0;
    for (auto v : img) c = (c << 4) | v;
    return c;
}

PermTable::PermTable(int n) : n_(n) {
    if (n < 0 || n > 12) throw std::invalid_argument("PermTable supports 0 <= n <= 12");
    perms_ = all_permutations(n);
    const std::size_t total = perms_.size();
    sorted_codes_.resize(total);
    for (std::size_t i = 0; i < total; ++i) sorted_codes_[i] = code(perms_[i].raw());

    classes_ = partitions_of(n);
    cycles_.resize(total);
    class_.resize(total);
    inv_.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
        cycles_[i] = static_cast<std::uint8_t>(perms_[i].num_cycles());
        class_[i] = static_cast<std::uint16_t>(class_index_of(perms_[i].cycle_type()));
        inv_[i] = index_of(perms_[i].inverse());
    }

    rmul_.resize(n * (n - 1) / 2 + (n == 0 ? 1 : 0));
    std::vector<std::uint8_t> img(n);
    for (int b = 2; b <= n; ++b) {
        for (int a = 1; a < b; ++a) {
            auto& table = rmul_[tid(a, b)];
            table.resize(total);
            for (std::size_t i = 0; i < total; ++i) {
                auto r = perms_[i].raw();
                std::copy(r.begin(), r.end(), img.begin());
                std::swap(img[a - 1], img[b - 1]);
                auto it = std::lower_bound(sorted_codes_.begin(), sorted_codes_.end(), code(img));
                table[i] = static_cast<std::uint32_t>(it - sorted_codes_.begin());
            }
        }
    }
}

std::uint32_t PermTable::index_of(const Permutation& p) const {
    if (p.size() != n_) throw std::invalid_argument("PermTable::index_of: size mismatch");
    auto c = code(p.raw());
    auto it = std::lower_bound(sorted_codes_.begin(), sorted_codes_.end(), c);
    return static_cast<std::uint32_t>(it - sorted_codes_.begin());
}

int PermTable::class_index_of(const IntPartition& mu) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), mu);
    if (it == classes_.end() || !(*it == mu)) throw std::invalid_argument("not a partition of n: " + mu.to_string());
    return static_cast<int>(it - classes_.begin());
}

const PermTable& perm_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PermTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<PermTable>(n);
    return *slot;
}

}  // namespace hwz
