#pragma once

#include <cstdint>
#include <vector>

#include "hwz/sym.hpp"

namespace hwz {

// All of S_n with dense indices, used as the basis of group-algebra vectors.
// Immutable after construction.
class PermTable {
public:
    explicit PermTable(int n);

    int n() const { return n_; }
    std::size_t size() const { return perms_.size(); }
    const Permutation& perm(std::size_t i) const { return perms_[i]; }
    std::uint32_t index_of(const Permutation& p) const;
    std::uint32_t identity_index() const { return 0; }

    // Index of perm(i) * (a b), 1 <= a < b <= n.
    std::uint32_t right_mul(std::uint32_t i, int a, int b) const { return rmul_[tid(a, b)][i]; }
    std::uint32_t inverse_index(std::uint32_t i) const { return inv_[i]; }
    int num_cycles(std::uint32_t i) const { return cycles_[i]; }
    // Index into classes() (partitions_of(n) order).
    int class_index(std::uint32_t i) const { return class_[i]; }
    const std::vector<IntPartition>& classes() const { return classes_; }
    int class_index_of(const IntPartition& mu) const;

private:
    static int tid(int a, int b) { return (b - 1) * (b - 2) / 2 + (a - 1); }
    static std::uint64_t code(std::span<const std::uint8_t> img);

    int n_;
    std::vector<Permutation> perms_;
    std::vector<std::vector<std::uint32_t>> rmul_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint8_t> cycles_;
    std::vector<std::uint16_t> class_;
    std::vector<IntPartition> classes_;
    std::vector<std::uint64_t> sorted_codes_;  // perms_ are generated in code order
};

// Shared, lazily built table for S_n; safe to call concurrently.
const PermTable& perm_table(int n);

}  // namespace hwz
