#pragma once

// Permutations, integer partitions and set partitions.
//
// Points are labelled 1..n in every public interface. Composition is
// (p * q)(k) = p(q(k)): apply q first, then p. A product written
// alpha tau_1 ... tau_r is evaluated as successive right multiplications
// ((alpha * tau_1) * tau_2) * ...

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwz {

class IntPartition {
public:
    IntPartition() = default;
    explicit IntPartition(std::vector<int> parts);

    // Parses "3,2,1" (order of the parts is irrelevant).
    static IntPartition parse(const std::string& text);
    static IntPartition ones(int n);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }                      // |mu|
    int length() const { return static_cast<int>(parts_.size()); }  // #mu
    std::map<int, int> multiplicities() const;

    // z_mu = prod_i m_i! i^{m_i}
    std::uint64_t z() const;
    // n! / z_mu, the size of the conjugacy class of type mu.
    std::uint64_t class_size() const;

    std::string to_string() const;

    bool operator==(const IntPartition&) const = default;
    // Reverse-lexicographic: (3) < (2,1) < (1,1,1).
    std::strong_ordering operator<=>(const IntPartition& other) const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n, largest part first, in reverse-lexicographic order.
std::vector<IntPartition> partitions_of(int n);
void for_each_partition(int n, const std::function<void(const IntPartition&)>& visit);

std::uint64_t factorial(int n);

class Permutation {
public:
    Permutation() = default;
    // images[k-1] = image of k, 1-based values.
    explicit Permutation(const std::vector<int>& images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    // Cycles given in 1-based points; unlisted points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    // The canonical element of type mu: (1..mu_1)(mu_1+1..mu_1+mu_2)...
    static Permutation canonical(const IntPartition& mu);
    static Permutation full_cycle(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k - 1] + 1; }

    Permutation inverse() const;
    int num_cycles() const;
    int length() const { return size() - num_cycles(); }  // Cayley length |sigma|
    IntPartition cycle_type() const;
    std::vector<std::vector<int>> cycles() const;
    bool is_identity() const;

    std::string to_string() const;

    // 0-based view used by the enumeration kernels.
    std::span<const std::uint8_t> raw() const { return img_; }
    static Permutation from_raw(std::vector<std::uint8_t> img);

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::uint8_t> img_;
};

Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

struct Transposition {
    int a = 1;
    int b = 2;

    Transposition() = default;
    Transposition(int x, int y);  // normalizes so that a < b

    Permutation as_permutation(int n) const;
    std::string to_string() const;
    bool operator==(const Transposition&) const = default;
};

class SetPartition {
public:
    SetPartition() = default;
    // labels[k-1] = block index of point k; any labelling, canonicalized.
    explicit SetPartition(const std::vector<int>& labels);
    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    static SetPartition finest(int n);   // 0_n
    static SetPartition coarsest(int n); // 1_n

    int size() const { return static_cast<int>(labels_.size()); }
    int num_blocks() const { return blocks_; }
    // Blocks sorted by least element, each sorted, 1-based.
    std::vector<std::vector<int>> blocks() const;
    // Restricted-growth labels, 0-based.
    const std::vector<int>& labels() const { return labels_; }
    int block_of(int point) const { return labels_[point - 1]; }

    // this <= other in refinement order (every block of this lies in a block of other).
    bool refines(const SetPartition& other) const;

    std::string to_string() const;

    bool operator==(const SetPartition&) const = default;
    auto operator<=>(const SetPartition&) const = default;

private:
    std::vector<int> labels_;
    int blocks_ = 0;
};

// Orbits of the group generated by gens (union-find over their cycles).
SetPartition orbit_partition(std::span<const Permutation> gens, int n);
SetPartition orbit_partition(std::span<const Permutation> gens);

// Every partition pi >= mu, each exactly once.
void for_each_coarsening(const SetPartition& mu, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> set_partitions_coarser_than(const SetPartition& mu);

// Enumerate all of S_n in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(int n);

class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int x) const;
    // Returns true when two distinct classes were merged.
    bool unite(int x, int y);
    int classes() const { return classes_; }

    // Rollback support for depth-first search.
    std::size_t checkpoint() const { return history_.size(); }
    void rollback(std::size_t mark);

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    struct Link {
        int child;
        int parent;
        bool bumped;
    };
    std::vector<Link> history_;
    int classes_;
};

}  // namespace hwz
