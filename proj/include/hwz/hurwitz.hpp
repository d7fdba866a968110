#pragma once

// Counting (strictly) monotone transposition paths and double Hurwitz
// numbers.
//
// A path from alpha is a tuple (tau_1, ..., tau_r) of transpositions
// tau_i = (a_i b_i), a_i < b_i, with end point beta = alpha tau_1 ... tau_r.
// It is counted when <alpha, tau_1, ..., tau_r> is transitive on [n], the b_i
// are weakly (monotone) or strictly (strict) increasing, and the genus
// (defect) d satisfies the Riemann-Hurwitz relation
//
//     #alpha + #beta - r = 2 - 2d.

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hwz/algebra.hpp"
#include "hwz/limits.hpp"
#include "hwz/sym.hpp"

namespace hwz {

enum class Monotonicity { weak, strict };

const char* to_string(Monotonicity kind);
Monotonicity parse_monotonicity(const std::string& text);  // "monotone" | "strict"

using FactorizationCount = BigInt;

struct PathQuery {
    Permutation alpha;
    int r = 0;
    int d = 0;
    Monotonicity kind = Monotonicity::weak;

    // Required number of cycles of beta: 2 - 2d - #alpha + r.
    int target_cycles() const;
};

struct HurwitzQuery {
    IntPartition mu;
    std::optional<IntPartition> nu;  // absent: every nu of the same size
    int genus = 0;
    Monotonicity kind = Monotonicity::weak;

    // Number of transpositions for a given nu: #mu + #nu + 2g - 2.
    int r_for(const IntPartition& nu) const { return mu.length() + nu.length() + 2 * genus - 2; }
};

enum class Route { automatic, dfs, fast };

// --- Depth-first reference route -------------------------------------------

// Single-threaded reference.
FactorizationCount count_paths_serial(const PathQuery& q, const IntPartition* beta_type = nullptr);
// Same count, subtrees of the first transposition distributed over OpenMP threads.
FactorizationCount count_paths(const PathQuery& q, const IntPartition* beta_type = nullptr);

// Visits every counted tuple (single-threaded, lexicographic in the b's then a's).
using PathVisitor = std::function<void(std::span<const Transposition> path, const Permutation& beta)>;
void for_each_path(const PathQuery& q, const PathVisitor& visit);

// --- Group-algebra route ---------------------------------------------------

// Transitive path counts from one alpha, by length r <= rmax and by the cycle
// type of beta.
class PathTable {
public:
    PathTable() = default;
    PathTable(int n, int rmax) : n_(n), rmax_(rmax) {}

    int n() const { return n_; }
    int rmax() const { return rmax_; }
    FactorizationCount at(int r, const IntPartition& beta_type) const;
    // Sum over all beta with the given number of cycles.
    FactorizationCount with_cycles(int r, int cycles) const;
    const std::map<std::pair<int, IntPartition>, FactorizationCount>& entries() const { return counts_; }
    void add(int r, const IntPartition& beta_type, const FactorizationCount& c);

private:
    int n_ = 0;
    int rmax_ = 0;
    std::map<std::pair<int, IntPartition>, FactorizationCount> counts_;
};

// Non-transitive counts come from iterated products prod_k (1 - x J_k)^{-1}
// (monotone) or prod_k (1 + x J_k) (strict) acting on alpha, block by block;
// transitive counts are recovered by Moebius inversion over the set
// partitions coarser than the cycle partition of alpha.
PathTable path_table_fast(const Permutation& alpha, int rmax, Monotonicity kind,
                          const Limits& lim = default_limits());
FactorizationCount count_paths_fast(const PathQuery& q, const Limits& lim = default_limits());

// --- Double Hurwitz numbers -------------------------------------------------

struct HurwitzCount {
    FactorizationCount per_representative;  // tuples for the canonical alpha of type mu
    FactorizationCount summed;              // over every alpha of type mu (the H-number)
};

HurwitzCount count_double_hurwitz(const IntPartition& mu, const IntPartition& nu, int genus, Monotonicity kind,
                                  Route route = Route::automatic, const Limits& lim = default_limits());
// One entry per nu, in reverse-lexicographic order of nu.
std::vector<std::pair<IntPartition, HurwitzCount>> hurwitz_row(const IntPartition& mu, int genus,
                                                               Monotonicity kind, Route route = Route::automatic,
                                                               const Limits& lim = default_limits());
std::vector<std::pair<IntPartition, HurwitzCount>> count_double_hurwitz(const HurwitzQuery& q,
                                                                        Route route = Route::automatic,
                                                                        const Limits& lim = default_limits());

// Pairs (alpha, beta) with [alpha] = mu, [alpha beta] = nu,
// #mu + #beta + #nu - n = 2 - 2g and <alpha, beta> transitive.  Brute force.
FactorizationCount count_constellations(const IntPartition& mu, const IntPartition& nu, int genus,
                                        const Limits& lim = default_limits());

}  // namespace hwz
