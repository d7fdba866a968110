#include <algorithm>

#include "hwz/hurwitz.hpp"
#include "hwz/perm_table.hpp"

namespace hwz {

const char* to_string(Monotonicity kind) { return kind == Monotonicity::weak ? "monotone" : "strict"; }

Monotonicity parse_monotonicity(const std::string& text) {
    if (text == "monotone" || text == "weak") return Monotonicity::weak;
    if (text == "strict") return Monotonicity::strict;
    throw std::invalid_argument("unknown monotonicity '" + text + "' (expected monotone or strict)");
}

namespace {

Route resolve(Route route, int n, const Limits& lim) {
    if (route != Route::automatic) return route;
    return n <= lim.max_n_groupalgebra ? Route::fast : Route::dfs;
}

void check_args(const IntPartition& mu, const IntPartition& nu, int genus) {
    if (mu.size() < 1) throw std::invalid_argument("mu must be a non-empty partition");
    if (nu.size() != mu.size()) throw std::invalid_argument("mu and nu must have the same size");
    if (genus < 0) throw std::invalid_argument("genus must be non-negative");
}

HurwitzCount make_count(const IntPartition& mu, FactorizationCount per_rep) {
    HurwitzCount out;
    out.summed = per_rep * BigInt(static_cast<unsigned long>(mu.class_size()));
    out.per_representative = std::move(per_rep);
    return out;
}

}  // namespace

HurwitzCount count_double_hurwitz(const IntPartition& mu, const IntPartition& nu, int genus, Monotonicity kind,
                                  Route route, const Limits& lim) {
    check_args(mu, nu, genus);
    const int r = mu.length() + nu.length() + 2 * genus - 2;
    if (r < 0) return make_count(mu, 0);
    const Permutation alpha = Permutation::canonical(mu);
    if (resolve(route, mu.size(), lim) == Route::fast)
        return make_count(mu, path_table_fast(alpha, r, kind, lim).at(r, nu));
    require_dfs(mu.size(), lim);
    return make_count(mu, count_paths(PathQuery{alpha, r, genus, kind}, &nu));
}

std::vector<std::pair<IntPartition, HurwitzCount>> hurwitz_row(const IntPartition& mu, int genus, Monotonicity kind,
                                                               Route route, const Limits& lim) {
    if (mu.size() < 1) throw std::invalid_argument("mu must be a non-empty partition");
    if (genus < 0) throw std::invalid_argument("genus must be non-negative");
    const int n = mu.size();
    const std::vector<IntPartition> nus = partitions_of(n);
    std::vector<std::pair<IntPartition, HurwitzCount>> row;
    if (resolve(route, n, lim) == Route::fast) {
        int rmax = 0;
        for (const auto& nu : nus) rmax = std::max(rmax, mu.length() + nu.length() + 2 * genus - 2);
        const PathTable table = path_table_fast(Permutation::canonical(mu), rmax, kind, lim);
        for (const auto& nu : nus) {
            const int r = mu.length() + nu.length() + 2 * genus - 2;
            row.emplace_back(nu, make_count(mu, r < 0 ? FactorizationCount(0) : table.at(r, nu)));
        }
        return row;
    }
    for (const auto& nu : nus) row.emplace_back(nu, count_double_hurwitz(mu, nu, genus, kind, Route::dfs, lim));
    return row;
}

std::vector<std::pair<IntPartition, HurwitzCount>> count_double_hurwitz(const HurwitzQuery& q, Route route,
                                                                        const Limits& lim) {
    if (q.nu) return {{*q.nu, count_double_hurwitz(q.mu, *q.nu, q.genus, q.kind, route, lim)}};
    return hurwitz_row(q.mu, q.genus, q.kind, route, lim);
}

FactorizationCount count_constellations(const IntPartition& mu, const IntPartition& nu, int genus,
                                        const Limits& lim) {
    check_args(mu, nu, genus);
    const int n = mu.size();
    require_dfs(n, lim);
    const int beta_cycles = 2 - 2 * genus - mu.length() - nu.length() + n;
    if (beta_cycles < 1 || beta_cycles > n) return 0;

    const PermTable& table = perm_table(n);
    const int mu_class = table.class_index_of(mu);
    std::uint64_t count = 0;
    for (std::uint32_t i = 0; i < table.size(); ++i) {
        if (table.class_index(i) != mu_class) continue;
        const Permutation& alpha = table.perm(i);
        for (std::uint32_t j = 0; j < table.size(); ++j) {
            if (table.num_cycles(j) != beta_cycles) continue;
            const Permutation& beta = table.perm(j);
            if ((alpha * beta).cycle_type() != nu) continue;
            const Permutation gens[] = {alpha, beta};
            if (orbit_partition(gens, n).num_blocks() == 1) ++count;
        }
    }
    return BigInt(static_cast<unsigned long>(count));
}

}  // namespace hwz
