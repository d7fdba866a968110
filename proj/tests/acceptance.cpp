// End-to-end acceptance run: one PASS/FAIL line per criterion, each with
// its own wall-clock budget.  Exit status is non-zero if any line fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hwz/cumulants.hpp"
#include "hwz/hurwitz.hpp"
#include "hwz/identities.hpp"
#include "hwz/mc.hpp"
#include "hwz/weingarten.hpp"

using namespace hwz;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

IntPartition P(const char* s) { return IntPartition::parse(s); }
const RatFunc c = RatFunc::variable('c');
const RatFunc N = RatFunc::variable('N');

void require_reports(Outcome& out, const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports) {
        std::string what = r.name + " [" + r.parameters + "]";
        if (!r.witnesses.empty()) what += " at " + r.witnesses.front().input;
        out.require(r.ok(), what);
    }
}

Outcome hurwitz_table() {
    Outcome out;
    const std::vector<IntPartition> nus{P("3"), P("2,1"), P("1,1,1")};
    const std::vector<long> weak{4, 12, 8}, strict{2, 0, 0};
    for (Route route : {Route::dfs, Route::fast})
        for (std::size_t i = 0; i < nus.size(); ++i) {
            const auto w = count_double_hurwitz(P("1,1,1"), nus[i], 0, Monotonicity::weak, route).summed;
            const auto s = count_double_hurwitz(P("1,1,1"), nus[i], 0, Monotonicity::strict, route).summed;
            out.require(w == weak[i], "monotone count at nu = " + nus[i].to_string());
            out.require(s == strict[i], "strict count at nu = " + nus[i].to_string());
        }
    return out;
}

Outcome first_moments() {
    Outcome out;
    constexpr int gmax = 4;
    const TraceMonomial inv{P("1"), Ensemble::inverse}, wis{P("1"), Ensemble::wishart};
    const RatFunc one(1, 'c');
    for (const auto& s : {scaled_cumulant_hurwitz(inv, gmax), scaled_cumulant_oracle(inv, gmax)}) {
        out.require(s.coeffs[0] == one / (c - one), "E tr W^-1 leading term");
        for (int g = 1; g <= gmax; ++g) out.require(s.coeffs[g].is_zero(), "E tr W^-1 has a correction");
    }
    for (const auto& s : {scaled_cumulant_hurwitz(wis, gmax), scaled_cumulant_oracle(wis, gmax)}) {
        out.require(s.exact, "E tr W series is not terminating");
        out.require(s.coeffs[0] == c, "E tr W leading term");
        for (int g = 1; g <= gmax; ++g) out.require(s.coeffs[g].is_zero(), "E tr W has a correction");
    }
    // closed forms for every N
    for (const BigRat& cv : {BigRat(2), BigRat(3), BigRat(7, 3)}) {
        const RatFunc expected = N * RatFunc(BigRat(1 / (cv - 1)), 'N');
        out.require(at_fixed_c(trace_moment_oracle(inv), cv) == expected, "Tr W^-1 closed form");
        out.require(at_fixed_c(trace_moment_oracle(wis), cv) == N * RatFunc(cv, 'N'), "Tr W closed form");
    }
    return out;
}

Outcome second_inverse_moment() {
    Outcome out;
    const TraceMonomial m{P("2"), Ensemble::inverse};
    const CumulantSeries s = scaled_cumulant_hurwitz(m, 6);
    for (int g = 0; g <= 6; ++g)
        out.require(s.coeffs[g].eval(2) == 2, "Hurwitz coefficient at g = " + std::to_string(g));
    const RatFunc closed = at_fixed_c(trace_moment_oracle(m), 2) / N;
    const RatFunc two(2, 'N');
    out.require(closed == two * N * N / (N * N - RatFunc(1, 'N')), "closed form " + closed.to_string());
    return out;
}

Outcome oracle_equivalence() {
    Outcome out;
    require_reports(out, {check_oracle_equivalence(5, 3)});
    return out;
}

Outcome weingarten() {
    Outcome out;
    require_reports(out, {check_weingarten(6, 6)});
    return out;
}

Outcome integrality() {
    Outcome out;
    require_reports(out, {check_integrality(6, 3), check_parity(6, 3)});
    return out;
}

Outcome identities() {
    Outcome out;
    std::vector<IdentityReport> reports = check_duality(6);
    reports.push_back(check_reciprocity(4));
    reports.push_back(check_functional_relation(4, 2));
    for (auto& r : check_covariance_duality(4)) reports.push_back(std::move(r));
    reports.push_back(check_preimage(5));
    reports.push_back(check_schroeder(6));
    reports.push_back(check_recursion(6, 3));
    require_reports(out, reports);
    const long schroeder[] = {1, 2, 6, 22, 90, 394};
    for (int n = 1; n <= 6; ++n) {
        out.require(schroeder_S(n, 0) == schroeder[n - 1], "S(" + std::to_string(n) + ",0) by enumeration");
        out.require(schroeder_hypergeometric(n) == schroeder[n - 1], "S(" + std::to_string(n) + ",0) closed form");
    }
    for (const auto& r : reports)
        if (r.status == ReportStatus::discrepancy) out.detail += (out.detail.empty() ? "" : "; ") + r.name + " reported";
    return out;
}

Outcome monte_carlo() {
    Outcome out;
    SamplerConfig cfg;
    cfg.N = 8;
    cfg.M = 16;
    cfg.samples = 100000;
    cfg.seed = 0;
    for (const char* t : {"trW", "trWinv", "trWinv2"}) cfg.targets.push_back(McTarget::parse(t));
    const McReport first = run_mc(cfg);
    std::ostringstream worst;  // distances from the exact values
    for (const auto& e : first.estimates) {
        out.require(e.exact.has_value() && e.stderr_ > 0, e.target.name() + " has no exact target");
        out.require(e.sigmas < 4, e.target.name() + " is " + std::to_string(e.sigmas) + " sigma off");
        if (worst.tellp() > 0) worst << ", ";
        worst << e.target.name() << " " << std::setprecision(2) << e.sigmas << " sigma";
    }
    out.require(to_json(first).dump() == to_json(run_mc(cfg)).dump(), "report differs between runs");
    if (out.ok) out.detail = worst.str();
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* what;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "n = 3 Hurwitz table", 1, hurwitz_table},
        {2, "E tr W and E tr W^-1 from both routes", 1, first_moments},
        {3, "E tr W^-2 at c = 2", 5, second_inverse_moment},
        {4, "oracle equivalence n <= 5", 600, oracle_equivalence},
        {5, "Weingarten suite n <= 6", 120, weingarten},
        {6, "integrality and parity n <= 6, g <= 3", 600, integrality},
        {7, "identities", 900, identities},
        {8, "Monte-Carlo at N = 8, c = 2", 120, monte_carlo},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (dt > c.budget_s) out.require(false, "over budget");
        all &= out.ok;
        std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.what << " (" << std::fixed
                  << std::setprecision(3) << dt << " s, budget " << std::setprecision(0) << c.budget_s << " s)";
        if (!out.detail.empty()) std::cout << " - " << out.detail;
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
