#pragma once

// Executable identity checks.  Every check returns IdentityReports; a failing
// report carries the concrete input that broke the identity.

#include <string>
#include <vector>

#include "hwz/algebra.hpp"
#include "hwz/hurwitz.hpp"
#include "hwz/limits.hpp"
#include "hwz/sym.hpp"

namespace hwz {

struct MonotonePath {
    int n = 0;
    std::vector<Transposition> taus;
    Monotonicity kind = Monotonicity::weak;

    // b's weakly / strictly increasing and every point within [n]
    bool is_monotone() const;
    // #((1 ... n) tau_1 ... tau_r) = r + 1
    bool is_minimal() const;
    std::string to_string() const;
    bool operator==(const MonotonePath& o) const { return n == o.n && taus == o.taus && kind == o.kind; }
};

// Record times of (b_1, ..., b_r) before the first b_i = n + 1.  Takes a
// minimal monotone path in S_{n+1} to a minimal strict path in S_n.
MonotonePath phi_map(const MonotonePath& w);
// #{u minimal monotone in S_{n+1} of length r : phi(u) = w}, by enumeration.
FactorizationCount preimage_count(const MonotonePath& w, int r, const Limits& lim = default_limits());

// S(n, d) = sum_r #{monotone paths from (1 ... n) of length r and defect d}.
FactorizationCount schroeder_S(int n, int d, const Limits& lim = default_limits());
// 2F1(1 - n, n; 2; -1) as a terminating sum.
BigRat schroeder_hypergeometric(int n);
// w(n; g) = h_g(1^2, 2^2, ..., n^2)
BigRat w_weight(int n, int g);

enum class ReportStatus { pass, fail, discrepancy };
const char* to_string(ReportStatus s);

struct Witness {
    std::string input;
    std::string expected;
    std::string actual;
};

struct IdentityReport {
    std::string name;
    std::string parameters;
    ReportStatus status = ReportStatus::pass;
    long checked = 0;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;

    // discrepancy is informational: a stated form that fails while a
    // documented variant is checked separately
    bool ok() const { return status != ReportStatus::fail; }
    void fail(Witness w);
};

// Sorted by name, then parameters.
void sort_reports(std::vector<IdentityReport>& reports);
bool all_ok(const std::vector<IdentityReport>& reports);

IdentityReport check_recursion(int nmax, int dmax, const Limits& lim = default_limits());
IdentityReport check_schroeder(int nmax, const Limits& lim = default_limits());
std::vector<IdentityReport> check_duality(int nmax, const Limits& lim = default_limits());
IdentityReport check_reciprocity(int nmax, const Limits& lim = default_limits());
IdentityReport check_functional_relation(int nmax, int gmax, const Limits& lim = default_limits());
// Two reports: the stated form (discrepancy when it fails) and the variant
// sum_r z^r #F = sum_r z^r (z + 1)^{n-r} #F_strict, which gates.
std::vector<IdentityReport> check_covariance_duality(int nmax, const Limits& lim = default_limits());
IdentityReport check_preimage(int nmax, const Limits& lim = default_limits());

IdentityReport check_weingarten(int nmax, int order, const Limits& lim = default_limits());
// Both routes for every mu |- n <= nmax: Wishart exact, inverse up to gmax.
IdentityReport check_oracle_equivalence(int nmax, int gmax, const Limits& lim = default_limits());
// Odd powers of 1/N vanish in the oracle expansions.
IdentityReport check_parity(int nmax, int gmax, const Limits& lim = default_limits());
// Time-delay coefficients are non-negative integers.
IdentityReport check_integrality(int nmax, int gmax, const Limits& lim = default_limits());

struct SuiteOptions {
    int nmax = 4;
    int gmax = 2;
    int dmax = 3;
    int jobs = 1;
};

// Suites: all, duality, reciprocity, funcrel, recursion, preimage, weingarten,
// oracle, parity, integrality.  Checks run concurrently over `jobs` threads;
// the returned reports are sorted.
std::vector<IdentityReport> run_suite(const std::string& suite, const SuiteOptions& opt,
                                      const Limits& lim = default_limits());
const std::vector<std::string>& suite_names();

}  // namespace hwz
