#include "hwz/identities.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <sstream>

#include "hwz/cumulants.hpp"
#include "hwz/errors.hpp"
#include "hwz/weingarten.hpp"

namespace hwz {

// --- paths and the record-time map ---

bool MonotonePath::is_monotone() const {
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const auto& t = taus[i];
        if (t.a < 1 || t.a >= t.b || t.b > n) return false;
        if (i > 0) {
            const int prev = taus[i - 1].b;
            if (kind == Monotonicity::weak ? t.b < prev : t.b <= prev) return false;
        }
    }
    return true;
}

bool MonotonePath::is_minimal() const {
    if (n < 1) return taus.empty();
    Permutation p = Permutation::full_cycle(n);
    for (const auto& t : taus) p = p * t.as_permutation(n);
    return p.num_cycles() == static_cast<int>(taus.size()) + 1;
}

std::string MonotonePath::to_string() const {
    std::string out = "(";
    for (const auto& t : taus) out += t.to_string();
    return out + ")";
}

MonotonePath phi_map(const MonotonePath& w) {
    if (w.kind != Monotonicity::weak || !w.is_monotone() || !w.is_minimal())
        throw std::invalid_argument("phi_map expects a minimal monotone path, got " + w.to_string());
    const int n = w.n - 1;
    MonotonePath out{n, {}, Monotonicity::strict};
    int record = 0;
    for (const auto& t : w.taus) {
        if (t.b == n + 1) break;
        if (t.b > record) {
            out.taus.push_back(t);
            record = t.b;
        }
    }
    return out;
}

namespace {

std::vector<MonotonePath> minimal_paths(int n, int r, Monotonicity kind) {
    std::vector<MonotonePath> out;
    if (n < 1) return out;
    for_each_path({Permutation::full_cycle(n), r, 0, kind}, [&](std::span<const Transposition> path, const Permutation&) {
        out.push_back({n, {path.begin(), path.end()}, kind});
    });
    return out;
}

BigInt minimal_count(int n, int r, Monotonicity kind) {
    return count_paths({Permutation::full_cycle(n), r, 0, kind});
}

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const BigRat& v) { return v.get_str(); }

}  // namespace

FactorizationCount preimage_count(const MonotonePath& w, int r, const Limits& lim) {
    if (w.kind != Monotonicity::strict || !w.is_monotone())
        throw std::invalid_argument("preimage_count expects a strict path");
    require_dfs(w.n + 1, lim);
    unsigned long count = 0;
    for (const auto& u : minimal_paths(w.n + 1, r, Monotonicity::weak))
        if (phi_map(u) == w) ++count;
    return count;
}

// --- S(n, d), hypergeometric form, w(n; g) ---

FactorizationCount schroeder_S(int n, int d, const Limits& lim) {
    if (n < 0 || d < 0) throw std::invalid_argument("S(n, d) needs n, d >= 0");
    if (n <= 1) return d == 0 ? 1 : 0;
    // #beta >= 1 bounds r - 2d <= n - 1
    const int rmax = n - 1 + 2 * d;
    const PathTable table = path_table_fast(Permutation::full_cycle(n), rmax, Monotonicity::weak, lim);
    FactorizationCount total = 0;
    for (int r = 0; r <= rmax; ++r) {
        const int target = r + 1 - 2 * d;
        if (target >= 1 && target <= n) total += table.with_cycles(r, target);
    }
    return total;
}

BigRat schroeder_hypergeometric(int n) {
    if (n < 1) throw std::invalid_argument("hypergeometric form needs n >= 1");
    // sum_k (1-n)_k (n)_k / ((2)_k k!) (-1)^k
    BigRat total = 0;
    BigRat term = 1;
    for (int k = 0; k <= n - 1; ++k) {
        total += term;
        term *= BigRat(1 - n + k) * BigRat(n + k) / (BigRat(2 + k) * BigRat(k + 1)) * -1;
    }
    return total;
}

BigRat w_weight(int n, int g) {
    if (n < 1 || g < 0) throw std::invalid_argument("w(n; g) needs n >= 1, g >= 0");
    std::vector<BigRat> squares;
    for (int k = 1; k <= n; ++k) squares.emplace_back(k * k);
    return complete_symmetric(squares, g);
}

// --- reports ---

const char* to_string(ReportStatus s) {
    switch (s) {
        case ReportStatus::pass: return "pass";
        case ReportStatus::fail: return "fail";
        case ReportStatus::discrepancy: return "discrepancy";
    }
    return "?";
}

void IdentityReport::fail(Witness w) {
    status = ReportStatus::fail;
    witnesses.push_back(std::move(w));
}

void sort_reports(std::vector<IdentityReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
        return std::tie(a.name, a.parameters) < std::tie(b.name, b.parameters);
    });
}

bool all_ok(const std::vector<IdentityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.ok(); });
}

namespace {

IdentityReport make_report(std::string name, std::string params) {
    IdentityReport r;
    r.name = std::move(name);
    r.parameters = std::move(params);
    return r;
}

std::string range(const std::string& a, int va, const std::string& b = "", int vb = 0) {
    std::string s = a + "<=" + std::to_string(va);
    if (!b.empty()) s += "," + b + "<=" + std::to_string(vb);
    return s;
}

template <class T>
void expect_equal(IdentityReport& rep, const std::string& input, const T& lhs, const T& rhs) {
    ++rep.checked;
    if (!(lhs == rhs)) rep.fail({input, lhs.to_string(), rhs.to_string()});
}

void expect_equal(IdentityReport& rep, const std::string& input, const BigInt& lhs, const BigInt& rhs) {
    ++rep.checked;
    if (lhs != rhs) rep.fail({input, str(lhs), str(rhs)});
}

}  // namespace

IdentityReport check_recursion(int nmax, int dmax, const Limits& lim) {
    IdentityReport rep = make_report("recursion", range("n", nmax, "d", dmax));
    std::map<std::pair<int, int>, BigInt> S;
    auto s = [&](int n, int d) -> const BigInt& {
        auto it = S.find({n, d});
        if (it == S.end()) it = S.emplace(std::make_pair(n, d), schroeder_S(n, d, lim)).first;
        return it->second;
    };
    for (int d = 0; d <= dmax; ++d) {
        expect_equal(rep, "S(0," + std::to_string(d) + ")", s(0, d), BigInt(d == 0 ? 1 : 0));
        expect_equal(rep, "S(1," + std::to_string(d) + ")", s(1, d), BigInt(d == 0 ? 1 : 0));
    }
    for (int n = 1; n <= nmax - 1; ++n)
        for (int d = 0; d <= dmax - 1; ++d) {
            const BigInt lhs = BigInt(n + 1) * s(n + 1, d + 1) - BigInt(3 * (2 * n - 1)) * s(n, d + 1) +
                               BigInt(n - 2) * s(n - 1, d + 1);
            const BigInt rhs = BigInt(n * n * (n + 1)) * s(n + 1, d);
            expect_equal(rep, "n=" + std::to_string(n) + ",d=" + std::to_string(d), lhs, rhs);
        }
    return rep;
}

IdentityReport check_schroeder(int nmax, const Limits& lim) {
    IdentityReport rep = make_report("schroeder", range("n", nmax));
    const long known[] = {1, 2, 6, 22, 90, 394, 1806, 8558, 41586};
    for (int n = 1; n <= nmax; ++n) {
        const BigInt s = schroeder_S(n, 0, lim);
        const std::string in = "n=" + std::to_string(n);
        ++rep.checked;
        if (BigRat(s) != schroeder_hypergeometric(n)) rep.fail({in + " (2F1)", str(schroeder_hypergeometric(n)), str(s)});
        if (n <= 9) expect_equal(rep, in + " (large Schroeder number)", s, BigInt(known[n - 1]));
    }
    return rep;
}

std::vector<IdentityReport> check_duality(int nmax, const Limits& lim) {
    IdentityReport poly = make_report("duality", range("n", nmax));
    IdentityReport limit = make_report("duality.limit", range("n", nmax));
    const Poly c = Poly::x();
    for (int n = 1; n <= nmax; ++n) {
        require_dfs(n + 1, lim);
        Poly lhs, rhs;
        for (int r = 0; r <= n; ++r)
            lhs += (c - Poly(1)).pow(n - r) * Poly(BigRat(minimal_count(n + 1, r, Monotonicity::weak)));
        for (int l = 0; l <= n - 1; ++l)
            rhs += c.pow(n - l) * Poly(BigRat(minimal_count(n, l, Monotonicity::strict)));
        ++poly.checked;
        if (!(lhs == rhs)) poly.fail({"n=" + std::to_string(n), lhs.to_string('c'), rhs.to_string('c')});

        // leading order of E tr W^{-(n+1)} (c-1)^{n+1} against E tr W^n / (c-1)^n
        const RatFunc cm1 = RatFunc::variable('c') - RatFunc(1, 'c');
        const auto inv = scaled_cumulant_hurwitz({IntPartition({n + 1}), Ensemble::inverse}, 0, Route::automatic, lim);
        const auto wis = scaled_cumulant_hurwitz({IntPartition({n}), Ensemble::wishart}, 0, Route::automatic, lim);
        // scaled cumulants of one trace carry |mu|!/z_mu = (|mu| - 1)!
        const RatFunc a = inv.coeffs[0] * cm1.pow(n + 1) / RatFunc(BigRat(static_cast<unsigned long>(factorial(n))), 'c');
        const RatFunc b = wis.coeffs[0] / cm1.pow(n) / RatFunc(BigRat(static_cast<unsigned long>(factorial(n - 1))), 'c');
        expect_equal(limit, "n=" + std::to_string(n), a, b);
    }
    return {poly, limit};
}

IdentityReport check_reciprocity(int nmax, const Limits& lim) {
    IdentityReport rep = make_report("reciprocity", range("n", nmax));
    const RatFunc z = RatFunc::variable('z');
    for (int n = 0; n <= nmax; ++n) {
        // E tr (N W)^{-(n+1)} = N^{-(n+2)} E Tr W^{-(n+1)}
        const NLaurent lhs =
            trace_moment_oracle({IntPartition({n + 1}), Ensemble::inverse}, CoeffForm::z, lim).shifted(-(n + 2));
        // E tr (N W)^n = N^{n-1} E Tr W^n, with shape parameter M - N = -z
        NLaurent positive('z');
        if (n == 0) positive.add_term(1, RatFunc(1, 'z'));
        else positive = trace_moment_oracle({IntPartition({n}), Ensemble::wishart}, CoeffForm::z, lim);
        RatFunc gamma(1, 'z');
        for (int j = -n; j <= n; ++j) gamma /= RatFunc(j, 'z') - z;
        const NLaurent rhs = positive.shifted(n - 1) * gamma;
        expect_equal(rep, "n=" + std::to_string(n), lhs, rhs);
    }
    return rep;
}

IdentityReport check_functional_relation(int nmax, int gmax, const Limits& lim) {
    IdentityReport rep = make_report("funcrel", range("n", nmax, "g", gmax));
    const RatFunc x = RatFunc::variable('x');
    const RatFunc one(1, 'x');
    const RatFunc ratio = (x - one) / x;
    auto generating = [&](int n, int g, Monotonicity kind, const RatFunc& at) {
        RatFunc sum(0, 'x');
        for (const auto& [nu, h] : hurwitz_row(IntPartition({n}), g, kind, Route::automatic, lim))
            if (h.summed != 0) sum += RatFunc(BigRat(h.summed), 'x') * at.pow(-nu.length());
        return sum;
    };
    for (int n = 1; n <= nmax; ++n)
        for (int g = 0; g <= gmax; ++g) {
            const RatFunc lhs = ratio.pow(n + 1) * generating(n + 1, g, Monotonicity::weak, x - one);
            RatFunc rhs(0, 'x');
            for (int h = 0; h <= g; ++h)
                rhs += ratio.pow(2 * h) * RatFunc(w_weight(n, g - h), 'x') * generating(n, h, Monotonicity::strict, x);
            rhs *= RatFunc(n, 'x');
            expect_equal(rep, "n=" + std::to_string(n) + ",g=" + std::to_string(g), lhs, rhs);
        }
    return rep;
}

std::vector<IdentityReport> check_covariance_duality(int nmax, const Limits& lim) {
    IdentityReport stated = make_report("covariance_duality.stated", range("n", nmax));
    IdentityReport variant = make_report("covariance_duality.variant", range("n", nmax));
    stated.notes.push_back("sum_r z^r #F(alpha, r) = sum_r (z+1)^{n-r} #F_strict(alpha, r), #alpha = 2");
    variant.notes.push_back("sum_r z^r #F(alpha, r) = sum_r z^r (z+1)^{n-r} #F_strict(alpha, r), #alpha = 2");
    const Poly z = Poly::x();
    for (int n = 2; n <= nmax; ++n) {
        require_dfs(n, lim);
        for (const auto& mu : partitions_of(n)) {
            if (mu.length() != 2) continue;
            const Permutation alpha = Permutation::canonical(mu);
            Poly lhs, rhs_stated, rhs_variant;
            for (int r = 0; r <= n; ++r) {
                const BigRat weak(count_paths({alpha, r, 0, Monotonicity::weak}));
                const BigRat strict(count_paths({alpha, r, 0, Monotonicity::strict}));
                lhs += z.pow(r) * Poly(weak);
                rhs_stated += (z + Poly(1)).pow(n - r) * Poly(strict);
                rhs_variant += z.pow(r) * (z + Poly(1)).pow(n - r) * Poly(strict);
            }
            const std::string in = "alpha of type " + mu.to_string();
            ++stated.checked;
            if (!(lhs == rhs_stated)) {
                stated.status = ReportStatus::discrepancy;
                stated.witnesses.push_back({in, lhs.to_string('z'), rhs_stated.to_string('z')});
            }
            ++variant.checked;
            if (!(lhs == rhs_variant)) variant.fail({in, lhs.to_string('z'), rhs_variant.to_string('z')});
        }
    }
    if (stated.status == ReportStatus::discrepancy)
        stated.notes.push_back("stated exponents fail; the variant with z^r on the strict side is checked instead");
    return {stated, variant};
}

IdentityReport check_preimage(int nmax, const Limits& lim) {
    IdentityReport rep = make_report("preimage", range("n", nmax));
    for (int n = 1; n <= nmax; ++n) {
        require_dfs(n + 1, lim);
        // strict minimal paths in S_n by length
        std::vector<std::vector<MonotonePath>> strict(n);
        std::map<std::vector<std::pair<int, int>>, int> strict_length;
        for (int l = 0; l <= n - 1; ++l) {
            strict[l] = minimal_paths(n, l, Monotonicity::strict);
            for (const auto& w : strict[l]) {
                std::vector<std::pair<int, int>> key;
                for (const auto& t : w.taus) key.emplace_back(t.a, t.b);
                strict_length[key] = l;
            }
        }
        for (int r = 0; r <= n; ++r) {
            std::map<std::vector<std::pair<int, int>>, long> hits;
            const auto weak = minimal_paths(n + 1, r, Monotonicity::weak);
            for (const auto& u : weak) {
                const MonotonePath w = phi_map(u);
                std::vector<std::pair<int, int>> key;
                for (const auto& t : w.taus) key.emplace_back(t.a, t.b);
                ++rep.checked;
                if (!w.is_monotone() || !w.is_minimal() || !strict_length.count(key))
                    rep.fail({"phi(" + u.to_string() + ")", "a minimal strict path in S_" + std::to_string(n),
                              w.to_string()});
                ++hits[key];
            }
            BigInt summed_binomials = 0;
            for (int l = 0; l <= std::min(r, n - 1); ++l) {
                summed_binomials += binomial(n - l, r - l) * BigInt(static_cast<unsigned long>(strict[l].size()));
                for (const auto& w : strict[l]) {
                    std::vector<std::pair<int, int>> key;
                    for (const auto& t : w.taus) key.emplace_back(t.a, t.b);
                    auto it = hits.find(key);
                    const BigInt found = it == hits.end() ? 0 : it->second;
                    expect_equal(rep, "n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",w=" + w.to_string(),
                                 found, binomial(n - l, r - l));
                }
            }
            expect_equal(rep, "sum over l, n=" + std::to_string(n) + ",r=" + std::to_string(r), summed_binomials,
                         minimal_count(n + 1, r, Monotonicity::weak));
        }
    }
    return rep;
}

IdentityReport check_weingarten(int nmax, int order, const Limits& lim) {
    IdentityReport rep = make_report("weingarten", range("n", nmax, "order", order));
    for (int n = 1; n <= nmax; ++n) {
        const std::string in = "n=" + std::to_string(n);
        const CentralElement w = wg(n, lim);
        const CentralElement om = omega(n);
        const CentralElement delta = CentralElement::delta_id(n);
        auto check_central = [&](const std::string& what, const CentralElement& a, const CentralElement& b) {
            ++rep.checked;
            if (a == b) return;
            for (std::size_t k = 0; k < a.values().size(); ++k)
                if (!(a.values()[k] == b.values()[k])) {
                    rep.fail({in + " " + what + " at " + a.classes()[k].to_string(), b.values()[k].to_string(),
                              a.values()[k].to_string()});
                    return;
                }
        };
        check_central("Wg*Omega", convolve(w, om), delta);
        check_central("Omega*Wg", convolve(om, w), delta);
        check_central("Jucys-Murphy product", omega_via_jm(n, lim), om);
        check_central("strict tuple expansion", omega_via_strict_tuples(n, lim), om);
        ++rep.checked;
        if (!wg_poles_in_range(w)) rep.fail({in + " poles", "integers in [1-n, n-1]", "other poles"});
        const auto series = wg_series(n, order, lim);
        for (std::size_t k = 0; k < series.size(); ++k)
            expect_equal(rep, in + " series at " + w.classes()[k].to_string(), series[k],
                         series_expand_at_infinity(w.values()[k], n + order));
    }
    return rep;
}

IdentityReport check_oracle_equivalence(int nmax, int gmax, const Limits& lim) {
    IdentityReport rep = make_report("oracle", range("n", nmax, "g", gmax));
    for (int n = 1; n <= nmax; ++n)
        for (const auto& mu : partitions_of(n)) {
            // terminating Wishart series: every genus up to the last nonzero one
            const TraceMonomial w{mu, Ensemble::wishart};
            const int gw = (n - mu.length()) / 2 + 1;
            const auto wo = scaled_cumulant_oracle(w, gw, lim);
            const auto wh = scaled_cumulant_hurwitz(w, gw, Route::automatic, lim);
            ++rep.checked;
            if (!wo.exact || !wh.exact || !(wo == wh))
                rep.fail({"W " + mu.to_string(), "exact agreement", "mismatch or non-terminating"});

            const TraceMonomial v{mu, Ensemble::inverse};
            const auto vo = scaled_cumulant_oracle(v, gmax, lim);
            const auto vh = scaled_cumulant_hurwitz(v, gmax, Route::automatic, lim);
            for (int g = 0; g <= gmax; ++g)
                expect_equal(rep, "Winv " + mu.to_string() + " g=" + std::to_string(g), vo.coeffs[g], vh.coeffs[g]);
        }
    return rep;
}

IdentityReport check_parity(int nmax, int gmax, const Limits& lim) {
    IdentityReport rep = make_report("parity", range("n", nmax, "g", gmax));
    for (int n = 1; n <= nmax; ++n)
        for (const auto& mu : partitions_of(n))
            for (Ensemble e : {Ensemble::wishart, Ensemble::inverse}) {
                const TraceMonomial m{mu, e};
                ++rep.checked;
                try {
                    scaled_cumulant_oracle(m, gmax, lim);
                } catch (const VerificationFailure& err) {
                    rep.fail({std::string(to_string(e)) + " " + mu.to_string(), "even powers of 1/N only", err.what()});
                }
            }
    return rep;
}

IdentityReport check_integrality(int nmax, int gmax, const Limits& lim) {
    IdentityReport rep = make_report("integrality", range("n", nmax, "g", gmax));
    for (int n = 1; n <= nmax; ++n)
        for (const auto& mu : partitions_of(n)) {
            ++rep.checked;
            try {
                time_delay_coefficients(mu, gmax, lim);
            } catch (const VerificationFailure& err) {
                rep.fail({mu.to_string(), "non-negative integers", err.what()});
            }
        }
    return rep;
}

// --- suites ---

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all",  "duality",    "reciprocity", "funcrel", "recursion",
                                                "preimage", "weingarten", "oracle",  "parity", "integrality"};
    return names;
}

std::vector<IdentityReport> run_suite(const std::string& suite, const SuiteOptions& opt, const Limits& lim) {
    using Job = std::function<std::vector<IdentityReport>()>;
    auto one = [](IdentityReport r) { return std::vector<IdentityReport>{std::move(r)}; };
    std::vector<std::pair<std::string, Job>> catalogue{
        {"duality", [&] { return check_duality(opt.nmax, lim); }},
        {"reciprocity", [&] { return one(check_reciprocity(opt.nmax, lim)); }},
        {"funcrel", [&] { return one(check_functional_relation(opt.nmax, opt.gmax, lim)); }},
        {"funcrel", [&] { return check_covariance_duality(opt.nmax, lim); }},
        {"recursion", [&] { return one(check_recursion(opt.nmax, opt.dmax, lim)); }},
        {"recursion", [&] { return one(check_schroeder(opt.nmax, lim)); }},
        {"preimage", [&] { return one(check_preimage(opt.nmax, lim)); }},
        {"weingarten", [&] { return one(check_weingarten(opt.nmax, 6, lim)); }},
        {"oracle", [&] { return one(check_oracle_equivalence(opt.nmax, opt.gmax, lim)); }},
        {"parity", [&] { return one(check_parity(opt.nmax, opt.gmax, lim)); }},
        {"integrality", [&] { return one(check_integrality(opt.nmax, opt.gmax, lim)); }},
    };
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + suite + "'");

    std::vector<Job> jobs;
    for (auto& [name, job] : catalogue)
        if (suite == "all" || suite == name) jobs.push_back(job);

    std::vector<std::vector<IdentityReport>> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    const int threads = std::max(1, opt.jobs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i) {
        try {
            results[i] = jobs[i]();
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<IdentityReport> merged;
    for (auto& r : results) merged.insert(merged.end(), r.begin(), r.end());
    sort_reports(merged);
    return merged;
}

}  // namespace hwz
