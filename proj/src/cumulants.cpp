#include "hwz/cumulants.hpp"

#include <map>

#include "hwz/perm_table.hpp"
#include "hwz/weingarten.hpp"

namespace hwz {

namespace detail {
BigInt moebius_to_top(int blocks) {
    BigInt v = static_cast<unsigned long>(factorial(blocks - 1));
    return blocks % 2 == 0 ? BigInt(-v) : v;
}
}  // namespace detail

const char* to_string(Ensemble e) { return e == Ensemble::wishart ? "W" : "Winv"; }

Ensemble parse_ensemble(const std::string& text) {
    if (text == "W" || text == "wishart") return Ensemble::wishart;
    if (text == "Winv" || text == "inverse") return Ensemble::inverse;
    throw std::invalid_argument("unknown ensemble '" + text + "' (expected W or Winv)");
}

std::string TraceMonomial::to_string() const {
    std::string out;
    for (int p : powers.parts()) {
        if (!out.empty()) out += " ";
        out += "tr W^" + std::string(ensemble == Ensemble::inverse ? "-" : "") + std::to_string(p);
    }
    return out;
}

long WishartParams::M() const {
    if (!c || !N) throw std::invalid_argument("M needs both c and N");
    const BigRat m = *c * *N;
    if (m.get_den() != 1) throw std::invalid_argument("cN is not an integer");
    return m.get_num().get_si();
}

std::string validity_domain(const TraceMonomial& m) {
    if (m.ensemble == Ensemble::inverse) return "c > 1 + " + std::to_string(m.powers.size()) + "/N";
    return "c > 1 - 1/N";
}

bool in_validity_domain(const TraceMonomial& m, const BigRat& c, long N) {
    if (N < 1) return false;
    if (m.ensemble == Ensemble::inverse) return c > 1 + BigRat(m.powers.size(), N);
    return c > 1 - BigRat(1, N);
}

namespace {

RatFunc c_monomial(int degree) { return RatFunc::polynomial(Poly::monomial(1, degree), 'c'); }

// (1 - c)^e in Q(c)
RatFunc one_minus_c_pow(int e) {
    return RatFunc::polynomial(Poly(std::vector<BigRat>{BigRat(1), BigRat(-1)}), 'c').pow(e);
}

}  // namespace

NLaurent trace_moment_oracle(const TraceMonomial& m, CoeffForm form, const Limits& lim) {
    const int n = m.powers.size();
    if (n < 1) throw std::invalid_argument("empty trace monomial");
    if (m.ensemble == Ensemble::inverse && form == CoeffForm::c)
        throw std::invalid_argument("inverse moments are only available with coefficients in z");
    require_dfs(n, lim);
    const PermTable& table = perm_table(n);
    const Permutation alpha = Permutation::canonical(m.powers);

    // Index contraction leaves N^{#(sigma^{-1} alpha)}.
    auto contracted_cycles = [&](std::uint32_t i) { return (table.perm(table.inverse_index(i)) * alpha).num_cycles(); };

    if (m.ensemble == Ensemble::wishart) {
        // N^{-n} sum_sigma M^{#sigma} N^{#(sigma^{-1} alpha)}
        std::map<std::pair<int, int>, long> counts;
        for (std::uint32_t i = 0; i < table.size(); ++i) ++counts[{table.num_cycles(i), contracted_cycles(i)}];
        if (form == CoeffForm::c) {
            NLaurent out('c');
            for (const auto& [st, k] : counts)
                out.add_term(st.first + st.second - n, c_monomial(st.first) * RatFunc(k, 'c'));
            return out;
        }
        NLaurent out('z');
        for (const auto& [st, k] : counts) {
            const auto [s, t] = st;
            // M = N - z
            for (int j = 0; j <= s; ++j) {
                BigRat coef = BigRat(binomial(s, j)) * k * (j % 2 == 0 ? 1 : -1);
                out.add_term(s - j + t - n, RatFunc::polynomial(Poly::monomial(coef, j), 'z'));
            }
        }
        return out;
    }

    // (-N)^n sum_sigma Wg_{n,z}(sigma) N^{#(sigma^{-1} alpha)}, z = (1 - c) N
    const CentralElement w = wg(n, lim);
    const std::size_t p = table.classes().size();
    std::vector<std::vector<long>> counts(p, std::vector<long>(n + 1, 0));
    for (std::uint32_t i = 0; i < table.size(); ++i) ++counts[table.class_index(i)][contracted_cycles(i)];
    NLaurent out('z');
    const long sign = n % 2 == 0 ? 1 : -1;
    for (int t = 1; t <= n; ++t) {
        RatFunc coef(0, 'z');
        for (std::size_t k = 0; k < p; ++k)
            if (counts[k][t] != 0) coef += w.values()[k] * RatFunc(sign * counts[k][t], 'z');
        out.add_term(n + t, coef);
    }
    return out;
}

NLaurent trace_moment_oracle(const TraceMonomial& m, const Limits& lim) {
    return trace_moment_oracle(m, m.ensemble == Ensemble::wishart ? CoeffForm::c : CoeffForm::z, lim);
}

NLaurent trace_cumulant_oracle(const TraceMonomial& m, CoeffForm form, const Limits& lim) {
    const auto& parts = m.powers.parts();
    std::map<IntPartition, NLaurent> memo;
    auto moment = [&](const std::vector<int>& block) {
        std::vector<int> sub;
        for (int i : block) sub.push_back(parts[i - 1]);
        IntPartition key(sub);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, trace_moment_oracle({key, m.ensemble}, form, lim)).first;
        return it->second;
    };
    return cumulant_from_moments<NLaurent>(m.powers.length(), moment, lim);
}

NLaurent trace_cumulant_oracle(const TraceMonomial& m, const Limits& lim) {
    return trace_cumulant_oracle(m, m.ensemble == Ensemble::wishart ? CoeffForm::c : CoeffForm::z, lim);
}

std::map<int, RatFunc> expand_in_N(const NLaurent& v, int low) {
    std::map<int, RatFunc> out;
    auto add = [&](int power, const RatFunc& a) {
        auto it = out.find(power);
        if (it == out.end()) out.emplace(power, a);
        else it->second += a;
    };
    if (v.coeff_var() == 'c') {
        for (const auto& [k, a] : v.terms())
            if (k >= low) add(k, a.with_var(a.is_constant() ? 'c' : a.var()));
    } else {
        for (const auto& [k, a] : v.terms()) {
            const LaurentSeries s = series_expand_at_infinity(a, k - low);
            for (const auto& [e, coef] : s.terms())
                if (k + e >= low) add(k + e, one_minus_c_pow(e) * RatFunc(coef, 'c'));
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

RatFunc at_fixed_c(const NLaurent& v, const BigRat& c) {
    const RatFunc N = RatFunc::variable('N');
    RatFunc total(0, 'N');
    for (const auto& [k, a] : v.terms()) {
        RatFunc value = v.coeff_var() == 'c' ? RatFunc(a.eval(c), 'N')
                        : (1 - c == 0 ? RatFunc(a.eval(0), 'N') : a.scale_argument(1 - c, 'N'));
        total += value * N.pow(k);
    }
    return total;
}

BigRat evaluate(const NLaurent& v, const BigRat& c, long N) { return at_fixed_c(v, c).eval(BigRat(N)); }

CumulantSeries scaled_cumulant_oracle(const TraceMonomial& m, int gmax, const Limits& lim) {
    if (gmax < 0) throw std::invalid_argument("gmax must be non-negative");
    const int ell = m.powers.length();
    const NLaurent cumulant = trace_cumulant_oracle(m, lim);
    // N^{2(l-1)} from the scaling, N^{-l} from tr = Tr / N
    const NLaurent scaled = cumulant.shifted(ell - 2) *
                            RatFunc(BigRat(static_cast<unsigned long>(m.powers.class_size())), cumulant.coeff_var());
    const bool terminating = scaled.coeff_var() == 'c';
    int low = -2 * gmax - 1;
    if (terminating && !scaled.is_zero()) low = std::min(low, scaled.terms().begin()->first);
    const auto expansion = expand_in_N(scaled, low);

    for (const auto& [p, a] : expansion) {
        if (p > 0)
            throw VerificationFailure("scaled cumulant of " + m.to_string() + " has a positive power N^" +
                                      std::to_string(p));
        if (p % 2 != 0)
            throw VerificationFailure("scaled cumulant of " + m.to_string() + " has a nonzero odd coefficient at N^" +
                                      std::to_string(p));
    }
    CumulantSeries out;
    out.gmax = gmax;
    for (int g = 0; g <= gmax; ++g) {
        auto it = expansion.find(-2 * g);
        out.coeffs.push_back(it == expansion.end() ? RatFunc(0, 'c') : it->second);
    }
    out.exact = terminating && (scaled.is_zero() || scaled.terms().begin()->first >= -2 * gmax);
    return out;
}

CumulantSeries scaled_cumulant_hurwitz(const TraceMonomial& m, int gmax, Route route, const Limits& lim) {
    if (gmax < 0) throw std::invalid_argument("gmax must be non-negative");
    const int n = m.powers.size();
    const int ell = m.powers.length();
    const bool inverse = m.ensemble == Ensemble::inverse;
    CumulantSeries out;
    out.gmax = gmax;
    for (int g = 0; g <= gmax; ++g) {
        RatFunc f(0, 'c');
        const auto kind = inverse ? Monotonicity::weak : Monotonicity::strict;
        for (const auto& [nu, h] : hurwitz_row(m.powers, g, kind, route, lim)) {
            if (h.summed == 0) continue;
            const int r = ell + nu.length() + 2 * g - 2;
            const RatFunc weight = inverse ? one_minus_c_pow(-(n + r)) * RatFunc((n + r) % 2 == 0 ? 1 : -1, 'c')
                                           : c_monomial(n - r);
            f += weight * RatFunc(BigRat(h.summed), 'c');
        }
        out.coeffs.push_back(f);
    }
    // strict paths have r <= n - 1, so genera with 2g > n - l contribute nothing
    out.exact = !inverse && 2 * (gmax + 1) > n - ell;
    return out;
}

std::vector<BigRat> time_delay_coefficients(const IntPartition& mu, int gmax, const Limits& lim) {
    if (gmax < 0) throw std::invalid_argument("gmax must be non-negative");
    const int ell = mu.length();
    std::vector<BigRat> out;
    for (int g = 0; g <= gmax; ++g) {
        BigInt sum = 0;
        for (const auto& [nu, h] : hurwitz_row(mu, g, Monotonicity::weak, Route::automatic, lim)) sum += h.summed;
        BigRat value = BigRat(sum) * BigRat(static_cast<unsigned long>(mu.z())) /
                       BigRat(static_cast<unsigned long>(factorial(mu.size())));
        value *= BigRat(BigInt(1) << (ell - 1));
        value.canonicalize();
        if (value.get_den() != 1 || value < 0)
            throw VerificationFailure("time-delay coefficient c_" + std::to_string(2 * g) + mu.to_string() + " = " +
                                      hwz::to_string(value) + " is not a non-negative integer");
        out.push_back(value);
    }
    return out;
}

}  // namespace hwz
