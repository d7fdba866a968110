#pragma once

// Cumulants of traces of powers of a complex Wishart matrix W = X X^* / N
// (X an N x M standard complex Gaussian matrix, c = M / N) and of W^{-1}.
//
// Two independent routes:
//  * oracle: exact moments E prod Tr X^{mu_i} as finite Laurent polynomials in
//    N (full sums over S_n), cumulants by Moebius inversion over set partitions;
//  * hurwitz: the genus expansion in terms of (strictly) monotone double
//    Hurwitz numbers.
//
// Scaled cumulant: C_X(mu) = |mu|!/z_mu N^{2(l-1)} C_l(tr X^{mu_1}, ..., tr X^{mu_l})
// with tr = Tr / N and l = #mu, expanded as sum_g N^{-2g} f_g(c).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hwz/algebra.hpp"
#include "hwz/errors.hpp"
#include "hwz/hurwitz.hpp"
#include "hwz/limits.hpp"
#include "hwz/sym.hpp"

namespace hwz {

enum class Ensemble { wishart, inverse };
const char* to_string(Ensemble e);
Ensemble parse_ensemble(const std::string& text);  // "W" | "Winv"

// prod_i tr X^{mu_i}, X = W or W^{-1}.  Mixed signs are not representable.
struct TraceMonomial {
    IntPartition powers;
    Ensemble ensemble = Ensemble::wishart;

    std::string to_string() const;
};

// Point values for evaluating exact results; either may be left symbolic.
struct WishartParams {
    std::optional<BigRat> c;
    std::optional<long> N;

    long M() const;  // cN, requires both and an integer product
};

// Human-readable domain where the expansion is valid.
std::string validity_domain(const TraceMonomial& m);
// Whether concrete (c, N) lies in that domain.
bool in_validity_domain(const TraceMonomial& m, const BigRat& c, long N);

// Coefficient field of oracle results:
//  c: Q(c), Wishart only (M = cN);
//  z: Q(z) with z = (1 - c) N the Weingarten parameter, so M = N - z.
enum class CoeffForm { c, z };

// E prod_i Tr X^{mu_i} exactly, as a Laurent polynomial in N.
NLaurent trace_moment_oracle(const TraceMonomial& m, CoeffForm form, const Limits& lim = default_limits());
// Wishart defaults to the c form; the inverse is only available in the z form.
NLaurent trace_moment_oracle(const TraceMonomial& m, const Limits& lim = default_limits());

// C_l(Y_1, ..., Y_l) = sum_pi (|pi|-1)! (-1)^{|pi|-1} prod_{B in pi} E prod_{i in B} Y_i.
template <class T, class Moment>
T cumulant_from_moments(int ell, Moment&& moment, const Limits& lim = default_limits());

// Relative cumulant C_{nu, 1}: the same alternating sum restricted to pi >= nu,
// with moment(pi) supplied for every such pi.
template <class T, class Moment>
T relative_cumulant(const SetPartition& nu, Moment&& moment, const T& zero);

// C_l(Tr X^{mu_1}, ..., Tr X^{mu_l}) from oracle moments.
NLaurent trace_cumulant_oracle(const TraceMonomial& m, CoeffForm form, const Limits& lim = default_limits());
NLaurent trace_cumulant_oracle(const TraceMonomial& m, const Limits& lim = default_limits());

// sum_k N^k a_k with a_k in Q(z), z = (1 - c) N, re-expanded in powers of N
// with coefficients in Q(c); every power >= low is exact.  c-form input is
// passed through.
std::map<int, RatFunc> expand_in_N(const NLaurent& v, int low);

// The exact value at fixed c as a rational function of N (variable 'N').
RatFunc at_fixed_c(const NLaurent& v, const BigRat& c);
BigRat evaluate(const NLaurent& v, const BigRat& c, long N);

CumulantSeries scaled_cumulant_oracle(const TraceMonomial& m, int gmax, const Limits& lim = default_limits());
CumulantSeries scaled_cumulant_hurwitz(const TraceMonomial& m, int gmax, Route route = Route::automatic,
                                       const Limits& lim = default_limits());

// c_{2g}(mu) = 2^{l-1} z_mu/|mu|! sum_nu H_g(mu, nu); throws VerificationFailure
// unless every value is a non-negative integer.
std::vector<BigRat> time_delay_coefficients(const IntPartition& mu, int gmax, const Limits& lim = default_limits());

// --- templates ---

namespace detail {
BigInt moebius_to_top(int blocks);  // (-1)^{k-1} (k-1)!
inline BigRat scaled(const BigRat& v, const BigInt& k) { return v * k; }
inline RatFunc scaled(const RatFunc& v, const BigInt& k) { return v * RatFunc(BigRat(k), v.var()); }
inline NLaurent scaled(const NLaurent& v, const BigInt& k) { return v * RatFunc(BigRat(k), v.coeff_var()); }
}  // namespace detail

template <class T, class Moment>
T relative_cumulant(const SetPartition& nu, Moment&& moment, const T& zero) {
    T total = zero;
    for_each_coarsening(nu, [&](const SetPartition& pi) {
        total += detail::scaled(moment(pi), detail::moebius_to_top(pi.num_blocks()));
    });
    return total;
}

template <class T, class Moment>
T cumulant_from_moments(int ell, Moment&& moment, const Limits& lim) {
    if (ell < 1) throw std::invalid_argument("cumulant needs at least one variable");
    require_bell(ell, lim);
    std::optional<T> total;
    for_each_coarsening(SetPartition::finest(ell), [&](const SetPartition& pi) {
        std::optional<T> product;
        for (const auto& block : pi.blocks()) {
            T m = moment(block);
            product = product ? *product * m : m;
        }
        T term = detail::scaled(*product, detail::moebius_to_top(pi.num_blocks()));
        if (total) *total += term;
        else total = std::move(term);
    });
    return *total;
}

}  // namespace hwz
