#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hwz/cumulants.hpp"

using namespace hwz;

namespace {
IntPartition P(const char* s) { return IntPartition::parse(s); }
TraceMonomial W(const char* s) { return {P(s), Ensemble::wishart}; }
TraceMonomial Winv(const char* s) { return {P(s), Ensemble::inverse}; }
const RatFunc c = RatFunc::variable('c');
const RatFunc N = RatFunc::variable('N');
}  // namespace

TEST_CASE("first moments") {
    // E Tr W = N c
    const NLaurent m1 = trace_moment_oracle(W("1"));
    CHECK(m1.terms().size() == 1);
    CHECK(m1.coeff(1) == c);
    for (long n : {3L, 5L}) CHECK(evaluate(m1, 2, n) == 2 * n);

    // E Tr W^{-1} = N / (c - 1)
    const NLaurent inv1 = trace_moment_oracle(Winv("1"));
    CHECK(at_fixed_c(inv1, 3) == N * RatFunc(BigRat(1, 2), 'N'));
    CHECK(at_fixed_c(inv1, BigRat(5, 2)) == N * RatFunc(BigRat(2, 3), 'N'));

    // E tr W^{-2} = 2 N^2 / (N^2 - 1) at c = 2
    const RatFunc tr2 = at_fixed_c(trace_moment_oracle(Winv("2")), 2) / N;
    CHECK(tr2 == RatFunc(2, 'N') * N * N / (N * N - RatFunc(1, 'N')));
    CHECK_THROWS_AS(trace_moment_oracle(Winv("1"), CoeffForm::c), std::invalid_argument);
}

TEST_CASE("both coefficient forms describe the same Wishart moments") {
    for (const char* mu : {"1", "2", "1,1", "3", "2,1"}) {
        const NLaurent cf = trace_moment_oracle(W(mu), CoeffForm::c);
        const NLaurent zf = trace_moment_oracle(W(mu), CoeffForm::z);
        for (BigRat cv : {BigRat(2), BigRat(7, 3)}) CHECK(at_fixed_c(cf, cv) == at_fixed_c(zf, cv));
    }
}

TEST_CASE("cumulants from moments") {
    auto one = [](const std::vector<int>&) { return BigRat(5); };
    CHECK(cumulant_from_moments<BigRat>(1, one) == 5);
    // Y1, Y2 with E Y1 = 2, E Y2 = 3, E Y1 Y2 = 10
    auto two = [](const std::vector<int>& b) {
        if (b.size() == 2) return BigRat(10);
        return BigRat(b[0] == 1 ? 2 : 3);
    };
    CHECK(cumulant_from_moments<BigRat>(2, two) == 4);
    // the constant variable 1: every higher cumulant vanishes
    auto unit = [](const std::vector<int>&) { return BigRat(1); };
    for (int ell = 2; ell <= 5; ++ell) CHECK(cumulant_from_moments<BigRat>(ell, unit) == 0);

    // relative cumulant at the bottom equals the ordinary cumulant
    auto by_partition = [](const SetPartition& pi) {
        BigRat prod = 1;
        for (const auto& b : pi.blocks()) prod *= BigRat(static_cast<long>(b.size() * b.size() + 1));
        return prod;
    };
    auto by_block = [](const std::vector<int>& b) { return BigRat(static_cast<long>(b.size() * b.size() + 1)); };
    CHECK(relative_cumulant(SetPartition::finest(4), by_partition, BigRat(0)) == cumulant_from_moments<BigRat>(4, by_block));
    CHECK(relative_cumulant(SetPartition::coarsest(3), by_partition, BigRat(0)) == 10);
    CHECK_THROWS_AS(cumulant_from_moments<BigRat>(7, one), ResourceGuardError);
}

TEST_CASE("expansion in powers of N") {
    // N / z with z = (1 - c) N is 1 / (1 - c)
    NLaurent v('z');
    v.add_term(1, RatFunc(1, 'z') / RatFunc::variable('z'));
    const auto e = expand_in_N(v, -4);
    REQUIRE(e.size() == 1);
    CHECK(e.at(0) == RatFunc(1, 'c') / (RatFunc(1, 'c') - c));
}

TEST_CASE("scaled cumulants: examples") {
    const auto w1 = scaled_cumulant_oracle(W("1"), 3);
    CHECK(w1.coeffs[0] == c);
    for (int g = 1; g <= 3; ++g) CHECK(w1.coeffs[g].is_zero());
    CHECK(w1.exact);

    const auto inv1 = scaled_cumulant_oracle(Winv("1"), 3);
    CHECK(inv1.coeffs[0] == RatFunc(1, 'c') / (c - RatFunc(1, 'c')));
    for (int g = 1; g <= 3; ++g) CHECK(inv1.coeffs[g].is_zero());

    const auto inv2 = scaled_cumulant_hurwitz(Winv("2"), 4);
    for (int g = 0; g <= 4; ++g) CHECK(inv2.coeffs[g].eval(2) == 2);

    const auto third = scaled_cumulant_hurwitz(Winv("1,1,1"), 0);
    const RatFunc d = c - RatFunc(1, 'c');
    CHECK(third.coeffs[0] == RatFunc(4, 'c') / d.pow(5) + RatFunc(12, 'c') / d.pow(6) + RatFunc(8, 'c') / d.pow(7));
    CHECK(third.coeffs[0] == scaled_cumulant_oracle(Winv("1,1,1"), 0).coeffs[0]);
}

TEST_CASE("scaled cumulants: Wishart routes agree exactly") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            const TraceMonomial m{mu, Ensemble::wishart};
            const int gmax = n / 2 + 1;
            const auto oracle = scaled_cumulant_oracle(m, gmax);
            const auto hurwitz = scaled_cumulant_hurwitz(m, gmax);
            CHECK(oracle.exact);
            CHECK(hurwitz.exact);
            CHECK(oracle == hurwitz);
        }
}

TEST_CASE("scaled cumulants: inverse routes agree") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_of(n)) {
            const TraceMonomial m{mu, Ensemble::inverse};
            const auto oracle = scaled_cumulant_oracle(m, 3);
            const auto hurwitz = scaled_cumulant_hurwitz(m, 3);
            CHECK_FALSE(oracle.exact);
            CHECK(oracle.agrees_with(hurwitz, 3));
        }
}

TEST_CASE("time-delay coefficients") {
    for (auto v : time_delay_coefficients(P("2"), 5)) CHECK(v == 2);
    CHECK(time_delay_coefficients(P("1"), 0)[0] == 1);
    CHECK(time_delay_coefficients(P("1,1,1"), 0)[0] == 96);
}

TEST_CASE("validity metadata") {
    CHECK(validity_domain(Winv("2,1")) == "c > 1 + 3/N");
    CHECK(in_validity_domain(Winv("2,1"), 2, 4));
    CHECK_FALSE(in_validity_domain(Winv("2,1"), 2, 3));
    CHECK(in_validity_domain(W("3"), BigRat(1, 2), 4) == false);
    CHECK(WishartParams{BigRat(3, 2), 4}.M() == 6);
}
