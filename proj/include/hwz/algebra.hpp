#pragma once

// Exact arithmetic: rationals (GMP), univariate polynomials and rational
// functions over Q, truncated Laurent series at infinity, and the series
// containers used for 1/N expansions.

#include <gmpxx.h>

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hwz {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat parse_rational(const std::string& text);
std::string to_string(const BigRat& q);
std::string to_string(const BigInt& z);
BigInt binomial(long n, long k);

// Dense univariate polynomial over Q, coefficients in ascending degree.
class Poly {
public:
    Poly() = default;
    Poly(const BigRat& constant);
    Poly(long constant) : Poly(BigRat(constant)) {}
    explicit Poly(std::vector<BigRat> coeffs);

    static Poly monomial(const BigRat& c, int degree);
    static Poly x() { return monomial(1, 1); }
    // (x - root)
    static Poly linear(const BigRat& root);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const BigRat& coeff(int k) const;
    const BigRat& lead() const;
    const std::vector<BigRat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const BigRat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRat& s) { return a *= s; }

    // Euclidean division; throws on division by zero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // Exact division, throws when b does not divide a.
    static Poly exact_div(const Poly& a, const Poly& b);

    Poly monic() const;
    Poly pow(int e) const;
    BigRat eval(const BigRat& x) const;
    // p(lambda * x)
    Poly scale_argument(const BigRat& lambda) const;
    // p(x + s)
    Poly shift_argument(const BigRat& s) const;
    // Multiplicity of `root` as a zero of p.
    int root_multiplicity(const BigRat& root) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<BigRat> c_;
};

Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0

// Element of Q(var), kept with a monic denominator and coprime numerator.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const BigRat& c, char var = 'z') : num_(c), den_(1), var_(var) {}
    RatFunc(long c, char var = 'z') : RatFunc(BigRat(c), var) {}
    RatFunc(Poly num, Poly den, char var);
    static RatFunc variable(char var) { return RatFunc(Poly::x(), Poly(1), var); }
    static RatFunc polynomial(Poly p, char var) { return RatFunc(std::move(p), Poly(1), var); }

    char var() const { return var_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc inverse() const;
    RatFunc pow(int e) const;
    BigRat eval(const BigRat& x) const;  // throws at a pole
    // f(lambda * var), relabelled to new_var.
    RatFunc scale_argument(const BigRat& lambda, char new_var) const;
    RatFunc shift_argument(const BigRat& s) const;
    RatFunc with_var(char v) const;

    bool operator==(const RatFunc& o) const;

    std::string to_string() const;

private:
    void normalize();
    char merged_var(const RatFunc& o) const;

    Poly num_;
    Poly den_{1};
    char var_ = 'z';
};

// Truncated expansion sum_{e >= low} a_e v^e of a rational function at
// v -> infinity (exponents run downward).  Terms below `low` are unknown.
class LaurentSeries {
public:
    explicit LaurentSeries(int low = 0) : low_(low) {}

    int low() const { return low_; }
    BigRat coeff(int e) const;
    void add_term(int e, const BigRat& c);
    const std::map<int, BigRat>& terms() const { return terms_; }
    // Highest exponent with a nonzero coefficient (low - 1 when none).
    int top() const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries truncated(int low) const;

    bool operator==(const LaurentSeries& o) const;
    std::string to_string(char var = 'z') const;

private:
    int low_;
    std::map<int, BigRat> terms_;
};

// f - result = O(v^{-order-1}) as v -> infinity.
LaurentSeries series_expand_at_infinity(const RatFunc& f, int order);

BigRat elementary_symmetric(std::span<const BigRat> values, int r);
BigRat complete_symmetric(std::span<const BigRat> values, int r);

// sum_{g=0}^{gmax} N^{-2g} coeffs[g], each coefficient in Q(c).
struct CumulantSeries {
    int gmax = 0;
    std::vector<RatFunc> coeffs;
    bool exact = false;  // the full series terminates within gmax

    bool operator==(const CumulantSeries& o) const;
    // Same coefficients up to min(gmax).
    bool agrees_with(const CumulantSeries& o, int up_to) const;
};

// Finite sum_k N^k a_k with a_k in Q(var).  Used for exact moment and
// cumulant values, where var is either c (Wishart) or the Weingarten
// variable z.
class NLaurent {
public:
    explicit NLaurent(char coeff_var = 'z') : var_(coeff_var) {}
    static NLaurent monomial(const RatFunc& a, int power);

    char coeff_var() const { return var_; }
    const std::map<int, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(int power) const;
    void add_term(int power, const RatFunc& a);
    bool is_zero() const { return terms_.empty(); }

    NLaurent& operator+=(const NLaurent& o);
    NLaurent operator+(const NLaurent& o) const;
    NLaurent operator*(const NLaurent& o) const;
    NLaurent operator*(const RatFunc& s) const;
    NLaurent shifted(int power) const;  // times N^power

    bool operator==(const NLaurent& o) const;
    std::string to_string() const;

private:
    char var_;
    std::map<int, RatFunc> terms_;
};

}  // namespace hwz
