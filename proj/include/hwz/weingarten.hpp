#pragma once

// Class functions on S_n with values in Q(z): Omega_{n,z}(sigma) = z^{#sigma},
// its convolution inverse Wg_{n,z}, and the Jucys-Murphy factorization
// Omega_{n,z} = (z + J_1) ... (z + J_n).

#include <vector>

#include "hwz/algebra.hpp"
#include "hwz/hurwitz.hpp"
#include "hwz/limits.hpp"
#include "hwz/sym.hpp"

namespace hwz {

class CentralElement {
public:
    CentralElement() = default;
    // Zero function on S_n.
    explicit CentralElement(int n);
    CentralElement(int n, std::vector<RatFunc> values);

    static CentralElement delta_id(int n);

    int n() const { return n_; }
    // Same order as partitions_of(n).
    const std::vector<IntPartition>& classes() const;
    const std::vector<RatFunc>& values() const { return values_; }
    const RatFunc& at(const IntPartition& mu) const;
    void set(const IntPartition& mu, RatFunc v);

    bool operator==(const CentralElement& o) const { return n_ == o.n_ && values_ == o.values_; }

private:
    int n_ = 0;
    std::vector<RatFunc> values_;
};

// M[k][a][b] = #{tau : [tau] = a, [tau^{-1} sigma_k] = b} for a fixed sigma_k
// of class k (class indices as in partitions_of(n)).  Cached per n.
using StructureConstants = std::vector<std::vector<std::vector<std::uint64_t>>>;
const StructureConstants& structure_constants(int n, const Limits& lim = default_limits());

CentralElement omega(int n);
// (f * g)(sigma) = sum_tau f(tau) g(tau^{-1} sigma)
CentralElement convolve(const CentralElement& f, const CentralElement& g);
// Convolution inverse of omega(n), by fraction-free elimination over Q[z].
CentralElement wg(int n, const Limits& lim = default_limits());

// Element of Q[z][S_n], dense over perm_table(n).
class GroupAlgebraVector {
public:
    explicit GroupAlgebraVector(int n);
    static GroupAlgebraVector basis(const Permutation& p, const Poly& coeff = Poly(1));

    int n() const { return n_; }
    const Poly& coeff(const Permutation& p) const;
    void add(const Permutation& p, const Poly& c);
    std::size_t support_size() const;

    GroupAlgebraVector& operator+=(const GroupAlgebraVector& o);
    friend GroupAlgebraVector operator+(GroupAlgebraVector a, const GroupAlgebraVector& b) { return a += b; }
    friend GroupAlgebraVector operator*(const GroupAlgebraVector& a, const GroupAlgebraVector& b);

    bool is_central() const;
    // Throws std::logic_error when the vector is not constant on classes.
    CentralElement to_central(char var = 'z') const;

    bool operator==(const GroupAlgebraVector& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    int n_;
    std::vector<Poly> c_;
};

// J_k = (1 k) + ... + (k-1 k); J_1 = 0.
GroupAlgebraVector jucys_murphy(int n, int k);
CentralElement omega_via_jm(int n, const Limits& lim = default_limits());

// counts[r][class] = number of r-tuples of transpositions with weakly (or
// strictly) increasing b whose product is one fixed sigma of that class.
// No transitivity condition.
std::vector<std::vector<BigInt>> jm_tuple_counts(int n, int rmax, Monotonicity kind,
                                                 const Limits& lim = default_limits());

// sum_r e_r(J) z^{n-r}, collected on classes.
CentralElement omega_via_strict_tuples(int n, const Limits& lim = default_limits());

// Per class, the expansion sum_r (-1)^r z^{-n-r} #(monotone r-tuples) down to
// z^{-n-order}.
std::vector<LaurentSeries> wg_series(int n, int order, const Limits& lim = default_limits());

// True when every pole of every value is an integer in [1-n, n-1].
bool wg_poles_in_range(const CentralElement& w);

}  // namespace hwz
