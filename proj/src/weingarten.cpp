#include "hwz/weingarten.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "hwz/perm_table.hpp"

namespace hwz {

// --- CentralElement ---

CentralElement::CentralElement(int n) : n_(n), values_(partitions_of(n).size(), RatFunc(0)) {}

CentralElement::CentralElement(int n, std::vector<RatFunc> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != partitions_of(n).size()) throw std::invalid_argument("one value per class required");
}

CentralElement CentralElement::delta_id(int n) {
    CentralElement d(n);
    d.set(IntPartition::ones(n), RatFunc(1));
    return d;
}

const std::vector<IntPartition>& CentralElement::classes() const { return perm_table(n_).classes(); }

const RatFunc& CentralElement::at(const IntPartition& mu) const {
    return values_.at(perm_table(n_).class_index_of(mu));
}

void CentralElement::set(const IntPartition& mu, RatFunc v) {
    values_.at(perm_table(n_).class_index_of(mu)) = std::move(v);
}

// --- structure constants ---

const StructureConstants& structure_constants(int n, const Limits& lim) {
    require_groupalgebra(n, lim);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<StructureConstants>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    const PermTable& table = perm_table(n);
    const std::size_t p = table.classes().size();
    auto m = std::make_unique<StructureConstants>(p, std::vector<std::vector<std::uint64_t>>(p, std::vector<std::uint64_t>(p, 0)));
    for (std::size_t k = 0; k < p; ++k) {
        const Permutation sigma = Permutation::canonical(table.classes()[k]);
        for (std::uint32_t i = 0; i < table.size(); ++i) {
            const Permutation rest = table.perm(table.inverse_index(i)) * sigma;
            ++(*m)[k][table.class_index(i)][table.class_index_of(rest.cycle_type())];
        }
    }
    std::lock_guard lock(mutex);
    return *cache.emplace(n, std::move(m)).first->second;
}

CentralElement omega(int n) {
    if (n < 1) throw std::invalid_argument("omega needs n >= 1");
    const auto& classes = perm_table(n).classes();
    std::vector<RatFunc> v;
    for (const auto& mu : classes) v.push_back(RatFunc::polynomial(Poly::monomial(1, mu.length()), 'z'));
    return CentralElement(n, std::move(v));
}

CentralElement convolve(const CentralElement& f, const CentralElement& g) {
    if (f.n() != g.n()) throw std::invalid_argument("convolution of class functions on different S_n");
    const auto& m = structure_constants(f.n());
    const std::size_t p = m.size();
    std::vector<RatFunc> out(p, RatFunc(0));
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t a = 0; a < p; ++a) {
            if (f.values()[a].is_zero()) continue;
            RatFunc inner(0);
            for (std::size_t b = 0; b < p; ++b)
                if (m[k][a][b] != 0) inner += g.values()[b] * RatFunc(static_cast<long>(m[k][a][b]));
            out[k] += f.values()[a] * inner;
        }
    return CentralElement(f.n(), std::move(out));
}

CentralElement wg(int n, const Limits& lim) {
    if (n < 1) throw std::invalid_argument("wg needs n >= 1");
    const auto& m = structure_constants(n, lim);
    const std::size_t p = m.size();
    const auto& classes = perm_table(n).classes();

    // (omega * x)(k) = sum_b A[k][b] x(b), augmented with delta_id.
    std::vector<std::vector<Poly>> a(p, std::vector<Poly>(p + 1));
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t r = 0; r < p; ++r)
            for (std::size_t b = 0; b < p; ++b)
                if (m[k][r][b] != 0) a[k][b] += Poly::monomial(BigRat(static_cast<long>(m[k][r][b])), classes[r].length());
    a[perm_table(n).class_index_of(IntPartition::ones(n))][p] = Poly(1);

    // Fraction-free Gauss-Jordan: every division below is exact and the
    // diagonal ends up holding the determinant.
    Poly prev(1);
    for (std::size_t k = 0; k < p; ++k) {
        std::size_t pivot = k;
        while (pivot < p && a[pivot][k].is_zero()) ++pivot;
        if (pivot == p) throw std::domain_error("singular class-algebra system");
        std::swap(a[k], a[pivot]);
        for (std::size_t i = 0; i < p; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j <= p; ++j) {
                if (j == k) continue;
                a[i][j] = Poly::exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }
    std::vector<RatFunc> values;
    for (std::size_t i = 0; i < p; ++i) values.emplace_back(a[i][p], a[i][i], 'z');
    return CentralElement(n, std::move(values));
}

// --- GroupAlgebraVector ---

GroupAlgebraVector::GroupAlgebraVector(int n) : n_(n), c_(perm_table(n).size()) {}

GroupAlgebraVector GroupAlgebraVector::basis(const Permutation& p, const Poly& coeff) {
    GroupAlgebraVector v(p.size());
    v.add(p, coeff);
    return v;
}

const Poly& GroupAlgebraVector::coeff(const Permutation& p) const { return c_[perm_table(n_).index_of(p)]; }

void GroupAlgebraVector::add(const Permutation& p, const Poly& c) {
    if (p.size() != n_) throw std::invalid_argument("permutation of the wrong size");
    c_[perm_table(n_).index_of(p)] += c;
}

std::size_t GroupAlgebraVector::support_size() const {
    std::size_t s = 0;
    for (const auto& c : c_) s += !c.is_zero();
    return s;
}

GroupAlgebraVector& GroupAlgebraVector::operator+=(const GroupAlgebraVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("group algebras of different S_n");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

GroupAlgebraVector operator*(const GroupAlgebraVector& a, const GroupAlgebraVector& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("group algebras of different S_n");
    const PermTable& table = perm_table(a.n_);
    GroupAlgebraVector out(a.n_);
    for (std::uint32_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::uint32_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out.c_[table.index_of(table.perm(i) * table.perm(j))] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

bool GroupAlgebraVector::is_central() const {
    const PermTable& table = perm_table(n_);
    std::vector<const Poly*> seen(table.classes().size(), nullptr);
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
        const Poly*& ref = seen[table.class_index(i)];
        if (!ref) ref = &c_[i];
        else if (!(*ref == c_[i])) return false;
    }
    return true;
}

CentralElement GroupAlgebraVector::to_central(char var) const {
    if (!is_central()) throw std::logic_error("group-algebra element is not central");
    const PermTable& table = perm_table(n_);
    std::vector<RatFunc> values;
    for (const auto& mu : table.classes())
        values.push_back(RatFunc::polynomial(c_[table.index_of(Permutation::canonical(mu))], var));
    return CentralElement(n_, std::move(values));
}

GroupAlgebraVector jucys_murphy(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("Jucys-Murphy index out of range");
    GroupAlgebraVector j(n);
    for (int a = 1; a < k; ++a) j.add(Permutation::transposition(n, a, k), Poly(1));
    return j;
}

CentralElement omega_via_jm(int n, const Limits& lim) {
    if (n < 1) throw std::invalid_argument("omega needs n >= 1");
    require_groupalgebra(n, lim);
    GroupAlgebraVector v = GroupAlgebraVector::basis(Permutation::identity(n));
    const Poly z = Poly::x();
    for (int k = 1; k <= n; ++k) v = v * (GroupAlgebraVector::basis(Permutation::identity(n), z) + jucys_murphy(n, k));
    return v.to_central('z');
}

std::vector<std::vector<BigInt>> jm_tuple_counts(int n, int rmax, Monotonicity kind, const Limits& lim) {
    if (n < 1 || rmax < 0) throw std::invalid_argument("jm_tuple_counts needs n >= 1 and rmax >= 0");
    require_groupalgebra(n, lim);
    const PermTable& table = perm_table(n);
    std::vector<std::vector<BigInt>> w(rmax + 1, std::vector<BigInt>(table.size(), 0));
    w[0][table.identity_index()] = 1;
    auto step = [&](const std::vector<BigInt>& from, std::vector<BigInt>& to, int b) {
        for (std::uint32_t i = 0; i < table.size(); ++i) {
            if (sgn(from[i]) == 0) continue;
            for (int a = 1; a < b; ++a) to[table.right_mul(i, a, b)] += from[i];
        }
    };
    for (int b = 2; b <= n; ++b) {
        if (kind == Monotonicity::weak)
            for (int d = 1; d <= rmax; ++d) step(w[d - 1], w[d], b);
        else
            for (int d = rmax; d >= 1; --d) step(w[d - 1], w[d], b);
    }
    std::vector<std::vector<BigInt>> out(rmax + 1);
    for (int r = 0; r <= rmax; ++r)
        for (const auto& mu : table.classes()) out[r].push_back(w[r][table.index_of(Permutation::canonical(mu))]);
    return out;
}

CentralElement omega_via_strict_tuples(int n, const Limits& lim) {
    const auto counts = jm_tuple_counts(n, n - 1, Monotonicity::strict, lim);
    std::vector<RatFunc> values(counts[0].size(), RatFunc(0));
    for (int r = 0; r < n; ++r)
        for (std::size_t k = 0; k < values.size(); ++k)
            values[k] += RatFunc::polynomial(Poly::monomial(BigRat(counts[r][k]), n - r), 'z');
    return CentralElement(n, std::move(values));
}

std::vector<LaurentSeries> wg_series(int n, int order, const Limits& lim) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    const auto counts = jm_tuple_counts(n, order, Monotonicity::weak, lim);
    std::vector<LaurentSeries> out(counts[0].size(), LaurentSeries(-n - order));
    for (int r = 0; r <= order; ++r)
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k].add_term(-n - r, r % 2 == 0 ? BigRat(counts[r][k]) : BigRat(-counts[r][k]));
    return out;
}

bool wg_poles_in_range(const CentralElement& w) {
    const int n = w.n();
    for (const auto& v : w.values()) {
        Poly den = v.den();
        for (int k = 1 - n; k <= n - 1; ++k) {
            const int mult = den.root_multiplicity(k);
            for (int i = 0; i < mult; ++i) den = Poly::exact_div(den, Poly::linear(k));
        }
        if (den.degree() > 0) return false;
    }
    return true;
}

}  // namespace hwz
