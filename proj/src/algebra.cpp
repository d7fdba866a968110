#include "hwz/algebra.hpp"

#include <algorithm>

namespace hwz {

namespace {
const BigRat kZero(0);
}

BigRat parse_rational(const std::string& text) {
    BigRat q;
    if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("invalid rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const BigRat& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// --- Poly ---

Poly::Poly(const BigRat& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const BigRat& c, int degree) {
    if (c == 0) return Poly();
    std::vector<BigRat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const BigRat& root) { return Poly(std::vector<BigRat>{-root, BigRat(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRat& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
}

const BigRat& Poly::lead() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const BigRat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigRat> out(a.c_.size() + b.c_.size() - 1);
    BigRat t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            t = a.c_[i] * b.c_[j];
            out[i + j] += t;
        }
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<BigRat> rem = a.c_;
    std::vector<BigRat> quo(a.degree() - b.degree() + 1);
    const BigRat inv_lead = 1 / b.lead();
    const int db = b.degree();
    BigRat t;
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        BigRat q = rem[k] * inv_lead;
        quo[k - db] = q;
        for (int j = 0; j <= db; ++j) {
            t = q * b.c_[j];
            rem[k - db + j] -= t;
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    r *= 1 / lead();
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly result(1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
    return acc;
}

Poly Poly::scale_argument(const BigRat& lambda) const {
    Poly r = *this;
    BigRat p = 1;
    for (auto& x : r.c_) {
        x *= p;
        p *= lambda;
    }
    r.trim();
    return r;
}

Poly Poly::shift_argument(const BigRat& s) const {
    // Horner in (x + s).
    Poly acc;
    const Poly lin(std::vector<BigRat>{s, BigRat(1)});
    for (int k = degree(); k >= 0; --k) acc = acc * lin + Poly(c_[k]);
    return acc;
}

int Poly::root_multiplicity(const BigRat& root) const {
    if (is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
    int m = 0;
    Poly p = *this;
    const Poly lin = linear(root);
    while (p.degree() >= 1) {
        auto [q, r] = divmod(p, lin);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++m;
    }
    return m;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const BigRat& a = c_[k];
        if (a == 0) continue;
        std::string mag = (a < 0 ? BigRat(-a) : a).get_str();
        if (s.empty())
            s += a < 0 ? "-" : "";
        else
            s += a < 0 ? " - " : " + ";
        bool unit = (a == 1 || a == -1) && k > 0;
        if (!unit) s += mag;
        if (k > 0) {
            if (!unit) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// --- RatFunc ---

RatFunc::RatFunc(Poly num, Poly den, char var) : num_(std::move(num)), den_(std::move(den)), var_(var) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::exact_div(num_, g);
            den_ = Poly::exact_div(den_, g);
        }
    }
    BigRat l = den_.lead();
    if (l != 1) {
        BigRat inv = 1 / l;
        num_ *= inv;
        den_ *= inv;
    }
}

char RatFunc::merged_var(const RatFunc& o) const {
    if (var_ == o.var_) return var_;
    if (o.is_constant()) return var_;
    if (is_constant()) return o.var_;
    throw std::invalid_argument(std::string("rational functions in different variables: ") + var_ + " vs " + o.var_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    var_ = merged_var(o);
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    var_ = merged_var(o);
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return *this;
    }
    if (o.is_constant()) {
        num_ *= o.num_.lead();
        return *this;
    }
    // Cross-cancel before multiplying to keep degrees low.
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n1 = g1.degree() > 0 ? Poly::exact_div(num_, g1) : num_;
    Poly d2 = g1.degree() > 0 ? Poly::exact_div(o.den_, g1) : o.den_;
    Poly n2 = g2.degree() > 0 ? Poly::exact_div(o.num_, g2) : o.num_;
    Poly d1 = g2.degree() > 0 ? Poly::exact_div(den_, g2) : den_;
    num_ = n1 * n2;
    den_ = d1 * d2;
    BigRat l = den_.lead();
    if (l != 1) {
        BigRat inv = 1 / l;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RatFunc(den_, num_, var_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r;
    r.var_ = var_;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

BigRat RatFunc::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d == 0) throw std::domain_error("evaluation of a rational function at a pole");
    return num_.eval(x) / d;
}

RatFunc RatFunc::scale_argument(const BigRat& lambda, char new_var) const {
    if (lambda == 0) throw std::invalid_argument("scale_argument: lambda must be nonzero");
    return RatFunc(num_.scale_argument(lambda), den_.scale_argument(lambda), new_var);
}

RatFunc RatFunc::shift_argument(const BigRat& s) const {
    return RatFunc(num_.shift_argument(s), den_.shift_argument(s), var_);
}

RatFunc RatFunc::with_var(char v) const {
    RatFunc r = *this;
    r.var_ = v;
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    if (num_ != o.num_ || den_ != o.den_) return false;
    return var_ == o.var_ || is_constant();
}

std::string RatFunc::to_string() const {
    if (den_.is_constant()) return num_.to_string(var_);
    return "(" + num_.to_string(var_) + ")/(" + den_.to_string(var_) + ")";
}

// --- LaurentSeries ---

BigRat LaurentSeries::coeff(int e) const {
    if (e < low_) throw std::out_of_range("coefficient below the truncation order");
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRat(0) : it->second;
}

void LaurentSeries::add_term(int e, const BigRat& c) {
    if (e < low_ || c == 0) return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
}

int LaurentSeries::top() const { return terms_.empty() ? low_ - 1 : terms_.rbegin()->first; }

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    LaurentSeries r(std::max(low_, o.low_));
    for (auto& [e, c] : terms_) r.add_term(e, c);
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    LaurentSeries r(std::max(top() + o.low_, o.top() + low_));
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentSeries LaurentSeries::truncated(int low) const {
    if (low < low_) throw std::invalid_argument("cannot extend a truncated series");
    LaurentSeries r(low);
    for (auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const { return low_ == o.low_ && terms_ == o.terms_; }

std::string LaurentSeries::to_string(char var) const {
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + it->second.get_str() + ")*" + var + "^" + std::to_string(it->first);
    }
    if (s.empty()) s = "0";
    return s + " + O(" + var + "^" + std::to_string(low_ - 1) + ")";
}

LaurentSeries series_expand_at_infinity(const RatFunc& f, int order) {
    LaurentSeries out(-order);
    if (f.is_zero()) return out;
    const Poly& P = f.num();
    const Poly& Q = f.den();
    const int p = P.degree(), q = Q.degree();
    const int lead = p - q;
    const int count = lead + order;  // indices i = 0..count, exponent lead - i
    if (count < 0) return out;
    // f = v^{p-q} * Prev(w) / Qrev(w), w = 1/v
    std::vector<BigRat> s(count + 1);
    const BigRat inv_q0 = 1 / Q.lead();
    for (int i = 0; i <= count; ++i) {
        BigRat acc = P.coeff(p - i);
        for (int j = 1; j <= std::min(i, q); ++j) acc -= Q.coeff(q - j) * s[i - j];
        s[i] = acc * inv_q0;
        out.add_term(lead - i, s[i]);
    }
    return out;
}

BigRat elementary_symmetric(std::span<const BigRat> values, int r) {
    if (r < 0) throw std::invalid_argument("negative degree");
    std::vector<BigRat> e(r + 1);
    e[0] = 1;
    for (const auto& x : values)
        for (int k = r; k >= 1; --k) e[k] += e[k - 1] * x;
    return e[r];
}

BigRat complete_symmetric(std::span<const BigRat> values, int r) {
    if (r < 0) throw std::invalid_argument("negative degree");
    std::vector<BigRat> h(r + 1);
    h[0] = 1;
    for (const auto& x : values)
        for (int k = 1; k <= r; ++k) h[k] += h[k - 1] * x;
    return h[r];
}

// --- CumulantSeries ---

bool CumulantSeries::operator==(const CumulantSeries& o) const {
    return gmax == o.gmax && exact == o.exact && coeffs == o.coeffs;
}

bool CumulantSeries::agrees_with(const CumulantSeries& o, int up_to) const {
    up_to = std::min({up_to, gmax, o.gmax});
    for (int g = 0; g <= up_to; ++g)
        if (!(coeffs[g] == o.coeffs[g])) return false;
    return true;
}

// --- NLaurent ---

NLaurent NLaurent::monomial(const RatFunc& a, int power) {
    NLaurent r(a.var());
    r.add_term(power, a);
    return r;
}

RatFunc NLaurent::coeff(int power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? RatFunc(0, var_) : it->second;
}

void NLaurent::add_term(int power, const RatFunc& a) {
    if (a.is_zero()) return;
    auto it = terms_.find(power);
    if (it == terms_.end()) {
        terms_.emplace(power, a.is_constant() ? a.with_var(var_) : a);
        return;
    }
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
}

NLaurent& NLaurent::operator+=(const NLaurent& o) {
    for (auto& [k, a] : o.terms_) add_term(k, a);
    return *this;
}

NLaurent NLaurent::operator+(const NLaurent& o) const {
    NLaurent r = *this;
    r += o;
    return r;
}

NLaurent NLaurent::operator*(const NLaurent& o) const {
    NLaurent r(var_);
    for (auto& [k1, a1] : terms_)
        for (auto& [k2, a2] : o.terms_) r.add_term(k1 + k2, a1 * a2);
    return r;
}

NLaurent NLaurent::operator*(const RatFunc& s) const {
    NLaurent r(var_);
    if (s.is_zero()) return r;
    for (auto& [k, a] : terms_) r.add_term(k, a * s);
    return r;
}

NLaurent NLaurent::shifted(int power) const {
    NLaurent r(var_);
    for (auto& [k, a] : terms_) r.terms_.emplace(k + power, a);
    return r;
}

bool NLaurent::operator==(const NLaurent& o) const { return terms_ == o.terms_; }

std::string NLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "[" + it->second.to_string() + "]*N^" + std::to_string(it->first);
    }
    return s;
}

}  // namespace hwz
