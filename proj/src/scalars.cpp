#include "gha/scalars.hpp"

#include <sstream>

namespace gha {

BigInt bigint_pow(const BigInt& base, int e) {
    if (e < 0) throw std::invalid_argument("bigint_pow: negative exponent");
    BigInt r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

GenericScalar GenericScalar::monomial(int a_deg, int v_deg, BigInt coeff) {
    if (a_deg < 0) throw std::invalid_argument("GenericScalar: a-degree must be >= 0");
    GenericScalar f;
    if (coeff != 0) f.terms_[{a_deg, v_deg}] = std::move(coeff);
    return f;
}

BigInt GenericScalar::coeff(int a_deg, int v_deg) const {
    auto it = terms_.find({a_deg, v_deg});
    return it == terms_.end() ? BigInt(0) : it->second;
}

int GenericScalar::min_v_degree() const {
    if (is_zero()) throw std::logic_error("min_v_degree of zero");
    int m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}

int GenericScalar::max_v_degree() const {
    if (is_zero()) throw std::logic_error("max_v_degree of zero");
    int m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
}

int GenericScalar::max_a_degree() const {
    if (is_zero()) throw std::logic_error("max_a_degree of zero");
    return terms_.rbegin()->first.first;
}

void GenericScalar::add_term(int a_deg, int v_deg, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(a_deg, v_deg), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GenericScalar& GenericScalar::operator+=(const GenericScalar& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

GenericScalar& GenericScalar::operator-=(const GenericScalar& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

GenericScalar GenericScalar::operator-() const {
    GenericScalar r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

GenericScalar operator*(const GenericScalar& x, const GenericScalar& y) {
    GenericScalar r;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            r.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
    return r;
}

std::string GenericScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (k.first != 0) os << "*a^" << k.first;
        if (k.second != 0) os << "*v^" << k.second;
    }
    return os.str();
}

GenericScalar bar(const GenericScalar& f) {
    GenericScalar r;
    for (const auto& [k, c] : f.terms()) {
        const auto [a_deg, v_deg] = k;
        BigInt cc = (a_deg % 2 == 0) ? c : -c;
        r += GenericScalar::monomial(a_deg, -v_deg - 2 * a_deg, cc);
    }
    return r;
}

SpecializedScalar SpecializedScalar::from_int(int b, BigInt c) {
    return monomial(b, 0, std::move(c), 0);
}

SpecializedScalar SpecializedScalar::monomial(int b, int v_deg, BigInt num, int b_pow) {
    SpecializedScalar f(b);
    f.add_term(v_deg, std::move(num), b_pow);
    return f;
}

void SpecializedScalar::add_term(int v_deg, BigInt num, int b_pow) {
    if (b_pow < 0) throw std::invalid_argument("SpecializedScalar: negative b-power");
    if (num == 0) return;
    if (b_ == 0) throw std::logic_error("SpecializedScalar: adding term to unbound scalar");
    if (b_ == 1) b_pow = 0;
    auto it = terms_.find(v_deg);
    if (it == terms_.end()) {
        Coeff c{std::move(num), b_pow};
        // lowest terms: strip factors of b out of the numerator
        while (c.b_pow > 0 && c.num % b_ == 0) {
            c.num /= b_;
            --c.b_pow;
        }
        terms_.emplace(v_deg, std::move(c));
        return;
    }
    Coeff& cur = it->second;
    int p = std::max(cur.b_pow, b_pow);
    BigInt total = cur.num * bigint_pow(b_, p - cur.b_pow) + num * bigint_pow(b_, p - b_pow);
    if (total == 0) {
        terms_.erase(it);
        return;
    }
    while (p > 0 && total % b_ == 0) {
        total /= b_;
        --p;
    }
    cur.num = std::move(total);
    cur.b_pow = p;
}

SpecializedScalar::Coeff SpecializedScalar::coeff(int v_deg) const {
    auto it = terms_.find(v_deg);
    return it == terms_.end() ? Coeff{0, 0} : it->second;
}

int SpecializedScalar::min_v_degree() const {
    if (is_zero()) throw std::logic_error("min_v_degree of zero");
    return terms_.begin()->first;
}

int SpecializedScalar::max_v_degree() const {
    if (is_zero()) throw std::logic_error("max_v_degree of zero");
    return terms_.rbegin()->first;
}

SpecializedScalar SpecializedScalar::negative_part() const {
    SpecializedScalar r;
    r.b_ = b_;
    for (const auto& [d, c] : terms_)
        if (d < 0) r.terms_.emplace(d, c);
    return r;
}

SpecializedScalar SpecializedScalar::shifted(int k) const {
    SpecializedScalar r;
    r.b_ = b_;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d + k, c);
    return r;
}

int SpecializedScalar::bind(const SpecializedScalar& o) const {
    if (b_ == 0) return o.b_;
    if (o.b_ == 0) return b_;
    if (b_ != o.b_)
        throw std::invalid_argument("SpecializedScalar: mismatched base b");
    return b_;
}

SpecializedScalar& SpecializedScalar::operator+=(const SpecializedScalar& o) {
    b_ = bind(o);
    for (const auto& [d, c] : o.terms_) add_term(d, c.num, c.b_pow);
    return *this;
}

SpecializedScalar& SpecializedScalar::operator-=(const SpecializedScalar& o) {
    b_ = bind(o);
    for (const auto& [d, c] : o.terms_) add_term(d, -c.num, c.b_pow);
    return *this;
}

SpecializedScalar SpecializedScalar::operator-() const {
    SpecializedScalar r;
    r.b_ = b_;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, Coeff{-c.num, c.b_pow});
    return r;
}

SpecializedScalar operator*(const SpecializedScalar& x, const SpecializedScalar& y) {
    SpecializedScalar r;
    r.b_ = x.bind(y);
    if (x.is_zero() || y.is_zero()) {
        if (r.b_ == 0) return SpecializedScalar();
        return SpecializedScalar(r.b_);
    }
    for (const auto& [dx, cx] : x.terms())
        for (const auto& [dy, cy] : y.terms())
            r.add_term(dx + dy, cx.num * cy.num, cx.b_pow + cy.b_pow);
    return r;
}

std::string SpecializedScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.num;
        if (c.b_pow > 0) os << "/" << bigint_pow(b_, c.b_pow);
        if (d != 0) os << "*v^" << d;
    }
    return os.str();
}

SpecializedScalar bar(const SpecializedScalar& f) {
    SpecializedScalar r;
    if (f.base() == 0) return r;
    r = SpecializedScalar(f.base());
    for (const auto& [d, c] : f.terms()) r.add_term(-d, c.num, c.b_pow);
    return r;
}

SpecializedScalar specialize(const GenericScalar& f, int b) {
    SpecializedScalar r(b);
    for (const auto& [k, c] : f.terms()) {
        const auto [a_deg, v_deg] = k;
        // a^j v^k -> (v^2 - 1)^j v^k / b^j
        for (int i = 0; i <= a_deg; ++i) {
            BigInt num = c * binomial(a_deg, i);
            if ((a_deg - i) % 2 != 0) num = -num;
            r.add_term(v_deg + 2 * i, std::move(num), a_deg);
        }
    }
    return r;
}

} // namespace gha
