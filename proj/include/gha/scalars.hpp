#pragma once

// Exact scalar rings for the generic and specialized Hecke algebras.
//
// GenericScalar is an element of Z[a, v, v^{-1}]: a sparse bivariate Laurent
// polynomial with arbitrary-precision integer coefficients, nonnegative in a
// and Laurent in v.  SpecializedScalar is an element of Z[1/b][v, v^{-1}]:
// a Laurent polynomial whose coefficients are rationals with b-power
// denominators, stored in lowest terms as (numerator, power of b).
//
// The bar involution fixes integers and sends v -> v^{-1}, a -> -a v^{-2};
// specialization is the quotient by the ideal (b·a - (v^2 - 1)), i.e. the
// substitution a -> (v^2 - 1)/b.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace gha {

using BigInt = boost::multiprecision::cpp_int;

BigInt bigint_pow(const BigInt& base, int e);
BigInt binomial(int n, int k);

class GenericScalar {
public:
    // key = (a_deg >= 0, v_deg in Z); no zero coefficients are stored, so
    // structural equality of the maps is ring equality.
    using TermMap = std::map<std::pair<int, int>, BigInt>;

    GenericScalar() = default;
    GenericScalar(long long c) { // NOLINT(google-explicit-constructor)
        if (c != 0) terms_[{0, 0}] = c;
    }
    static GenericScalar monomial(int a_deg, int v_deg, BigInt coeff);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff(int a_deg, int v_deg) const;

    int min_v_degree() const; // throws on zero
    int max_v_degree() const;
    int max_a_degree() const;

    GenericScalar& operator+=(const GenericScalar& o);
    GenericScalar& operator-=(const GenericScalar& o);
    GenericScalar operator-() const;
    friend GenericScalar operator+(GenericScalar x, const GenericScalar& y) { return x += y; }
    friend GenericScalar operator-(GenericScalar x, const GenericScalar& y) { return x -= y; }
    friend GenericScalar operator*(const GenericScalar& x, const GenericScalar& y);
    GenericScalar& operator*=(const GenericScalar& o) { return *this = *this * o; }
    friend bool operator==(const GenericScalar&, const GenericScalar&) = default;

    std::string str() const; // human-readable, for diagnostics

private:
    void add_term(int a_deg, int v_deg, const BigInt& c);
    TermMap terms_;
};

// v |-> v^{-1}, a |-> -a v^{-2}.
GenericScalar bar(const GenericScalar& f);

class SpecializedScalar {
public:
    struct Coeff {
        BigInt num;
        int b_pow = 0; // value = num / b^b_pow, with b not dividing num when b_pow > 0
        friend bool operator==(const Coeff&, const Coeff&) = default;
    };
    using TermMap = std::map<int, Coeff>; // v_deg -> coefficient

    // A default-constructed scalar is the zero of an as-yet-unbound ring; it
    // acquires b from the first nonzero operand it meets.
    SpecializedScalar() = default;
    explicit SpecializedScalar(int b) : b_(check_b(b)) {}

    static SpecializedScalar from_int(int b, BigInt c);
    // num / b^b_pow · v^{v_deg}, normalized.
    static SpecializedScalar monomial(int b, int v_deg, BigInt num, int b_pow);

    int base() const { return b_; } // 0 when unbound (zero scalar)
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Coeff coeff(int v_deg) const;

    int min_v_degree() const;
    int max_v_degree() const;

    // Keep only terms with strictly negative v-degree.
    SpecializedScalar negative_part() const;
    // Multiply by v^k.
    SpecializedScalar shifted(int k) const;

    SpecializedScalar& operator+=(const SpecializedScalar& o);
    SpecializedScalar& operator-=(const SpecializedScalar& o);
    SpecializedScalar operator-() const;
    friend SpecializedScalar operator+(SpecializedScalar x, const SpecializedScalar& y) { return x += y; }
    friend SpecializedScalar operator-(SpecializedScalar x, const SpecializedScalar& y) { return x -= y; }
    friend SpecializedScalar operator*(const SpecializedScalar& x, const SpecializedScalar& y);
    SpecializedScalar& operator*=(const SpecializedScalar& o) { return *this = *this * o; }

    friend bool operator==(const SpecializedScalar& x, const SpecializedScalar& y) {
        if (x.terms_.empty() && y.terms_.empty()) return true; // zero regardless of binding
        return x.b_ == y.b_ && x.terms_ == y.terms_;
    }

    std::string str() const;

    void add_term(int v_deg, BigInt num, int b_pow);

private:
    static int check_b(int b) {
        if (b < 1) throw std::invalid_argument("SpecializedScalar: need b >= 1");
        return b;
    }
    int bind(const SpecializedScalar& o) const; // common b or throw
    int b_ = 0;
    TermMap terms_;
};

// v |-> v^{-1} coefficientwise.
SpecializedScalar bar(const SpecializedScalar& f);

// The quotient map a |-> (v^2 - 1)/b.
SpecializedScalar specialize(const GenericScalar& f, int b);

} // namespace gha
