#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gha/checks.hpp"
#include "gha/io.hpp"
#include "gha/scalars.hpp"

#include <random>

using namespace gha;

namespace {
GenericScalar mono(int a_deg, int v_deg, long long c) {
    return GenericScalar::monomial(a_deg, v_deg, c);
}
} // namespace

TEST_CASE("generic ring arithmetic") {
    GenericScalar v = mono(0, 1, 1), vinv = mono(0, -1, 1);
    CHECK((v - vinv) * (v + vinv) == mono(0, 2, 1) - mono(0, -2, 1));
    GenericScalar avinv = mono(1, -1, 1);
    CHECK(avinv * avinv == mono(2, -2, 1));
    GenericScalar f = mono(2, 3, 5) + mono(0, 0, -7);
    CHECK(f + GenericScalar() == f);
    CHECK((f - f).is_zero());
    CHECK(-(-f) == f);
    CHECK(f.coeff(2, 3) == 5);
    CHECK(f.max_a_degree() == 2);
    CHECK(f.min_v_degree() == 0);
    CHECK(f.max_v_degree() == 3);
}

TEST_CASE("generic bar involution") {
    CHECK(bar(mono(0, 1, 1)) == mono(0, -1, 1));
    CHECK(bar(mono(1, 0, 1)) == mono(1, -2, -1));      // a -> -a v^{-2}
    CHECK(bar(mono(1, -1, 1)) == mono(1, -1, -1));     // bar(a v^{-1}) = -a v^{-1}
    CHECK(bar(GenericScalar(7)) == GenericScalar(7));
    std::mt19937 rng(3);
    CHECK(check_scalar_bar_involution(rng).pass);
}

TEST_CASE("specialized arithmetic keeps b-power denominators canonical") {
    // 1/b + 1/b = 2/b, which collapses to 1 when b = 2
    SpecializedScalar f = SpecializedScalar::monomial(2, 0, 1, 1);
    CHECK((f + f) == SpecializedScalar::from_int(2, 1));
    // b = 3: 1/3 + 1/3 = 2/3 stays over 3
    SpecializedScalar g = SpecializedScalar::monomial(3, 0, 1, 1);
    CHECK((g + g) == SpecializedScalar::monomial(3, 0, 2, 1));
    CHECK((g - g).is_zero());
    // b = 1 never stores denominators
    SpecializedScalar h = SpecializedScalar::monomial(1, 2, 5, 0);
    CHECK(h.coeff(2).b_pow == 0);

    SpecializedScalar x2 = SpecializedScalar::monomial(2, 1, 1, 0);
    SpecializedScalar y3 = SpecializedScalar::monomial(3, 1, 1, 0);
    CHECK_THROWS_AS((void)(x2 * y3), std::invalid_argument);
}

TEST_CASE("specialized bar") {
    // bar(v^2/b - 1/b) = v^{-2}/b - 1/b
    SpecializedScalar f(2);
    f.add_term(2, 1, 1);
    f.add_term(0, -1, 1);
    SpecializedScalar expect(2);
    expect.add_term(-2, 1, 1);
    expect.add_term(0, -1, 1);
    CHECK(bar(f) == expect);
    // bar(v/b - v^{-1}/b) = -(v/b - v^{-1}/b)
    SpecializedScalar g(3);
    g.add_term(1, 1, 1);
    g.add_term(-1, -1, 1);
    CHECK(bar(g) == -g);
}

TEST_CASE("specialization a -> (v^2-1)/b") {
    for (int b = 1; b <= 5; ++b) {
        // a v^{-1} -> v/b - v^{-1}/b
        SpecializedScalar expect(b);
        expect.add_term(1, 1, 1);
        expect.add_term(-1, -1, 1);
        CHECK(specialize(mono(1, -1, 1), b) == expect);
        // v^k fixed
        CHECK(specialize(mono(0, 3, 1), b) == SpecializedScalar::monomial(b, 3, 1, 0));
        // (a v^{-1})^2 · v^2 = v^4/b^2 - 2v^2/b^2 + 1/b^2
        SpecializedScalar sq = specialize(mono(2, -2, 1), b).shifted(2);
        SpecializedScalar expect2(b);
        expect2.add_term(4, 1, 2);
        expect2.add_term(2, -2, 2);
        expect2.add_term(0, 1, 2);
        CHECK(sq == expect2);
    }
    std::mt19937 rng(17);
    for (int b = 1; b <= 4; ++b) CHECK(check_specialize_commutes(b, rng).pass);
}

TEST_CASE("negative part extraction") {
    SpecializedScalar f(2);
    f.add_term(2, 1, 0);
    f.add_term(0, 3, 1);
    f.add_term(-1, -5, 2);
    auto neg = f.negative_part();
    CHECK(neg.terms().size() == 1);
    CHECK(neg.coeff(-1).num == -5);
    CHECK(f.shifted(1).coeff(3).num == 1);
}

TEST_CASE("json round trips") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> adeg(0, 3), vdeg(-4, 4), coeff(-9, 9);
    for (int i = 0; i < 50; ++i) {
        GenericScalar f;
        for (int t = 0; t < 3; ++t) f += mono(adeg(rng), vdeg(rng), coeff(rng));
        CHECK(generic_from_json(scalar_to_json(f)) == f);
    }
    for (int b = 1; b <= 3; ++b) {
        SpecializedScalar f(b);
        f.add_term(2, 7, 1);
        f.add_term(-3, -1, 2);
        CHECK(specialized_from_json(scalar_to_json(f), b) == f);
    }
    // big coefficients survive as decimal strings
    GenericScalar big = GenericScalar::monomial(0, 0, bigint_pow(BigInt(10), 40) + 1);
    CHECK(generic_from_json(scalar_to_json(big)) == big);
}
