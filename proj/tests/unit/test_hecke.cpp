#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gha/checks.hpp"
#include "gha/hecke.hpp"
#include "gha/io.hpp"

#include <random>

using namespace gha;

namespace {
GroupElement el(GroupParams p, const std::string& expr) { return parse_element(expr, p); }
const GenericScalar avinv = GenericScalar::monomial(1, -1, 1);
} // namespace

TEST_CASE("basis and diagonal relabeling") {
    GroupParams p(2, 2);
    auto alg = make_generic_algebra(p);
    auto one = alg.identity();
    CHECK(alg.multiply(one, one) == one);
    // T_d T_{d'} = T_{dd'}
    auto d1 = el(p, "d(1,0)"), d2 = el(p, "d(1,1)");
    CHECK(alg.multiply(alg.basis(d1), alg.basis(d2)) == alg.basis(d1 * d2));
    // T_s T_w = T_{sw} when the length goes up
    GroupParams p3(3, 2);
    auto alg3 = make_generic_algebra(p3);
    CHECK(alg3.multiply(alg3.basis(el(p3, "s1")), alg3.basis(el(p3, "s2"))) ==
          alg3.basis(el(p3, "s1*s2")));
}

TEST_CASE("quadratic relation at a generator") {
    // T_s T_s = T_1 + a v^{-1} (T_{d(1,0)s1} + T_{d(0,1)s1}) for n = 2, b = 2
    GroupParams p(2, 2);
    auto alg = make_generic_algebra(p);
    auto ts = alg.basis(el(p, "s1"));
    auto prod = alg.multiply(ts, ts);
    auto expect = alg.identity();
    expect.add_term(el(p, "d(1,0)*s1"), avinv);
    expect.add_term(el(p, "d(0,1)*s1"), avinv);
    CHECK(prod == expect);
}

TEST_CASE("braid relation through the multiplication routine") {
    for (int b = 1; b <= 3; ++b) {
        GroupParams p(3, b);
        auto alg = make_generic_algebra(p);
        auto t1 = alg.basis(el(p, "s1")), t2 = alg.basis(el(p, "s2"));
        CHECK(alg.multiply(alg.multiply(t1, t2), t1) ==
              alg.multiply(alg.multiply(t2, t1), t2));
    }
}

TEST_CASE("basis inverses") {
    GroupParams p(2, 3);
    auto alg = make_generic_algebra(p);
    // T_d^{-1} = T_{d^{-1}}
    auto d = el(p, "d(1,2)");
    CHECK(alg.basis_inverse(d) == alg.basis(inverse(d)));
    // T_s^{-1} = T_s - a v^{-1} sum_{d in X_s} T_d
    auto s = el(p, "s1");
    auto expect = alg.basis(s);
    for (const auto& dd : alg.xset(0)) expect.add_term(dd, -avinv);
    CHECK(alg.basis_inverse(s) == expect);

    for (int n = 2; n <= 3; ++n)
        for (int b = 1; b <= 3; ++b) {
            CAPTURE(n);
            CAPTURE(b);
            CHECK(check_basis_inverses(GroupParams(n, b)).pass);
        }
}

TEST_CASE("bar involution on elements") {
    GroupParams p(2, 2);
    auto alg = make_generic_algebra(p);
    auto d = el(p, "d(1,1)");
    CHECK(alg.bar(alg.basis(d)) == alg.basis(d));
    // bar(T_s) = T_s^{-1} since s is an involution
    auto s = el(p, "s1");
    CHECK(alg.bar(alg.basis(s)) == alg.basis_inverse(s));

    std::mt19937 rng(29);
    for (int n = 2; n <= 3; ++n)
        for (int b = 1; b <= 3; ++b)
            CHECK(check_bar_element(GroupParams(n, b), rng, 8).pass);
}

TEST_CASE("tau trace form") {
    GroupParams p(2, 2);
    auto alg = make_generic_algebra(p);
    CHECK(alg.tau(alg.identity()) == GenericScalar(1));
    auto s = el(p, "s1");
    CHECK(alg.tau(alg.multiply(alg.basis(s), alg.basis(s))) == GenericScalar(1));
    CHECK(alg.tau(alg.basis(s)).is_zero());
    std::mt19937 rng(31);
    CHECK(check_tau(GroupParams(2, 3), rng, true).pass);
}

TEST_CASE("left and right rules agree") {
    for (int n = 2; n <= 3; ++n)
        for (int b = 1; b <= 3; ++b) CHECK(check_left_right_rules(GroupParams(n, b)).pass);
}

TEST_CASE("associativity and the t-basis quadratic relation") {
    std::mt19937 rng(37);
    for (int n = 2; n <= 3; ++n)
        for (int b = 1; b <= 3; ++b) {
            GroupParams p(n, b);
            CAPTURE(n);
            CAPTURE(b);
            CHECK(check_hecke_associativity(p, rng, 10).pass);
            CHECK(check_hecke_identity(p, rng, 10).pass);
            CHECK(check_quadratic_relation(p).pass);
        }
}

TEST_CASE("e1 central idempotent and the rescaled quadratic relation") {
    // n = 1: W is trivial and e_1^2 = b e_1
    CHECK(check_e1(GroupParams(1, 3)).pass);
    // n = 2, b = 2: parameters 4q and 8a; n = 3, b = 3: 27q and 81a
    CHECK(check_e1(GroupParams(2, 2)).pass);
    CHECK(check_e1(GroupParams(3, 3)).pass);
}

TEST_CASE("specialized algebra shares the machinery") {
    GroupParams p(2, 2);
    auto alg = make_specialized_algebra(p);
    auto s = el(p, "s1");
    auto prod = alg.multiply(alg.basis(s), alg.basis(s));
    // T_s T_s = T_1 + (v - v^{-1})/b sum T_{ds}
    SpecializedScalar xi(p.b);
    xi.add_term(1, 1, 1);
    xi.add_term(-1, -1, 1);
    auto expect = alg.identity();
    for (const auto& d : alg.xset(0)) expect.add_term(d * s, xi);
    CHECK(prod == expect);
    CHECK(alg.bar(alg.bar(prod)) == prod);
}
