#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gha/checks.hpp"
#include "gha/io.hpp"
#include "gha/subexpr.hpp"

#include <random>

using namespace gha;

namespace {
GroupElement el(GroupParams p, const std::string& expr) { return parse_element(expr, p); }
} // namespace

TEST_CASE("empty word") {
    GroupParams p(3, 2);
    OmegaCache omega(p);
    auto subs = enumerate_distinguished({}, p, omega);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].steps == std::vector<GroupElement>{GroupElement::identity(p)});
    CHECK(subs[0].n_stat == 0);
}

TEST_CASE("single letter word has b + 1 subexpressions") {
    for (int b = 1; b <= 4; ++b) {
        GroupParams p(2, b);
        OmegaCache omega(p);
        auto subs = enumerate_distinguished({0}, p, omega);
        CHECK(subs.size() == static_cast<std::size_t>(b) + 1);
        // the last components sweep out {s1} ∪ X_{s1}
        auto ideal = lower_ideal({0}, p, omega);
        DiagSet expect = x_set(p, Reflection(0, 1));
        std::vector<GroupElement> want(expect.begin(), expect.end());
        want.push_back(el(p, "s1"));
        std::sort(want.begin(), want.end(), canonical_less);
        CHECK(ideal == want);
    }
}

TEST_CASE("non-reduced words are rejected") {
    GroupParams p(3, 2);
    OmegaCache omega(p);
    CHECK_THROWS_AS(enumerate_distinguished({0, 0}, p, omega), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_distinguished({5}, p, omega), std::invalid_argument);
}

TEST_CASE("fiber structure over the longest word of S_3") {
    for (int b = 2; b <= 3; ++b) {
        GroupParams p(3, b);
        OmegaCache omega(p);
        auto subs = enumerate_distinguished({0, 1, 0}, p, omega);
        const DiagSet inner = x_set(p, Reflection(0, 2)); // s1 X_{s2} s1
        for (const auto& d : inner) {
            int with_n3 = 0, with_n1 = 0, other = 0;
            for (const auto& s : subs) {
                if (!(s.steps.back() == d)) continue;
                if (s.n_stat == 3) ++with_n3;
                else if (s.n_stat == 1) ++with_n1;
                else ++other;
            }
            CHECK(with_n3 == b);
            CHECK(with_n1 == 1);
            CHECK(other == 0);
        }
    }
}

TEST_CASE("closed formula agrees with the recursion") {
    for (int n = 2; n <= 3; ++n)
        for (int b = 1; b <= 2; ++b) {
            GroupParams p(n, b);
            OmegaCache omega(p);
            RStarTable table(p);
            for (const Perm& w : all_permutations(p.n)) {
                auto we = GroupElement::from_perm(p, w);
                auto word = reduced_word(w);
                for (const auto& y : enumerate_group(p))
                    CHECK(r_star_closed(y, word, p, omega) == table.r_star(y, we));
            }
        }
}

TEST_CASE("trivial fiber over the top element") {
    GroupParams p(3, 3);
    OmegaCache omega(p);
    auto w0 = el(p, "s1*s2*s1");
    CHECK(r_star_closed(w0, {0, 1, 0}, p, omega) == GenericScalar(1));
}

TEST_CASE("word independence and ideal consistency") {
    std::mt19937 rng(43);
    for (int n = 2; n <= 3; ++n)
        for (int b = 1; b <= 3; ++b) {
            GroupParams p(n, b);
            CAPTURE(n);
            CAPTURE(b);
            CHECK(check_subexpr_lower_ideal(p).pass);
            CHECK(check_subexpr_word_independence(p, rng, 10).pass);
            CHECK(check_subexpr_fiber_counts(p).pass);
            CHECK(check_subexpr_parity(p).pass);
        }
    // n = 4 spot check for word independence across the braid move
    GroupParams p42(4, 2);
    std::mt19937 rng2(47);
    CHECK(check_subexpr_word_independence(p42, rng2, 6).pass);
}
