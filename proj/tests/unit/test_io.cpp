#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gha/checks.hpp"
#include "gha/io.hpp"
#include "gha/rpoly.hpp"
#include "gha/subexpr.hpp"

#include <random>

using namespace gha;

TEST_CASE("grammar basics") {
    GroupParams p(3, 2);
    CHECK(parse_element("e", p) == GroupElement::identity(p));
    CHECK(format_element(GroupElement::identity(p)) == "e");

    auto x = parse_element("s1*s2*d(0,1,1)", p);
    CHECK(x.perm() == perm_mult(parse_element("s1", p).perm(), parse_element("s2", p).perm()));
    CHECK(x.exps() == std::vector<int>{0, 1, 1});
    CHECK(format_element(x) == "s1*s2*d(0,1,1)");

    // products canonicalize: d·s1 = s1·(s1 d s1)
    GroupParams p22(2, 2);
    CHECK(parse_element("d(1,0)*s1", p22) == parse_element("s1*d(0,1)", p22));

    // entries reduce mod b, including negatives
    CHECK(parse_element("d(-1,3,0)", p) == parse_element("d(1,1,0)", p));
    CHECK(parse_element(" s1 * s2 ", p) == parse_element("s1*s2", p));
}

TEST_CASE("grammar errors carry positions") {
    GroupParams p(3, 2);
    CHECK_THROWS_AS(parse_element("s3", p), ParseError);       // index out of range
    CHECK_THROWS_AS(parse_element("d(0,1)", p), ParseError);   // wrong arity
    CHECK_THROWS_AS(parse_element("s1**s2", p), ParseError);   // syntax
    CHECK_THROWS_AS(parse_element("q1", p), ParseError);       // unknown term
    CHECK_THROWS_AS(parse_element("", p), ParseError);
    CHECK_THROWS_AS(parse_element("s1*", p), ParseError);
    try {
        parse_element("s1*q", p);
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("round trips at random") {
    std::mt19937 rng(59);
    for (int n = 1; n <= 4; ++n)
        for (int b = 1; b <= 5; ++b)
            CHECK(check_parse_roundtrip(GroupParams(n, b), rng, 60).pass);
}

TEST_CASE("dot output is deterministic and component-structured") {
    GroupParams p(2, 2);
    OmegaCache omega1(p), omega2(p);
    std::string dot1 = poset_to_dot(build_poset(p, omega1));
    std::string dot2 = poset_to_dot(build_poset(p, omega2));
    CHECK(dot1 == dot2);
    CHECK(dot1.find("subgraph cluster_component_0") != std::string::npos);
    CHECK(dot1.find("subgraph cluster_component_1") != std::string::npos);
    CHECK(dot1.find("\"s1*d(1,0)\"") != std::string::npos);
}

TEST_CASE("csv escaping") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("subexpression json listing") {
    GroupParams p(2, 2);
    OmegaCache omega(p);
    auto subs = enumerate_distinguished({0}, p, omega);
    REQUIRE(subs.size() == 3);
    auto j = subexpression_to_json(subs.front());
    CHECK(j["word"] == nlohmann::json::array({1})); // 1-based in output
    CHECK(j["steps"].size() == 2);
    CHECK(j["steps"][0] == "e");
    CHECK(j["n_stat"].is_number_integer());
}

TEST_CASE("hecke element json is canonically ordered") {
    GroupParams p(2, 2);
    auto alg = make_generic_algebra(p);
    auto s = parse_element("s1", p);
    auto h = alg.multiply(alg.basis(s), alg.basis(s));
    auto j = hecke_to_json(h);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["element_expr"] == "e"); // identity sorts first
}
