#pragma once

// Text and serialization formats.
//
// Element grammar:  element := term ('*' term)*
//                   term    := 'e' | 's' INT | 'd(' INT (',' INT)* ')'
// s-indices are 1-based and must lie in [1, n-1]; d(...) takes exactly n
// integers, reduced mod b.  Parsing evaluates the left-to-right product.
// Canonical formatting writes the lexicographically smallest reduced word of
// the W-part followed by the d(...) term, omitting trivial factors, and 'e'
// for the identity.
//
// JSON conventions: big integers are decimal strings; a generic scalar is a
// list of {a_deg, v_deg, coeff} terms, a specialized scalar a list of
// {v_deg, num, b_pow} terms; a Hecke element is a list of
// {element_expr, scalar} pairs in canonical element order.

#include "gha/glnq.hpp"
#include "gha/group.hpp"
#include "gha/hecke.hpp"
#include "gha/rpoly.hpp"
#include "gha/scalars.hpp"
#include "gha/subexpr.hpp"

#include <json.hpp>

#include <string>

namespace gha {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

GroupElement parse_element(const std::string& text, GroupParams params);
std::string format_element(const GroupElement& x);

nlohmann::json scalar_to_json(const GenericScalar& f);
GenericScalar generic_from_json(const nlohmann::json& j);
nlohmann::json scalar_to_json(const SpecializedScalar& f);
SpecializedScalar specialized_from_json(const nlohmann::json& j, int b);

template <class Scalar>
nlohmann::json hecke_to_json(const HeckeElement<Scalar>& h) {
    std::vector<const GroupElement*> keys;
    for (const auto& [x, c] : h.support) keys.push_back(&x);
    std::sort(keys.begin(), keys.end(),
              [](const GroupElement* p, const GroupElement* q) {
                  return canonical_less(*p, *q);
              });
    nlohmann::json arr = nlohmann::json::array();
    for (const GroupElement* x : keys)
        arr.push_back({{"element_expr", format_element(*x)},
                       {"scalar", scalar_to_json(h.support.at(*x))}});
    return arr;
}

nlohmann::json subexpression_to_json(const Subexpression& s);
nlohmann::json check_results_to_json(const std::vector<CheckResult>& checks);

// Deterministic DOT rendering, one subgraph per connected component,
// vertices labeled by the element grammar.
std::string poset_to_dot(const OrderPoset& poset);

std::string csv_escape(const std::string& field);

} // namespace gha
