#include "gha/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gha {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    long long parse_int() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (!done() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos;
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", start);
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000'000) throw ParseError("integer too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }
    void expect(char c) {
        skip_ws();
        if (done() || peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
};

GroupElement parse_term(Cursor& cur, GroupParams params) {
    cur.skip_ws();
    if (cur.done()) throw ParseError("expected a term", cur.pos);
    const std::size_t start = cur.pos;
    char c = cur.peek();
    if (c == 'e') {
        ++cur.pos;
        return GroupElement::identity(params);
    }
    if (c == 's') {
        ++cur.pos;
        long long idx = cur.parse_int();
        if (idx < 1 || idx > params.n - 1)
            throw ParseError("generator index s" + std::to_string(idx) +
                                 " out of range [1, " + std::to_string(params.n - 1) + "]",
                             start);
        return GroupElement::generator(params, static_cast<int>(idx) - 1);
    }
    if (c == 'd') {
        ++cur.pos;
        cur.expect('(');
        std::vector<int> exps;
        while (true) {
            long long v = cur.parse_int();
            exps.push_back(static_cast<int>(((v % params.b) + params.b) % params.b));
            cur.skip_ws();
            if (!cur.done() && cur.peek() == ',') {
                ++cur.pos;
                continue;
            }
            break;
        }
        cur.expect(')');
        if (static_cast<int>(exps.size()) != params.n)
            throw ParseError("d(...) takes exactly " + std::to_string(params.n) +
                                 " entries, got " + std::to_string(exps.size()),
                             start);
        return GroupElement::diagonal(params, std::move(exps));
    }
    throw ParseError("unexpected character in element expression", cur.pos);
}

} // namespace

GroupElement parse_element(const std::string& text, GroupParams params) {
    Cursor cur{text};
    GroupElement acc = parse_term(cur, params);
    while (true) {
        cur.skip_ws();
        if (cur.done()) break;
        cur.expect('*');
        acc = acc * parse_term(cur, params);
    }
    return acc;
}

std::string format_element(const GroupElement& x) {
    std::ostringstream os;
    bool first = true;
    for (int gen : reduced_word(x.perm())) {
        if (!first) os << "*";
        os << "s" << (gen + 1);
        first = false;
    }
    bool trivial_d = true;
    for (int e : x.exps())
        if (e != 0) trivial_d = false;
    if (!trivial_d) {
        if (!first) os << "*";
        os << "d(";
        for (int i = 0; i < x.params().n; ++i) {
            if (i) os << ",";
            os << x.exps()[static_cast<std::size_t>(i)];
        }
        os << ")";
        first = false;
    }
    if (first) os << "e";
    return os.str();
}

nlohmann::json scalar_to_json(const GenericScalar& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : f.terms())
        arr.push_back({{"a_deg", k.first}, {"v_deg", k.second}, {"coeff", c.str()}});
    return arr;
}

GenericScalar generic_from_json(const nlohmann::json& j) {
    GenericScalar f;
    for (const auto& term : j)
        f += GenericScalar::monomial(term.at("a_deg").get<int>(),
                                     term.at("v_deg").get<int>(),
                                     BigInt(term.at("coeff").get<std::string>()));
    return f;
}

nlohmann::json scalar_to_json(const SpecializedScalar& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [d, c] : f.terms())
        arr.push_back({{"v_deg", d}, {"num", c.num.str()}, {"b_pow", c.b_pow}});
    return arr;
}

SpecializedScalar specialized_from_json(const nlohmann::json& j, int b) {
    SpecializedScalar f(b);
    for (const auto& term : j)
        f.add_term(term.at("v_deg").get<int>(),
                   BigInt(term.at("num").get<std::string>()),
                   term.at("b_pow").get<int>());
    return f;
}

nlohmann::json subexpression_to_json(const Subexpression& s) {
    nlohmann::json word = nlohmann::json::array();
    for (int g : s.word) word.push_back(g + 1);
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& x : s.steps) steps.push_back(format_element(x));
    return {{"word", word}, {"steps", steps}, {"n_stat", s.n_stat}};
}

nlohmann::json check_results_to_json(const std::vector<CheckResult>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json item = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) item[c.pass ? "detail" : "witness"] = c.detail;
        arr.push_back(item);
    }
    return arr;
}

std::string poset_to_dot(const OrderPoset& poset) {
    std::ostringstream os;
    os << "graph hasse_n" << poset.params.n << "_b" << poset.params.b << " {\n";
    os << "  node [shape=plaintext];\n";
    for (int comp = 0; comp < poset.num_components; ++comp) {
        os << "  subgraph cluster_component_" << comp << " {\n";
        os << "    label=\"component " << comp << "\";\n";
        for (std::size_t i = 0; i < poset.elements.size(); ++i)
            if (poset.component[i] == comp)
                os << "    \"" << format_element(poset.elements[i]) << "\";\n";
        for (const auto& [lo, hi] : poset.hasse_edges)
            if (poset.component[static_cast<std::size_t>(lo)] == comp)
                os << "    \"" << format_element(poset.elements[static_cast<std::size_t>(lo)])
                   << "\" -- \""
                   << format_element(poset.elements[static_cast<std::size_t>(hi)]) << "\";\n";
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string csv_escape(const std::string& field) {
    bool needs = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace gha
