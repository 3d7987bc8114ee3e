#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/hom.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/idealize.hpp"
#include "deltaj/module.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

// Ring-spec grammar:
//   Z<n>                      cyclic ring
//   Z<p>[x]/(<monic poly>)    p prime, monic modulus of degree 1..3
//   <spec>x<spec>             direct product
//   <spec>/(<generators>)     quotient by the generated ideal
//   <spec>(+)<module-spec>    idealization
// Module-spec: free:<k> (k = 1 or 2) | quot:(<generators>) | the base spec
// itself (free rank 1) | base x base (free rank 2).
// Precedence, loosest first: (+), then /, then x; parenthesize to override.

namespace detail {

inline std::string strip_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// True when s is wrapped in one pair of parentheses covering the whole string.
inline bool whole_parenthesized(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') {
            --depth;
            if (depth == 0 && i + 1 != s.size()) return false;
        }
    }
    return depth == 0;
}

inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == sep && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

inline size_t find_top_level_idealize(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i + 2 < s.size(); ++i) {
        if (depth == 0 && s.compare(i, 3, "(+)") == 0) return i;
        if (s[i] == '(' || s[i] == '[') ++depth;
        else if (s[i] == ')' || s[i] == ']') --depth;
    }
    return std::string::npos;
}

// Rightmost '/' at depth 0 whose left neighbour is not ']' (that slash
// belongs to a polynomial-quotient atom).
inline size_t find_top_level_quotient(const std::string& s) {
    int depth = 0;
    size_t found = std::string::npos;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == '/' && depth == 0 && i > 0 && s[i - 1] != ']') found = i;
    }
    return found;
}

inline int parse_uint(const std::string& s, const std::string& what) {
    if (s.empty()) throw parse_error("expected a number for " + what);
    long v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("bad " + what + " '" + s + "'");
        v = v * 10 + (c - '0');
        if (v > 1000000) throw parse_error(what + " out of range: " + s);
    }
    return static_cast<int>(v);
}

// Monic polynomial over Z_p written as '+'-joined terms c, x, cx, x^k, cx^k.
inline std::vector<int> parse_poly(const std::string& text, int p) {
    if (text.empty()) throw parse_error("empty polynomial modulus");
    std::vector<int> coeffs;
    for (const std::string& term : split_top_level(text, '+')) {
        if (term.empty()) throw parse_error("empty term in polynomial '" + text + "'");
        size_t i = 0;
        int c = 1;
        if (std::isdigit(static_cast<unsigned char>(term[i]))) {
            size_t j = i;
            while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
            c = parse_uint(term.substr(i, j - i), "coefficient");
            i = j;
        }
        int k = 0;
        if (i < term.size()) {
            if (term[i] != 'x') throw parse_error("bad term '" + term + "' in polynomial");
            ++i;
            k = 1;
            if (i < term.size()) {
                if (term[i] != '^') throw parse_error("bad term '" + term + "' in polynomial");
                k = parse_uint(term.substr(i + 1), "exponent");
                i = term.size();
            }
        }
        if (k > 8) throw parse_error("polynomial degree out of range in '" + text + "'");
        if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, 0);
        coeffs[k] = (coeffs[k] + c) % p;
    }
    return coeffs;
}

inline int resolve_element(const RingPtr& R, const std::string& name) {
    for (int i = 0; i < R->order; ++i)
        if (R->element_names[i] == name) return i;
    throw parse_error(R->spec + " has no element named '" + name + "'");
}

inline std::vector<std::string> split_generator_list(std::string text) {
    if (whole_parenthesized(text)) text = text.substr(1, text.size() - 2);
    if (text.empty()) return {};
    return split_top_level(text, ',');
}

inline ModulePtr parse_module(const RingPtr& base, std::string text) {
    if (whole_parenthesized(text)) text = text.substr(1, text.size() - 2);
    if (text.rfind("free:", 0) == 0) {
        int k = parse_uint(text.substr(5), "free module rank");
        if (k < 1 || k > 2) throw parse_error("free module rank must be 1 or 2, got " + text);
        return make_free_module(base, k);
    }
    if (text.rfind("quot:", 0) == 0) {
        std::vector<int> gens;
        for (const std::string& g : split_generator_list(text.substr(5)))
            gens.push_back(resolve_element(base, g));
        return make_quot_module(base, ideal_generated(base, gens));
    }
    if (text == base->spec) return make_free_module(base, 1);
    if (text == base->spec + "x" + base->spec) return make_free_module(base, 2);
    throw parse_error("bad module spec '" + text +
                      "': expected free:<k>, quot:(<gens>), or the base ring itself");
}

inline RingPtr parse_atom(const std::string& s) {
    if (s.empty()) throw parse_error("empty ring spec");
    if (s[0] != 'Z') throw parse_error("bad ring spec '" + s + "'");
    size_t bracket = s.find('[');
    if (bracket == std::string::npos) return make_zn(parse_uint(s.substr(1), "modulus"));
    int p = parse_uint(s.substr(1, bracket - 1), "coefficient modulus");
    if (s.compare(bracket, 5, "[x]/(") != 0 || s.back() != ')')
        throw parse_error("bad polynomial quotient spec '" + s + "' (expected Zp[x]/(f))");
    std::string f = s.substr(bracket + 5, s.size() - bracket - 6);
    return make_poly_quotient(p, parse_poly(f, p));
}

inline RingPtr parse_spec(const std::string& s) {
    if (s.empty()) throw parse_error("empty ring spec");
    if (whole_parenthesized(s)) return parse_spec(s.substr(1, s.size() - 2));

    size_t plus = find_top_level_idealize(s);
    if (plus != std::string::npos) {
        RingPtr base = parse_spec(s.substr(0, plus));
        ModulePtr M = parse_module(base, s.substr(plus + 3));
        return idealize(base, M);
    }
    size_t quot = find_top_level_quotient(s);
    if (quot != std::string::npos) {
        RingPtr base = parse_spec(s.substr(0, quot));
        std::string gens_text = s.substr(quot + 1);
        if (!whole_parenthesized(gens_text))
            throw parse_error("quotient generators must be parenthesized in '" + s + "'");
        std::vector<int> gens;
        for (const std::string& g : split_generator_list(gens_text))
            gens.push_back(resolve_element(base, g));
        return quotient_ring(base, ideal_generated(base, gens)).first;
    }
    std::vector<std::string> factors = split_top_level(s, 'x');
    if (factors.size() > 1) {
        RingPtr acc = parse_spec(factors[0]);
        for (size_t i = 1; i < factors.size(); ++i) acc = make_product(acc, parse_spec(factors[i]));
        return acc;
    }
    return parse_atom(s);
}

inline RingPtr with_spec(const RingPtr& R, const std::string& spec) {
    if (R->spec == spec) return R;
    auto copy = std::make_shared<FiniteRing>(*R);
    copy->spec = spec;
    return copy;
}

}  // namespace detail

// Build a ring from its spec string. Identical strings give identical tables.
inline RingPtr make_ring(const std::string& spec) {
    std::string s = detail::strip_ws(spec);
    return detail::with_spec(detail::parse_spec(s), s);
}

// Resolve a comma-separated generator list (optionally parenthesized) to the
// ideal it generates. Element tokens are matched against display names, so
// tuple-valued elements keep their inner commas.
inline Ideal parse_ideal(const RingPtr& R, const std::string& gens_text) {
    std::vector<int> gens;
    for (const std::string& g : detail::split_generator_list(detail::strip_ws(gens_text)))
        gens.push_back(detail::resolve_element(R, g));
    return ideal_generated(R, gens);
}

}  // namespace deltaj
