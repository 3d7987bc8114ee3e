#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "deltaj/classify.hpp"
#include "deltaj/corpus.hpp"
#include "deltaj/error.hpp"
#include "deltaj/expansion.hpp"
#include "deltaj/lattice.hpp"

namespace deltaj {

// Template language over the classification flags:
//
//   template := term (("and" | "&&" | "∧") term)*
//   term     := ["ring"] ("not" | "!" | "¬")* atom
//   atom     := flag [ "(" selector ")" ]
//
// Flags at ideal level: proper, principal, prime, maximal, primary,
// superfluous, n_ideal, J_ideal, quasi_J_ideal, and the expansion-
// parameterized delta_J_ideal, delta_primary, delta_n_ideal. Ring level:
// quasi_local. Hyphens in flag names are read as underscores; δ₀ and δ₁
// are accepted as selector spellings of delta0 and delta1. A selector
// names a registered expansion of the ring under inspection; atoms
// without a selector range over all of them.

namespace detail {

enum class Flag {
    proper,
    principal,
    prime,
    maximal,
    primary,
    superfluous,
    n_ideal,
    J_ideal,
    quasi_J_ideal,
    delta_J_ideal,
    delta_primary,
    delta_n_ideal,
    quasi_local,
};

inline bool flag_takes_selector(Flag f) {
    return f == Flag::delta_J_ideal || f == Flag::delta_primary || f == Flag::delta_n_ideal;
}

struct QueryNode {
    enum class Kind { conj, neg, atom } kind;
    std::vector<QueryNode> children;
    Flag flag = Flag::proper;
    std::string selector;  // empty: range over the ring's expansions
};

struct Query {
    QueryNode root;
    bool uses_ideal = false;
    bool iterates_deltas = false;  // some expansion atom left its selector open
};

struct TemplateLexer {
    std::vector<std::string> tokens;
    size_t pos = 0;

    explicit TemplateLexer(const std::string& raw) {
        std::string s;
        for (size_t i = 0; i < raw.size();) {
            if (raw.compare(i, 3, "∧") == 0) { s += " and "; i += 3; }        // ∧
            else if (raw.compare(i, 2, "¬") == 0) { s += " ! "; i += 2; }     // ¬
            else if (raw.compare(i, 5, "δ₀") == 0) { s += "delta0"; i += 5; }
            else if (raw.compare(i, 5, "δ₁") == 0) { s += "delta1"; i += 5; }
            else if (raw.compare(i, 2, "&&") == 0) { s += " and "; i += 2; }
            else { s += raw[i]; ++i; }
        }
        auto ident_char = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
        };
        for (size_t i = 0; i < s.size();) {
            char c = s[i];
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
            if (c == '!' || c == '(' || c == ')' || c == ',' || c == ':') {
                tokens.push_back(std::string(1, c));
                ++i;
                continue;
            }
            if (ident_char(c)) {
                std::string t;
                while (i < s.size() && ident_char(s[i])) {
                    t += s[i] == '-' ? '_' : s[i];
                    ++i;
                }
                tokens.push_back(std::move(t));
                continue;
            }
            throw parse_error("template: unexpected character '" + std::string(1, c) + "'");
        }
    }

    bool done() const { return pos >= tokens.size(); }
    const std::string& peek() const {
        static const std::string empty;
        return done() ? empty : tokens[pos];
    }
    std::string next() {
        if (done()) throw parse_error("template: unexpected end of input");
        return tokens[pos++];
    }
    bool accept(const std::string& t) {
        if (!done() && tokens[pos] == t) { ++pos; return true; }
        return false;
    }
};

inline Flag flag_by_name(const std::string& name) {
    static const std::vector<std::pair<std::string, Flag>> table = {
        {"proper", Flag::proper},
        {"principal", Flag::principal},
        {"prime", Flag::prime},
        {"maximal", Flag::maximal},
        {"primary", Flag::primary},
        {"superfluous", Flag::superfluous},
        {"n_ideal", Flag::n_ideal},
        {"J_ideal", Flag::J_ideal},
        {"quasi_J_ideal", Flag::quasi_J_ideal},
        {"delta_J_ideal", Flag::delta_J_ideal},
        {"delta_primary", Flag::delta_primary},
        {"delta_n_ideal", Flag::delta_n_ideal},
        {"quasi_local", Flag::quasi_local},
    };
    for (const auto& [n, f] : table)
        if (n == name) return f;
    throw parse_error("template: unknown flag '" + name + "'");
}

inline QueryNode parse_term(TemplateLexer& lx, Query& q) {
    bool negate = false;
    for (;;) {
        if (lx.accept("ring")) continue;  // explicit marker for ring-level flags
        if (lx.accept("not") || lx.accept("!")) { negate = !negate; continue; }
        break;
    }
    QueryNode atom;
    atom.kind = QueryNode::Kind::atom;
    atom.flag = flag_by_name(lx.next());
    if (lx.accept("(")) {
        if (!flag_takes_selector(atom.flag))
            throw parse_error("template: flag does not take an expansion selector");
        std::string sel;
        int depth = 1;
        for (;;) {
            std::string t = lx.next();
            if (t == "(") ++depth;
            if (t == ")" && --depth == 0) break;
            sel += t;
        }
        if (sel.empty()) throw parse_error("template: empty expansion selector");
        atom.selector = sel;
    }
    if (atom.flag != Flag::quasi_local) q.uses_ideal = true;
    if (flag_takes_selector(atom.flag) && atom.selector.empty()) q.iterates_deltas = true;
    if (!negate) return atom;
    QueryNode neg;
    neg.kind = QueryNode::Kind::neg;
    neg.children.push_back(std::move(atom));
    return neg;
}

}  // namespace detail

inline detail::Query parse_template(const std::string& text) {
    detail::TemplateLexer lx(text);
    detail::Query q;
    detail::QueryNode conj;
    conj.kind = detail::QueryNode::Kind::conj;
    conj.children.push_back(detail::parse_term(lx, q));
    while (lx.accept("and")) conj.children.push_back(detail::parse_term(lx, q));
    if (!lx.done()) throw parse_error("template: trailing input at '" + lx.peek() + "'");
    q.root = std::move(conj);
    return q;
}

namespace detail {

struct SearchScope {
    const CorpusRing* cr;
    int ideal_idx;
    const ExpansionFn* delta;  // the open-selector expansion, when iterating
};

inline const ExpansionFn* resolve_selector(const CorpusRing& cr, const std::string& sel) {
    for (const ExpansionFn& d : cr.deltas)
        if (d.name == sel) return &d;
    return nullptr;
}

inline bool eval_query(const QueryNode& n, const SearchScope& sc) {
    const IdealLattice& lat = *sc.cr->lat;
    const int i = sc.ideal_idx;
    switch (n.kind) {
        case QueryNode::Kind::conj:
            for (const QueryNode& c : n.children)
                if (!eval_query(c, sc)) return false;
            return true;
        case QueryNode::Kind::neg:
            return !eval_query(n.children[0], sc);
        case QueryNode::Kind::atom:
            break;
    }
    switch (n.flag) {
        case Flag::quasi_local: return lat.quasi_local;
        case Flag::proper: return lat.proper(i);
        case Flag::principal: return lat.is_principal[i] != 0;
        case Flag::prime: return lat.is_prime[i] != 0;
        case Flag::maximal: return lat.is_maximal[i] != 0;
        case Flag::primary: return lat.is_primary[i] != 0;
        case Flag::superfluous: return lat.is_superfluous_f[i] != 0;
        default: break;
    }
    if (!lat.proper(i)) return false;
    const Ideal& I = lat.at(i);
    switch (n.flag) {
        case Flag::n_ideal: return is_n_ideal(lat, I).holds;
        case Flag::J_ideal: return is_J_ideal(lat, I).holds;
        case Flag::quasi_J_ideal: return is_quasi_J_ideal(lat, I).holds;
        default: break;
    }
    const ExpansionFn* d = sc.delta;
    if (!n.selector.empty()) d = resolve_selector(*sc.cr, n.selector);
    if (!d) return false;  // ring has no expansion by that name
    switch (n.flag) {
        case Flag::delta_J_ideal: return is_delta_J_ideal(I, *d).holds;
        case Flag::delta_primary: return is_delta_primary(I, *d).holds;
        case Flag::delta_n_ideal: return is_delta_n_ideal(I, *d).holds;
        default: break;
    }
    throw domain_error("template evaluation reached an unhandled flag");
}

}  // namespace detail

// Every (ring, ideal, expansion) tuple of the corpus satisfying the
// template, in corpus x lattice x registration order. Dimensions the
// template does not exercise are dropped from both the scan and the
// witness records.
inline std::vector<json> search_counterexample(const std::string& tmpl, const Corpus& corpus) {
    detail::Query q = parse_template(tmpl);
    std::vector<json> out;
    for (const CorpusRing& cr : corpus.rings) {
        const IdealLattice& lat = *cr.lat;
        int ideal_lo = 0;
        int ideal_hi = q.uses_ideal ? lat.count() : 1;
        for (int i = ideal_lo; i < ideal_hi; ++i) {
            auto emit = [&](const ExpansionFn* d) {
                detail::SearchScope sc{&cr, i, d};
                if (!detail::eval_query(q.root, sc)) return;
                json w;
                w["ring"] = cr.ring->spec;
                if (q.uses_ideal) w["ideal"] = lat.at(i).display();
                if (d) w["delta"] = d->name;
                out.push_back(std::move(w));
            };
            if (q.iterates_deltas)
                for (const ExpansionFn& d : cr.deltas) emit(&d);
            else
                emit(nullptr);
        }
    }
    return out;
}

}  // namespace deltaj
