#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/hom.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

// Finite module over a finite ring: an abelian group with a ring action,
// both as dense tables. Immutable; share via ModulePtr.
struct FiniteModule {
    RingPtr ring;
    int order = 0;
    std::vector<int> add_table;     // order*order
    std::vector<int> action_table;  // ring.order*order: action(r, m)
    int zero = 0;
    std::string spec;  // "free:1", "free:2", "quot:(g,...)"
    std::vector<std::string> element_names;

    int add(int m, int n) const { return add_table[m * order + n]; }
    int act(int r, int m) const { return action_table[r * order + m]; }
    const std::string& name(int m) const { return element_names[m]; }
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

inline CheckReport verify_module_axioms(const FiniteModule& M) {
    CheckReport rep;
    rep.id = "module-axioms";
    CheckPart part;
    part.id = "module-axioms";
    part.what = "tables define a unital module over the base ring";
    CheckOutcome& out = part.gating;
    const FiniteRing& R = *M.ring;

    auto fail = [&](const std::string& axiom, const std::string& w) {
        json cex;
        cex["ring_spec"] = R.spec;
        cex["module_spec"] = M.spec;
        cex["axiom"] = axiom;
        cex["witness"] = w;
        out.fail(std::move(cex));
    };
    out.count(true);

    for (int m = 0; m < M.order && out.pass; ++m) {
        if (M.add(m, M.zero) != m) fail("additive identity", M.name(m));
        bool has_neg = false;
        for (int n = 0; n < M.order; ++n)
            if (M.add(m, n) == M.zero) { has_neg = true; break; }
        if (!has_neg) fail("additive inverse", M.name(m));
        if (M.act(R.one, m) != m) fail("unital action", M.name(m));
        if (M.act(R.zero, m) != M.zero) fail("zero action", M.name(m));
    }
    for (int m = 0; m < M.order && out.pass; ++m)
        for (int n = 0; n < M.order && out.pass; ++n) {
            if (M.add(m, n) != M.add(n, m)) fail("addition commutativity", M.name(m) + "," + M.name(n));
            for (int k = 0; k < M.order; ++k)
                if (M.add(M.add(m, n), k) != M.add(m, M.add(n, k))) {
                    fail("addition associativity", M.name(m));
                    break;
                }
        }
    for (int r = 0; r < R.order && out.pass; ++r)
        for (int m = 0; m < M.order && out.pass; ++m) {
            for (int s = 0; s < R.order; ++s) {
                if (M.act(R.mul(r, s), m) != M.act(r, M.act(s, m))) {
                    fail("action associativity", R.name(r) + "*" + R.name(s) + " on " + M.name(m));
                    break;
                }
                if (M.act(R.add(r, s), m) != M.add(M.act(r, m), M.act(s, m))) {
                    fail("distributivity over ring addition", R.name(r) + "+" + R.name(s));
                    break;
                }
            }
            for (int n = 0; n < M.order; ++n)
                if (M.act(r, M.add(m, n)) != M.add(M.act(r, m), M.act(r, n))) {
                    fail("distributivity over module addition", R.name(r));
                    break;
                }
        }

    out.finish();
    rep.parts.push_back(std::move(part));
    return rep;
}

namespace detail {

inline ModulePtr seal_module(FiniteModule m) {
    auto rep = verify_module_axioms(m);
    if (!rep.pass())
        throw domain_error(m.ring->spec + "(+)" + m.spec + ": module axioms fail: " +
                           rep.parts[0].gating.counterexamples[0].dump());
    return std::make_shared<const FiniteModule>(std::move(m));
}

}  // namespace detail

// Free module R^k for k in {1, 2}; rank 2 elements are pairs indexed
// a*|R| + b.
inline ModulePtr make_free_module(const RingPtr& R, int rank) {
    if (rank < 1 || rank > 2) throw domain_error("free module rank must be 1 or 2");
    FiniteModule M;
    M.ring = R;
    M.spec = "free:" + std::to_string(rank);
    if (rank == 1) {
        M.order = R->order;
        M.add_table = R->add_table;
        M.action_table = R->mul_table;
        M.zero = R->zero;
        M.element_names = R->element_names;
    } else {
        long n = static_cast<long>(R->order) * R->order;
        M.order = static_cast<int>(n);
        M.add_table.resize(n * n);
        M.action_table.resize(R->order * n);
        auto idx = [&](int a, int b) { return a * R->order + b; };
        for (int a1 = 0; a1 < R->order; ++a1)
            for (int a2 = 0; a2 < R->order; ++a2)
                for (int b1 = 0; b1 < R->order; ++b1)
                    for (int b2 = 0; b2 < R->order; ++b2)
                        M.add_table[idx(a1, a2) * n + idx(b1, b2)] =
                            idx(R->add(a1, b1), R->add(a2, b2));
        for (int r = 0; r < R->order; ++r)
            for (int a = 0; a < R->order; ++a)
                for (int b = 0; b < R->order; ++b)
                    M.action_table[r * n + idx(a, b)] = idx(R->mul(r, a), R->mul(r, b));
        M.zero = idx(R->zero, R->zero);
        for (int a = 0; a < R->order; ++a)
            for (int b = 0; b < R->order; ++b)
                M.element_names.push_back("(" + R->name(a) + "," + R->name(b) + ")");
    }
    return detail::seal_module(std::move(M));
}

// Cyclic quotient module R/I, with the natural action r * (a + I) = ra + I.
inline ModulePtr make_quot_module(const RingPtr& R, const Ideal& I) {
    if (!I.is_proper())
        throw domain_error(R->spec + ": quotient module by the unit ideal is the zero module");
    auto [Q, proj] = quotient_ring(R, I);
    FiniteModule M;
    M.ring = R;
    M.order = Q->order;
    M.add_table = Q->add_table;
    M.zero = Q->zero;
    M.action_table.resize(R->order * Q->order);
    for (int r = 0; r < R->order; ++r)
        for (int m = 0; m < Q->order; ++m)
            M.action_table[r * Q->order + m] = Q->mul(proj(r), m);
    M.element_names = Q->element_names;
    {
        std::string gens = "(";
        std::vector<int> g;
        Ideal span = zero_ideal(R);
        while (span.size() < I.size())
            for (int m : I.members)
                if (!span.contains(m)) {
                    g.push_back(m);
                    span = ideal_generated(R, g);
                    break;
                }
        for (size_t k = 0; k < g.size(); ++k) {
            if (k) gens += ",";
            gens += R->name(g[k]);
        }
        M.spec = "quot:" + gens + ")";
    }
    return detail::seal_module(std::move(M));
}

// Submodule generated by a set of module elements.
inline std::vector<int> submodule_generated(const FiniteModule& M, const std::vector<int>& gens) {
    std::vector<char> mask(M.order, 0);
    std::vector<int> work;
    auto put = [&](int m) {
        if (!mask[m]) { mask[m] = 1; work.push_back(m); }
    };
    put(M.zero);
    for (int g : gens)
        for (int r = 0; r < M.ring->order; ++r) put(M.act(r, g));
    std::vector<int> closed;
    while (!work.empty()) {
        int m = work.back();
        work.pop_back();
        put(M.add(m, m));
        for (int n : closed) put(M.add(m, n));
        closed.push_back(m);
    }
    std::vector<int> out;
    for (int m = 0; m < M.order; ++m)
        if (mask[m]) out.push_back(m);
    return out;
}

// All submodules, by closing the cyclic submodules under pairwise sums.
inline std::vector<std::vector<int>> all_submodules(const FiniteModule& M) {
    std::vector<std::vector<int>> found;
    std::vector<std::vector<int>> work;
    auto put = [&](std::vector<int> s) {
        if (std::find(found.begin(), found.end(), s) == found.end()) {
            found.push_back(s);
            work.push_back(std::move(s));
        }
    };
    for (int m = 0; m < M.order; ++m) put(submodule_generated(M, {m}));
    while (!work.empty()) {
        std::vector<int> A = work.back();
        work.pop_back();
        for (size_t i = 0; i < found.size(); ++i) {
            std::vector<char> mask(M.order, 0);
            for (int a : A)
                for (int b : found[i]) mask[M.add(a, b)] = 1;
            std::vector<int> S;
            for (int m = 0; m < M.order; ++m)
                if (mask[m]) S.push_back(m);
            put(std::move(S));
        }
    }
    std::sort(found.begin(), found.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return found;
}

// All submodules N with L within N, canonical order. L is given as a set of
// module elements (typically the product set I*M).
inline std::vector<std::vector<int>> submodules_between(const FiniteModule& M,
                                                        const std::vector<int>& L) {
    std::vector<char> lower(M.order, 0);
    for (int m : L) lower[m] = 1;
    std::vector<std::vector<int>> out;
    for (auto& N : all_submodules(M)) {
        bool ok = true;
        std::vector<char> mask(M.order, 0);
        for (int m : N) mask[m] = 1;
        for (int m = 0; m < M.order; ++m)
            if (lower[m] && !mask[m]) { ok = false; break; }
        if (ok) out.push_back(N);
    }
    return out;
}

// The set I*M as a submodule (products i*m, closed under addition).
inline std::vector<int> ideal_times_module(const Ideal& I, const FiniteModule& M) {
    std::vector<int> gens;
    for (int i : I.members)
        for (int m = 0; m < M.order; ++m) gens.push_back(M.act(i, m));
    return submodule_generated(M, gens);
}

}  // namespace deltaj
