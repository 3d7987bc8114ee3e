#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/module.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

// Provenance attached to rings produced by idealize(); lets later
// constructions recover the base ring, the module, and the pair coding.
struct IdealizationInfo {
    RingPtr base;
    ModulePtr mod;

    int pair_index(int r, int m) const { return r * mod->order + m; }
    int ring_part(int x) const { return x / mod->order; }
    int mod_part(int x) const { return x % mod->order; }
};

// Idealization R(+)M: pairs (r,m) with componentwise addition and
// (r,m)(s,m') = (rs, rm' + sm). Element (r,m) has index r*|M| + m.
inline RingPtr idealize(const RingPtr& R, const ModulePtr& M) {
    if (M->ring.get() != R.get())
        throw domain_error("idealization requires a module over the same ring");
    long n = static_cast<long>(R->order) * M->order;
    std::string spec = R->spec + "(+)" + M->spec;
    check_order_cap(n, spec);

    FiniteRing RM;
    RM.order = static_cast<int>(n);
    RM.add_table.resize(n * n);
    RM.mul_table.resize(n * n);
    auto idx = [&](int r, int m) { return r * M->order + m; };
    for (int r = 0; r < R->order; ++r)
        for (int m = 0; m < M->order; ++m)
            for (int s = 0; s < R->order; ++s)
                for (int m2 = 0; m2 < M->order; ++m2) {
                    int x = idx(r, m), y = idx(s, m2);
                    RM.add_table[x * n + y] = idx(R->add(r, s), M->add(m, m2));
                    RM.mul_table[x * n + y] =
                        idx(R->mul(r, s), M->add(M->act(r, m2), M->act(s, m)));
                }
    RM.zero = idx(R->zero, M->zero);
    RM.one = idx(R->one, M->zero);
    RM.spec = spec;
    for (int r = 0; r < R->order; ++r)
        for (int m = 0; m < M->order; ++m)
            RM.element_names.push_back("(" + R->name(r) + "," + M->name(m) + ")");

    auto info = std::make_shared<IdealizationInfo>();
    info->base = R;
    info->mod = M;
    RM.idealization = info;
    return detail::seal(std::move(RM));
}

// The ideal I(+)N = {(a, n) | a in I, n in N} of R(+)M. Legal exactly when
// I*M lies inside N; otherwise the set is not closed under multiplication.
inline Ideal embed_ideal(const RingPtr& RM, const Ideal& I, const std::vector<int>& N) {
    if (!RM->idealization)
        throw domain_error(RM->spec + ": embed_ideal needs an idealization ring");
    const IdealizationInfo& info = *RM->idealization;
    if (I.ring.get() != info.base.get())
        throw domain_error("embed_ideal: ideal must belong to the base ring");
    const FiniteModule& M = *info.mod;
    std::vector<char> nm(M.order, 0);
    for (int m : N) nm[m] = 1;
    for (int m : ideal_times_module(I, M))
        if (!nm[m])
            throw domain_error(RM->spec + ": I*M is not inside N, so I(+)N is not an ideal (I=" +
                               I.display() + ")");
    std::vector<char> mask(RM->order, 0);
    for (int a : I.members)
        for (int m : N) mask[info.pair_index(a, m)] = 1;
    return detail::ideal_from_mask(RM, std::move(mask));
}

// Projection of an ideal H of R(+)M to the base: I_H = {r | (r,m) in H}.
inline Ideal projection_ideal(const RingPtr& RM, const Ideal& H) {
    const IdealizationInfo& info = *RM->idealization;
    std::vector<char> mask(info.base->order, 0);
    for (int x : H.members) mask[info.ring_part(x)] = 1;
    return detail::ideal_from_mask(info.base, std::move(mask));
}

// If H equals I_H(+)N_H for its projections, return (I_H members, N_H);
// otherwise nullopt. Ideals of an idealization need not have that shape.
inline std::optional<std::pair<Ideal, std::vector<int>>> embedded_form(const RingPtr& RM,
                                                                       const Ideal& H) {
    const IdealizationInfo& info = *RM->idealization;
    Ideal I = projection_ideal(RM, H);
    std::vector<char> nm(info.mod->order, 0);
    std::vector<int> N;
    for (int x : H.members) {
        int m = info.mod_part(x);
        if (!nm[m]) { nm[m] = 1; N.push_back(m); }
    }
    std::sort(N.begin(), N.end());
    if (static_cast<long>(I.size()) * static_cast<long>(N.size()) != static_cast<long>(H.size()))
        return std::nullopt;
    for (int a : I.members)
        for (int m : N)
            if (!H.contains(info.pair_index(a, m))) return std::nullopt;
    return std::make_pair(std::move(I), std::move(N));
}

}  // namespace deltaj
