#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/hom.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

// Multiplicatively closed subset: contains 1, excludes 0, closed under
// products. Validated at construction.
struct MultiplicativeSet {
    RingPtr ring;
    std::vector<int> members;  // sorted
    std::vector<char> mask;

    bool contains(int a) const { return mask[a] != 0; }

    std::string display() const {
        std::string s = "{";
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) s += ",";
            s += ring->name(members[i]);
        }
        return s + "}";
    }
};

inline MultiplicativeSet make_mult_set(const RingPtr& R, const std::vector<int>& members) {
    MultiplicativeSet S;
    S.ring = R;
    S.mask.assign(R->order, 0);
    for (int a : members) {
        if (a < 0 || a >= R->order) throw domain_error(R->spec + ": set member out of range");
        S.mask[a] = 1;
    }
    if (!S.mask[R->one]) throw domain_error(R->spec + ": multiplicative set must contain 1");
    if (S.mask[R->zero]) throw domain_error(R->spec + ": multiplicative set must not contain 0");
    for (int a = 0; a < R->order; ++a)
        for (int b = 0; b < R->order; ++b)
            if (S.mask[a] && S.mask[b] && !S.mask[R->mul(a, b)])
                throw domain_error(R->spec + ": set not closed under products (" + R->name(a) +
                                   "*" + R->name(b) + ")");
    for (int a = 0; a < R->order; ++a)
        if (S.mask[a]) S.members.push_back(a);
    return S;
}

// Multiplicative closure of {1} and the generators; empty optional if the
// closure would contain 0.
inline std::optional<MultiplicativeSet> mult_closure(const RingPtr& R, const std::vector<int>& gens) {
    std::vector<char> mask(R->order, 0);
    mask[R->one] = 1;
    std::vector<int> work = {R->one};
    std::vector<int> closed;
    auto put = [&](int a) {
        if (!mask[a]) { mask[a] = 1; work.push_back(a); }
    };
    for (int g : gens) put(g);
    while (!work.empty()) {
        int a = work.back();
        work.pop_back();
        put(R->mul(a, a));
        for (int b : closed) put(R->mul(a, b));
        closed.push_back(a);
    }
    if (mask[R->zero]) return std::nullopt;
    std::vector<int> members;
    for (int a = 0; a < R->order; ++a)
        if (mask[a]) members.push_back(a);
    return make_mult_set(R, members);
}

struct Localization {
    RingPtr ring;       // S^{-1}R
    RingHom canonical;  // r -> r/1
    Ideal kernel;       // {r | rs = 0 for some s in S}

    // a/s as an element of S^{-1}R; the image of s is always a unit.
    int fraction(int a, int s) const {
        const FiniteRing& L = *ring;
        return L.mul(canonical(a), inverse(L, canonical(s)));
    }
};

// S^{-1}R for a finite ring, realized as R/K with K = {r | rs = 0 for some
// s in S}: in the quotient every member of S becomes a non-zero-divisor,
// and in a finite ring non-zero-divisors are units.
inline Localization localize(const RingPtr& R, const MultiplicativeSet& S) {
    if (S.ring.get() != R.get())
        throw domain_error("localization requires a multiplicative set of the same ring");
    std::vector<char> kmask(R->order, 0);
    for (int r = 0; r < R->order; ++r)
        for (int s : S.members)
            if (R->mul(r, s) == R->zero) { kmask[r] = 1; break; }
    Ideal K = detail::ideal_from_mask(R, std::move(kmask));

    auto [L, proj] = quotient_ring(R, K);
    for (int s : S.members)
        if (!L->is_unit(proj(s)))
            throw domain_error(R->spec + ": localization failed to invert " + R->name(s));

    Localization out;
    out.ring = L;
    out.canonical = proj;
    out.kernel = std::move(K);
    return out;
}

// Extension S^{-1}I: the ideal of S^{-1}R generated by the image of I.
inline Ideal extend_ideal(const Localization& loc, const Ideal& I) {
    std::vector<int> gens;
    for (int a : I.members) gens.push_back(loc.canonical(a));
    return ideal_generated(loc.ring, gens);
}

}  // namespace deltaj
