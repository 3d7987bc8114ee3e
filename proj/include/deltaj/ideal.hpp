#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

// Ideal of a finite ring, kept in canonical form: members sorted ascending,
// plus a membership mask for O(1) lookups. Equality is set equality.
struct Ideal {
    RingPtr ring;
    std::vector<int> members;
    std::vector<char> mask;

    bool contains(int a) const { return mask[a] != 0; }
    int size() const { return static_cast<int>(members.size()); }
    bool is_proper() const { return size() < ring->order; }
    bool is_zero() const { return size() == 1; }

    bool operator==(const Ideal& o) const { return members == o.members; }
    bool operator!=(const Ideal& o) const { return members != o.members; }

    // Canonical order: cardinality, then lexicographic member list.
    bool canonical_less(const Ideal& o) const {
        if (members.size() != o.members.size()) return members.size() < o.members.size();
        return members < o.members;
    }

    bool subset_of(const Ideal& o) const {
        for (int m : members)
            if (!o.contains(m)) return false;
        return true;
    }

    // canonical generator label, e.g. "(6)"; defined after ideal_generated
    std::string display() const;

    std::string member_list() const {
        std::string s = "{";
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) s += ",";
            s += ring->name(members[i]);
        }
        return s + "}";
    }
};

namespace detail {

inline Ideal ideal_from_mask(RingPtr R, std::vector<char> mask) {
    Ideal I;
    I.ring = std::move(R);
    for (int a = 0; a < I.ring->order; ++a)
        if (mask[a]) I.members.push_back(a);
    I.mask = std::move(mask);
    return I;
}

inline void require_same_ring(const Ideal& I, const Ideal& J) {
    if (I.ring.get() != J.ring.get())
        throw domain_error("ideal operation across different rings (" + I.ring->spec +
                           " vs " + J.ring->spec + ")");
}

}  // namespace detail

// Subset test against the ideal axioms (used for validation and as the
// brute-force enumeration filter).
inline bool is_ideal_set(const FiniteRing& R, const std::vector<char>& mask) {
    if (!mask[R.zero]) return false;
    std::vector<int> members;
    for (int a = 0; a < R.order; ++a)
        if (mask[a]) members.push_back(a);
    for (int a : members) {
        for (int b : members)
            if (!mask[R.add(a, b)]) return false;
        for (int r = 0; r < R.order; ++r)
            if (!mask[R.mul(r, a)]) return false;
    }
    return true;
}

// Smallest ideal containing gens: R-multiples of the generators, closed
// under addition by worklist fixpoint.
inline Ideal ideal_generated(const RingPtr& R, const std::vector<int>& gens) {
    std::vector<char> mask(R->order, 0);
    std::vector<int> work;
    auto put = [&](int a) {
        if (!mask[a]) { mask[a] = 1; work.push_back(a); }
    };
    put(R->zero);
    for (int g : gens) {
        if (g < 0 || g >= R->order)
            throw domain_error(R->spec + ": generator index out of range");
        for (int r = 0; r < R->order; ++r) put(R->mul(r, g));
    }
    std::vector<int> closed;
    while (!work.empty()) {
        int a = work.back();
        work.pop_back();
        for (int b : closed) put(R->add(a, b));
        put(R->add(a, a));
        closed.push_back(a);
    }
    return detail::ideal_from_mask(R, std::move(mask));
}

inline Ideal zero_ideal(const RingPtr& R) { return ideal_generated(R, {}); }
inline Ideal unit_ideal(const RingPtr& R) { return ideal_generated(R, {R->one}); }

inline std::string Ideal::display() const {
    // greedy canonical generators: repeatedly adjoin the least unspanned member
    std::vector<int> gens;
    Ideal span = zero_ideal(ring);
    while (span.size() < size()) {
        for (int m : members)
            if (!span.contains(m)) {
                gens.push_back(m);
                span = ideal_generated(ring, gens);
                break;
            }
    }
    if (gens.empty()) gens.push_back(ring->zero);
    std::string s = "(";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ",";
        s += ring->name(gens[i]);
    }
    return s + ")";
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    const FiniteRing& R = *I.ring;
    std::vector<char> mask(R.order, 0);
    for (int a : I.members)
        for (int b : J.members) mask[R.add(a, b)] = 1;
    return detail::ideal_from_mask(I.ring, std::move(mask));
}

inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    std::vector<char> mask(I.ring->order, 0);
    for (int a : I.members)
        if (J.contains(a)) mask[a] = 1;
    return detail::ideal_from_mask(I.ring, std::move(mask));
}

// Ideal generated by the pairwise products.
inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    const FiniteRing& R = *I.ring;
    std::vector<int> gens;
    std::vector<char> seen(R.order, 0);
    for (int a : I.members)
        for (int b : J.members) {
            int p = R.mul(a, b);
            if (!seen[p]) { seen[p] = 1; gens.push_back(p); }
        }
    return ideal_generated(I.ring, gens);
}

// (I : J) = {x | xJ subset of I}.
inline Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    const FiniteRing& R = *I.ring;
    std::vector<char> mask(R.order, 0);
    for (int x = 0; x < R.order; ++x) {
        bool ok = true;
        for (int j : J.members)
            if (!I.contains(R.mul(x, j))) { ok = false; break; }
        if (ok) mask[x] = 1;
    }
    return detail::ideal_from_mask(I.ring, std::move(mask));
}

// (I : x), the single-element form of the ideal quotient.
inline Ideal ideal_quotient(const Ideal& I, int x) {
    return ideal_quotient(I, ideal_generated(I.ring, {x}));
}

// {r | r^k in I for some k}; the multiplicative orbit of any element cycles
// within |R| steps, so the exponent bound |R| is sound.
inline Ideal radical(const Ideal& I) {
    const FiniteRing& R = *I.ring;
    std::vector<char> mask(R.order, 0);
    for (int r = 0; r < R.order; ++r) {
        int x = r;
        for (int k = 0; k < R.order; ++k) {
            if (I.contains(x)) { mask[r] = 1; break; }
            x = R.mul(x, r);
        }
    }
    return detail::ideal_from_mask(I.ring, std::move(mask));
}

}  // namespace deltaj
