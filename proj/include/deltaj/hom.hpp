#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

// Unital ring homomorphism between two finite rings, as an element table.
// make_hom verifies the axioms exhaustively.
struct RingHom {
    RingPtr source;
    RingPtr target;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }

    bool is_injective() const {
        std::vector<char> seen(target->order, 0);
        for (int v : map) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }
    bool is_surjective() const {
        std::vector<char> seen(target->order, 0);
        for (int v : map) seen[v] = 1;
        for (char c : seen)
            if (!c) return false;
        return true;
    }
};

inline RingHom make_hom(const RingPtr& src, const RingPtr& dst, std::vector<int> map) {
    if (static_cast<int>(map.size()) != src->order)
        throw domain_error("homomorphism table must cover every source element");
    for (int v : map)
        if (v < 0 || v >= dst->order)
            throw domain_error("homomorphism table value out of range");
    if (map[src->zero] != dst->zero)
        throw domain_error("homomorphism must send 0 to 0");
    if (map[src->one] != dst->one)
        throw domain_error("homomorphism must send 1 to 1 (witness: 1 -> " +
                           dst->name(map[src->one]) + ")");
    for (int a = 0; a < src->order; ++a)
        for (int b = 0; b < src->order; ++b) {
            if (map[src->add(a, b)] != dst->add(map[a], map[b]))
                throw domain_error("additivity fails at (" + src->name(a) + "," + src->name(b) + ")");
            if (map[src->mul(a, b)] != dst->mul(map[a], map[b]))
                throw domain_error("multiplicativity fails at (" + src->name(a) + "," + src->name(b) + ")");
        }
    RingHom f;
    f.source = src;
    f.target = dst;
    f.map = std::move(map);
    return f;
}

inline Ideal kernel(const RingHom& f) {
    std::vector<char> mask(f.source->order, 0);
    for (int a = 0; a < f.source->order; ++a)
        if (f(a) == f.target->zero) mask[a] = 1;
    return detail::ideal_from_mask(f.source, std::move(mask));
}

// Preimage of a target ideal; always an ideal of the source.
inline Ideal hom_preimage(const RingHom& f, const Ideal& X) {
    if (X.ring.get() != f.target.get())
        throw domain_error("preimage requires an ideal of the target ring");
    std::vector<char> mask(f.source->order, 0);
    for (int a = 0; a < f.source->order; ++a)
        if (X.contains(f(a))) mask[a] = 1;
    return detail::ideal_from_mask(f.source, std::move(mask));
}

// Image of a source ideal; requires f surjective, otherwise the image need
// not be an ideal of the target.
inline Ideal hom_image(const RingHom& f, const Ideal& X) {
    if (X.ring.get() != f.source.get())
        throw domain_error("image requires an ideal of the source ring");
    if (!f.is_surjective())
        throw domain_error("image of an ideal is only taken along surjective homomorphisms");
    std::vector<char> mask(f.target->order, 0);
    for (int a : X.members) mask[f(a)] = 1;
    return detail::ideal_from_mask(f.target, std::move(mask));
}

// R/J with canonical least-index coset representatives, plus the projection.
// J must be proper: quotienting by R would produce the zero ring.
inline std::pair<RingPtr, RingHom> quotient_ring(const RingPtr& R, const Ideal& J) {
    if (J.ring.get() != R.get()) throw domain_error("quotient requires an ideal of the same ring");
    if (!J.is_proper())
        throw domain_error(R->spec + ": quotient by the unit ideal would be the zero ring");

    std::vector<int> rep(R->order, -1);
    std::vector<int> reps;
    for (int a = 0; a < R->order; ++a) {
        if (rep[a] >= 0) continue;
        int least = a;
        for (int j : J.members) least = std::min(least, R->add(a, j));
        for (int j : J.members) rep[R->add(a, j)] = least;
        reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<int> pos(R->order, -1);
    for (size_t i = 0; i < reps.size(); ++i) pos[reps[i]] = static_cast<int>(i);

    const int n = static_cast<int>(reps.size());
    FiniteRing Q;
    Q.order = n;
    Q.add_table.resize(n * n);
    Q.mul_table.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Q.add_table[i * n + j] = pos[rep[R->add(reps[i], reps[j])]];
            Q.mul_table[i * n + j] = pos[rep[R->mul(reps[i], reps[j])]];
        }
    Q.zero = pos[rep[R->zero]];
    Q.one = pos[rep[R->one]];
    // idealization bases get parenthesized so the label stays unambiguous
    bool wrap = false;
    int depth = 0;
    for (size_t i = 0; i + 2 < R->spec.size(); ++i) {
        char c = R->spec[i];
        if (R->spec.compare(i, 3, "(+)") == 0 && depth == 0) { wrap = true; break; }
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
    }
    Q.spec = (wrap ? "(" + R->spec + ")" : R->spec) + "/" + J.display();
    for (int r : reps) Q.element_names.push_back(R->name(r));
    RingPtr Qp = detail::seal(std::move(Q));

    std::vector<int> proj(R->order);
    for (int a = 0; a < R->order; ++a) proj[a] = pos[rep[a]];
    return {Qp, make_hom(R, Qp, std::move(proj))};
}

// Subring of R spanned by the given mask (must contain 0 and 1 and be closed
// under the ring operations); returns the subring and its inclusion map.
inline std::pair<RingPtr, RingHom> make_subring(const RingPtr& R, const std::vector<char>& mask) {
    std::vector<int> elems;
    for (int a = 0; a < R->order; ++a)
        if (mask[a]) elems.push_back(a);
    std::vector<int> pos(R->order, -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    if (pos[R->zero] < 0 || pos[R->one] < 0)
        throw domain_error("subring must contain 0 and 1");
    const int n = static_cast<int>(elems.size());
    FiniteRing S;
    S.order = n;
    S.add_table.resize(n * n);
    S.mul_table.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = R->add(elems[i], elems[j]);
            int p = R->mul(elems[i], elems[j]);
            if (pos[s] < 0 || pos[p] < 0) throw domain_error("subset is not closed under ring operations");
            S.add_table[i * n + j] = pos[s];
            S.mul_table[i * n + j] = pos[p];
        }
    S.zero = pos[R->zero];
    S.one = pos[R->one];
    {
        std::string label;
        for (size_t i = 0; i < elems.size(); ++i) {
            if (i) label += ",";
            label += R->name(elems[i]);
        }
        S.spec = R->spec + "|sub{" + label + "}";
    }
    for (int e : elems) S.element_names.push_back(R->name(e));
    RingPtr Sp = detail::seal(std::move(S));
    return {Sp, make_hom(Sp, R, elems)};
}

// Every unital subring, enumerated by closure: starting from the prime
// subring, repeatedly extend each found subring by one outside element and
// close up. Any subring is reached along a chain of such extensions.
inline std::vector<std::vector<char>> unital_subring_masks(const RingPtr& R) {
    auto closure = [&](std::vector<char> mask) {
        std::vector<int> work;
        for (int a = 0; a < R->order; ++a)
            if (mask[a]) work.push_back(a);
        std::vector<int> closed;
        auto put = [&](int a) {
            if (!mask[a]) { mask[a] = 1; work.push_back(a); }
        };
        while (!work.empty()) {
            int a = work.back();
            work.pop_back();
            put(R->neg(a));
            put(R->add(a, a));
            put(R->mul(a, a));
            for (int b : closed) { put(R->add(a, b)); put(R->mul(a, b)); }
            closed.push_back(a);
        }
        return mask;
    };

    std::vector<char> prime(R->order, 0);
    prime[R->zero] = prime[R->one] = 1;
    prime = closure(std::move(prime));

    std::vector<std::vector<char>> found = {prime};
    std::vector<std::vector<char>> work = {prime};
    while (!work.empty()) {
        std::vector<char> S = work.back();
        work.pop_back();
        for (int a = 0; a < R->order; ++a) {
            if (S[a]) continue;
            std::vector<char> ext = S;
            ext[a] = 1;
            ext = closure(std::move(ext));
            if (std::find(found.begin(), found.end(), ext) == found.end()) {
                found.push_back(ext);
                work.push_back(std::move(ext));
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const std::vector<char>& a, const std::vector<char>& b) {
        int ca = static_cast<int>(std::count(a.begin(), a.end(), 1));
        int cb = static_cast<int>(std::count(b.begin(), b.end(), 1));
        if (ca != cb) return ca < cb;
        return a > b;  // same size: smaller member indices first
    });
    return found;
}

}  // namespace deltaj
