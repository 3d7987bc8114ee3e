#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

// The complete ideal lattice of a finite ring, with every binary operation,
// radical, and classification flag materialized as index tables. Ideals sit
// in canonical order (cardinality, then lexicographic member list), so a
// lattice index is a stable, reproducible name for an ideal.
struct IdealLattice {
    RingPtr ring;
    std::vector<Ideal> ideals;
    std::map<std::vector<int>, int> index;
    int zero_idx = -1;
    int unit_idx = -1;

    std::vector<std::vector<char>> subset;  // subset[i][j]: ideals[i] within ideals[j]
    std::vector<std::vector<int>> sum;
    std::vector<std::vector<int>> meet;
    std::vector<std::vector<int>> prod;
    std::vector<std::vector<int>> colon;
    std::vector<int> rad;           // radical, as lattice index
    std::vector<int> principal_of;  // element -> index of the ideal it generates
    std::vector<char> is_principal;
    std::vector<char> is_prime;
    std::vector<char> is_maximal;
    std::vector<char> is_primary;
    std::vector<char> is_superfluous_f;
    int jacobson_idx = -1;
    std::vector<int> j_of;                // J(I) per proper ideal; -1 at unit_idx
    std::vector<std::vector<int>> zsets;  // Z_I(R) per proper ideal; empty at unit_idx
    bool quasi_local = false;

    int count() const { return static_cast<int>(ideals.size()); }
    const Ideal& at(int i) const { return ideals[i]; }

    int find(const Ideal& I) const {
        auto it = index.find(I.members);
        if (it == index.end())
            throw domain_error(ring->spec + ": ideal " + I.display() + " not in lattice");
        return it->second;
    }
    bool proper(int i) const { return i != unit_idx; }

    // Least-generator description of an ideal, for stable display names.
    std::vector<int> minimal_generators(int i) const {
        const Ideal& I = ideals[i];
        std::vector<int> gens;
        Ideal span = zero_ideal(ring);
        while (span.size() < I.size()) {
            for (int m : I.members)
                if (!span.contains(m)) {
                    gens.push_back(m);
                    std::vector<int> g2 = gens;
                    span = ideal_generated(ring, g2);
                    break;
                }
        }
        return gens;
    }

    std::string gen_label(int i) const {
        auto gens = minimal_generators(i);
        if (gens.empty()) gens.push_back(ring->zero);
        std::string s = "(";
        for (size_t k = 0; k < gens.size(); ++k) {
            if (k) s += ",";
            s += ring->name(gens[k]);
        }
        return s + ")";
    }
};

using LatticePtr = std::shared_ptr<const IdealLattice>;

// Every ideal of a finite ring is a finite sum of principal ideals, so the
// lattice is the closure of the principal ideals under pairwise sums.
inline LatticePtr all_ideals(const RingPtr& R) {
    auto lat = std::make_shared<IdealLattice>();
    lat->ring = R;

    std::map<std::vector<int>, Ideal> found;
    std::vector<Ideal> work;
    auto put = [&](Ideal I) {
        if (found.emplace(I.members, I).second) work.push_back(std::move(I));
    };
    put(zero_ideal(R));
    for (int g = 0; g < R->order; ++g) put(ideal_generated(R, {g}));
    while (!work.empty()) {
        Ideal I = work.back();
        work.pop_back();
        for (auto& [key, J] : found) {
            Ideal S = ideal_sum(I, J);
            if (!found.count(S.members)) put(std::move(S));
        }
    }

    for (auto& [key, I] : found) lat->ideals.push_back(I);
    std::sort(lat->ideals.begin(), lat->ideals.end(),
              [](const Ideal& a, const Ideal& b) { return a.canonical_less(b); });
    const int n = lat->count();
    for (int i = 0; i < n; ++i) lat->index[lat->ideals[i].members] = i;
    lat->zero_idx = lat->index.at(zero_ideal(R).members);
    lat->unit_idx = lat->index.at(unit_ideal(R).members);

    lat->subset.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            lat->subset[i][j] = lat->ideals[i].subset_of(lat->ideals[j]) ? 1 : 0;

    auto idx_of = [&](const Ideal& I) { return lat->index.at(I.members); };
    lat->sum.assign(n, std::vector<int>(n, -1));
    lat->meet.assign(n, std::vector<int>(n, -1));
    lat->prod.assign(n, std::vector<int>(n, -1));
    lat->colon.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lat->sum[i][j] = idx_of(ideal_sum(lat->ideals[i], lat->ideals[j]));
            lat->meet[i][j] = idx_of(ideal_intersect(lat->ideals[i], lat->ideals[j]));
            lat->prod[i][j] = idx_of(ideal_product(lat->ideals[i], lat->ideals[j]));
            lat->colon[i][j] = idx_of(ideal_quotient(lat->ideals[i], lat->ideals[j]));
        }
    lat->rad.resize(n);
    for (int i = 0; i < n; ++i) lat->rad[i] = idx_of(radical(lat->ideals[i]));
    lat->principal_of.resize(R->order);
    for (int g = 0; g < R->order; ++g)
        lat->principal_of[g] = idx_of(ideal_generated(R, {g}));
    lat->is_principal.assign(n, 0);
    lat->is_principal[lat->zero_idx] = 1;
    for (int g = 0; g < R->order; ++g) lat->is_principal[lat->principal_of[g]] = 1;

    lat->is_prime.assign(n, 0);
    lat->is_primary.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const Ideal& I = lat->ideals[i];
        if (!I.is_proper()) continue;
        const Ideal& rt = lat->ideals[lat->rad[i]];
        bool prime = true, primary = true;
        for (int a = 0; a < R->order && (prime || primary); ++a) {
            if (I.contains(a)) continue;
            for (int b = 0; b < R->order; ++b) {
                if (!I.contains(R->mul(a, b))) continue;
                if (!I.contains(b)) prime = false;
                if (!rt.contains(b)) primary = false;
                if (!prime && !primary) break;
            }
        }
        lat->is_prime[i] = prime ? 1 : 0;
        lat->is_primary[i] = primary ? 1 : 0;
    }

    lat->is_maximal.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (i == lat->unit_idx) continue;
        bool maximal = true;
        for (int j = 0; j < n; ++j)
            if (j != i && j != lat->unit_idx && lat->subset[i][j]) { maximal = false; break; }
        lat->is_maximal[i] = maximal ? 1 : 0;
    }

    std::vector<char> jac_mask(R->order, 1);
    int maximal_count = 0;
    for (int i = 0; i < n; ++i)
        if (lat->is_maximal[i]) {
            ++maximal_count;
            for (int a = 0; a < R->order; ++a)
                if (!lat->ideals[i].contains(a)) jac_mask[a] = 0;
        }
    lat->jacobson_idx = idx_of(detail::ideal_from_mask(R, jac_mask));
    lat->quasi_local = (maximal_count == 1);

    // Cross-check the radical-by-units characterization; the two definitions
    // of the Jacobson radical must agree on every ring we construct.
    {
        std::vector<char> um(R->order, 0);
        for (int u : units(*R)) um[u] = 1;
        for (int a = 0; a < R->order; ++a) {
            bool in = true;
            for (int b = 0; b < R->order; ++b)
                if (!um[R->sub(R->one, R->mul(a, b))]) { in = false; break; }
            if ((in ? 1 : 0) != jac_mask[a])
                throw domain_error(R->spec + ": Jacobson radical characterizations disagree at " + R->name(a));
        }
    }

    lat->j_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (i == lat->unit_idx) continue;
        std::vector<char> m(R->order, 1);
        for (int j = 0; j < n; ++j)
            if (lat->is_maximal[j] && lat->subset[i][j])
                for (int a = 0; a < R->order; ++a)
                    if (!lat->ideals[j].contains(a)) m[a] = 0;
        lat->j_of[i] = idx_of(detail::ideal_from_mask(R, m));
    }

    lat->is_superfluous_f.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (i == lat->unit_idx) continue;
        bool superf = true;
        for (int j = 0; j < n; ++j)
            if (j != lat->unit_idx && lat->sum[i][j] == lat->unit_idx) { superf = false; break; }
        lat->is_superfluous_f[i] = superf ? 1 : 0;
    }

    lat->zsets.resize(n);
    for (int i = 0; i < n; ++i) {
        if (i == lat->unit_idx) continue;
        const Ideal& I = lat->ideals[i];
        for (int r = 0; r < R->order; ++r)
            for (int s = 0; s < R->order; ++s)
                if (!I.contains(s) && I.contains(R->mul(r, s))) {
                    lat->zsets[i].push_back(r);
                    break;
                }
    }

    return lat;
}

// Brute-force enumeration over all subsets; usable only for small rings and
// kept as the independent oracle for the closure-based enumeration.
inline std::vector<Ideal> all_ideals_brute_force(const RingPtr& R) {
    if (R->order > 20)
        throw domain_error(R->spec + ": subset enumeration only supported through order 20");
    std::vector<int> nonzero;
    for (int a = 0; a < R->order; ++a)
        if (a != R->zero) nonzero.push_back(a);
    std::vector<Ideal> out;
    for (long m = 0; m < (1L << nonzero.size()); ++m) {
        std::vector<char> mask(R->order, 0);
        mask[R->zero] = 1;
        for (size_t b = 0; b < nonzero.size(); ++b)
            if (m >> b & 1) mask[nonzero[b]] = 1;
        if (is_ideal_set(*R, mask)) out.push_back(detail::ideal_from_mask(R, std::move(mask)));
    }
    std::sort(out.begin(), out.end(),
              [](const Ideal& a, const Ideal& b) { return a.canonical_less(b); });
    return out;
}

struct BasicClassification {
    bool is_proper = false;
    bool is_prime = false;
    bool is_maximal = false;
    bool is_primary = false;
};

inline BasicClassification classify_basic(const IdealLattice& lat, int i) {
    BasicClassification c;
    c.is_proper = lat.proper(i);
    if (!c.is_proper) return c;
    c.is_prime = lat.is_prime[i];
    c.is_maximal = lat.is_maximal[i];
    c.is_primary = lat.is_primary[i];
    return c;
}

inline BasicClassification classify_basic(const IdealLattice& lat, const Ideal& I) {
    return classify_basic(lat, lat.find(I));
}

inline const Ideal& jacobson_radical(const IdealLattice& lat) {
    return lat.ideals[lat.jacobson_idx];
}

// Independent characterization {a | 1 - ab is a unit for every b}; must equal
// the maximal-ideal intersection (and construction enforces that it does).
inline Ideal jacobson_radical_by_units(const RingPtr& R) {
    std::vector<char> um(R->order, 0);
    for (int u : units(*R)) um[u] = 1;
    std::vector<char> mask(R->order, 0);
    for (int a = 0; a < R->order; ++a) {
        bool in = true;
        for (int b = 0; b < R->order; ++b)
            if (!um[R->sub(R->one, R->mul(a, b))]) { in = false; break; }
        if (in) mask[a] = 1;
    }
    return detail::ideal_from_mask(R, std::move(mask));
}

// J(I): intersection of the maximal ideals containing I. Defined for proper
// ideals only.
inline const Ideal& j_radical_of_ideal(const IdealLattice& lat, int i) {
    if (!lat.proper(i))
        throw domain_error(lat.ring->spec + ": J(I) requires a proper ideal");
    return lat.ideals[lat.j_of[i]];
}

inline const Ideal& j_radical_of_ideal(const IdealLattice& lat, const Ideal& I) {
    return j_radical_of_ideal(lat, lat.find(I));
}

inline bool is_superfluous(const IdealLattice& lat, int i) {
    if (!lat.proper(i))
        throw domain_error(lat.ring->spec + ": superfluity requires a proper ideal");
    return lat.is_superfluous_f[i] != 0;
}

inline bool is_superfluous(const IdealLattice& lat, const Ideal& I) {
    return is_superfluous(lat, lat.find(I));
}

// Z_I(R) = {r | rs in I for some s outside I}.
inline const std::vector<int>& z_set(const IdealLattice& lat, int i) {
    if (!lat.proper(i))
        throw domain_error(lat.ring->spec + ": Z_I(R) requires a proper ideal");
    return lat.zsets[i];
}

inline const std::vector<int>& z_set(const IdealLattice& lat, const Ideal& I) {
    return z_set(lat, lat.find(I));
}

}  // namespace deltaj
