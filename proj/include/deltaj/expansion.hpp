#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/hom.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/idealize.hpp"
#include "deltaj/lattice.hpp"
#include "deltaj/localize.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

enum class ExpansionKind { identity, radical, add_ideal, table, composed };

// Expansion function on the ideal lattice of one ring, materialized as a
// total lattice-index table. Axioms (I within delta(I); monotone) are
// verified exhaustively at construction.
struct ExpansionFn {
    RingPtr ring;
    LatticePtr lat;
    ExpansionKind kind = ExpansionKind::table;
    int param = -1;          // add_ideal: lattice index of M
    std::vector<int> table;  // lattice index -> lattice index
    std::string name;

    int apply(int i) const { return table[i]; }
    const Ideal& image_of(int i) const { return lat->at(table[i]); }
    Ideal operator()(const Ideal& I) const { return lat->at(table[lat->find(I)]); }
};

// Axiom check; returns nullopt on success or a witness description.
inline std::optional<std::string> expansion_axiom_violation(const IdealLattice& lat,
                                                            const std::vector<int>& table) {
    const int n = lat.count();
    if (static_cast<int>(table.size()) != n) return "table does not cover the lattice";
    for (int i = 0; i < n; ++i)
        if (table[i] < 0 || table[i] >= n) return "table entry out of range";
    for (int i = 0; i < n; ++i)
        if (!lat.subset[i][table[i]])
            return "not extensive at " + lat.at(i).display();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lat.subset[i][j] && !lat.subset[table[i]][table[j]])
                return "not monotone at pair " + lat.at(i).display() + " within " +
                       lat.at(j).display();
    return std::nullopt;
}

namespace detail {

inline ExpansionFn seal_expansion(RingPtr R, LatticePtr lat, ExpansionKind kind, int param,
                                  std::vector<int> table, std::string name) {
    if (auto why = expansion_axiom_violation(*lat, table))
        throw domain_error(R->spec + ": " + name + " is not an expansion function: " + *why);
    ExpansionFn d;
    d.ring = std::move(R);
    d.lat = std::move(lat);
    d.kind = kind;
    d.param = param;
    d.table = std::move(table);
    d.name = std::move(name);
    return d;
}

}  // namespace detail

// delta_0: the identity expansion.
inline ExpansionFn make_identity_expansion(const RingPtr& R, const LatticePtr& lat) {
    std::vector<int> t(lat->count());
    for (int i = 0; i < lat->count(); ++i) t[i] = i;
    return detail::seal_expansion(R, lat, ExpansionKind::identity, -1, std::move(t), "delta0");
}

// delta_1: the radical expansion.
inline ExpansionFn make_radical_expansion(const RingPtr& R, const LatticePtr& lat) {
    return detail::seal_expansion(R, lat, ExpansionKind::radical, -1, lat->rad, "delta1");
}

// delta_{+M}: I -> I + M for a fixed ideal M.
inline ExpansionFn make_add_ideal_expansion(const RingPtr& R, const LatticePtr& lat, int m_idx) {
    if (m_idx < 0 || m_idx >= lat->count())
        throw domain_error(R->spec + ": add-ideal expansion parameter out of range");
    std::vector<int> t(lat->count());
    for (int i = 0; i < lat->count(); ++i) t[i] = lat->sum[i][m_idx];
    return detail::seal_expansion(R, lat, ExpansionKind::add_ideal, m_idx, std::move(t),
                                  "plusM" + lat->gen_label(m_idx));
}

inline ExpansionFn make_add_ideal_expansion(const RingPtr& R, const LatticePtr& lat,
                                            const Ideal& M) {
    return make_add_ideal_expansion(R, lat, lat->find(M));
}

// Explicit-table expansion; the table must satisfy both axioms.
inline ExpansionFn make_table_expansion(const RingPtr& R, const LatticePtr& lat,
                                        std::vector<int> table, const std::string& name = "table") {
    return detail::seal_expansion(R, lat, ExpansionKind::table, -1, std::move(table), name);
}

// delta o gamma, i.e. I -> delta(gamma(I)). Extensivity is inherited;
// monotonicity is re-verified by the constructor.
inline ExpansionFn compose(const ExpansionFn& delta, const ExpansionFn& gamma) {
    if (delta.ring.get() != gamma.ring.get())
        throw domain_error("compose requires expansions on the same ring");
    std::vector<int> t(delta.table.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = delta.table[gamma.table[i]];
    return detail::seal_expansion(delta.ring, delta.lat, ExpansionKind::composed, -1, std::move(t),
                                  delta.name + "o" + gamma.name);
}

// delta(I meet J) == delta(I) meet delta(J) for every lattice pair; on
// failure the witness pair of lattice indices is returned.
inline std::pair<bool, std::pair<int, int>> is_intersection_preserving(const ExpansionFn& d) {
    const IdealLattice& lat = *d.lat;
    for (int i = 0; i < lat.count(); ++i)
        for (int j = 0; j < lat.count(); ++j)
            if (d.table[lat.meet[i][j]] != lat.meet[d.table[i]][d.table[j]])
                return {false, {i, j}};
    return {true, {-1, -1}};
}

inline bool is_idempotent_at(const ExpansionFn& d, int i) { return d.table[d.table[i]] == d.table[i]; }
inline bool is_idempotent_at(const ExpansionFn& d, const Ideal& I) {
    return is_idempotent_at(d, d.lat->find(I));
}

// f is a delta-gamma homomorphism when delta(f^{-1}(J)) == f^{-1}(gamma(J))
// for every ideal J of the target. On failure returns the witness J.
inline std::pair<bool, int> is_delta_gamma_hom(const RingHom& f, const ExpansionFn& delta,
                                               const ExpansionFn& gamma) {
    if (delta.ring.get() != f.source.get() || gamma.ring.get() != f.target.get())
        throw domain_error("is_delta_gamma_hom: expansions must live on the map's endpoints");
    const IdealLattice& tl = *gamma.lat;
    for (int j = 0; j < tl.count(); ++j) {
        Ideal pre = hom_preimage(f, tl.at(j));
        Ideal pre_gamma = hom_preimage(f, tl.at(gamma.table[j]));
        if (delta.image_of(delta.lat->find(pre)).members != pre_gamma.members) return {false, j};
    }
    return {true, -1};
}

// ---- induced expansions ----

struct QuotientExpansion {
    RingPtr quotient;
    LatticePtr quotient_lattice;
    RingHom projection;
    ExpansionFn fn;  // delta_q on R/J
};

// delta_q on R/J: delta_q(K/J) = delta(K)/J, where K is the full preimage.
// delta(K) contains K contains J, so its image is again an ideal of R/J.
inline QuotientExpansion induce_quotient(const ExpansionFn& delta, const Ideal& J) {
    if (J.ring.get() != delta.ring.get())
        throw domain_error("induce_quotient: ideal must belong to the expansion's ring");
    if (!J.is_proper())
        throw domain_error(delta.ring->spec + ": cannot induce on a quotient by the unit ideal");
    QuotientExpansion out;
    auto [Q, proj] = quotient_ring(delta.ring, J);
    out.quotient = Q;
    out.projection = proj;
    out.quotient_lattice = all_ideals(Q);
    const IdealLattice& ql = *out.quotient_lattice;
    std::vector<int> table(ql.count());
    for (int i = 0; i < ql.count(); ++i) {
        Ideal K = hom_preimage(proj, ql.at(i));
        int k = delta.lat->find(K);
        table[i] = ql.find(hom_image(proj, delta.image_of(k)));
    }
    out.fn = detail::seal_expansion(Q, out.quotient_lattice, ExpansionKind::table, -1,
                                    std::move(table), delta.name + "_q");
    return out;
}

struct LocalizedExpansion {
    Localization loc;
    LatticePtr loc_lattice;
    bool well_defined = true;
    std::pair<int, int> witness{-1, -1};  // source lattice indices with equal extension
                                          // but different extended images
    ExpansionFn fn;                       // valid only when well_defined
};

// delta_S on S^{-1}R: maps the extension of I to the extension of delta(I).
// Two ideals can have the same extension; the construction verifies that
// delta sends them to ideals with the same extension, otherwise delta_S is
// ill-defined and the offending pair is reported.
inline LocalizedExpansion induce_localization(const ExpansionFn& delta,
                                              const MultiplicativeSet& S) {
    if (S.ring.get() != delta.ring.get())
        throw domain_error("induce_localization: set must belong to the expansion's ring");
    LocalizedExpansion out;
    out.loc = localize(delta.ring, S);
    out.loc_lattice = all_ideals(out.loc.ring);
    const IdealLattice& sl = *delta.lat;
    const IdealLattice& ll = *out.loc_lattice;

    std::vector<int> ext(sl.count());   // extension class of each source ideal
    for (int i = 0; i < sl.count(); ++i) ext[i] = ll.find(extend_ideal(out.loc, sl.at(i)));

    std::vector<int> table(ll.count(), -1);
    std::vector<int> source_of(ll.count(), -1);
    for (int i = 0; i < sl.count(); ++i) {
        int e = ext[i];
        int img = ext[delta.table[i]];
        if (table[e] == -1) {
            table[e] = img;
            source_of[e] = i;
        } else if (table[e] != img) {
            out.well_defined = false;
            out.witness = {source_of[e], i};
            return out;
        }
    }
    // every ideal of S^{-1}R = R/K is an extension (preimages pull back), so
    // the table is total by now
    for (int e = 0; e < ll.count(); ++e)
        if (table[e] == -1)
            throw domain_error(delta.ring->spec + ": localization lattice has a non-extended ideal");
    out.fn = detail::seal_expansion(out.loc.ring, out.loc_lattice, ExpansionKind::table, -1,
                                    std::move(table), delta.name + "_S");
    return out;
}

struct IdealizationExpansion {
    LatticePtr rm_lattice;
    ExpansionFn fn;                       // delta_(+) on R(+)M
    std::vector<int> non_embedded;        // lattice indices of R(+)M ideals not of the form I(+)N
};

// delta_(+) on R(+)M: embedded ideals I(+)N map to delta(I)(+)M. Ideals not
// of that shape (they exist in general) are totalized through the projection
// ideal: H -> delta(I_H)(+)M. On embedded ideals the two rules agree.
inline IdealizationExpansion induce_idealization(const ExpansionFn& delta, const RingPtr& RM,
                                                 const LatticePtr& rm_lattice) {
    if (!RM->idealization)
        throw domain_error(RM->spec + ": induce_idealization needs an idealization ring");
    const IdealizationInfo& info = *RM->idealization;
    if (info.base.get() != delta.ring.get())
        throw domain_error("induce_idealization: expansion must live on the base ring");

    IdealizationExpansion out;
    out.rm_lattice = rm_lattice;
    const IdealLattice& rl = *rm_lattice;
    std::vector<int> full_module(info.mod->order);
    for (int m = 0; m < info.mod->order; ++m) full_module[m] = m;

    std::vector<int> table(rl.count());
    for (int h = 0; h < rl.count(); ++h) {
        const Ideal& H = rl.at(h);
        if (!embedded_form(RM, H)) out.non_embedded.push_back(h);
        Ideal IH = projection_ideal(RM, H);
        int d = delta.table[delta.lat->find(IH)];
        table[h] = rl.find(embed_ideal(RM, delta.lat->at(d), full_module));
    }
    out.fn = detail::seal_expansion(RM, rm_lattice, ExpansionKind::table, -1, std::move(table),
                                    delta.name + "_(+)");
    return out;
}

// Restriction of an expansion to a unital subring along the inclusion:
// A -> S meet delta(<A>_R). Always a genuine expansion on the subring.
inline ExpansionFn preimage_expansion(const RingHom& incl, const ExpansionFn& delta,
                                      const LatticePtr& sub_lattice) {
    if (incl.target.get() != delta.ring.get())
        throw domain_error("preimage_expansion: expansion must live on the inclusion's target");
    const IdealLattice& sl = *sub_lattice;
    std::vector<int> table(sl.count());
    for (int i = 0; i < sl.count(); ++i) {
        std::vector<int> gens;
        for (int a : sl.at(i).members) gens.push_back(incl(a));
        Ideal up = ideal_generated(delta.ring, gens);
        Ideal img = delta.image_of(delta.lat->find(up));
        table[i] = sl.find(hom_preimage(incl, img));
    }
    return detail::seal_expansion(incl.source, sub_lattice, ExpansionKind::table, -1,
                                  std::move(table), delta.name + "|sub");
}

// The standard expansion family registered for every corpus ring: delta_0,
// delta_1, and delta_{+M} for each ideal M in lattice order.
inline std::vector<ExpansionFn> registered_expansions(const RingPtr& R, const LatticePtr& lat) {
    std::vector<ExpansionFn> out;
    out.push_back(make_identity_expansion(R, lat));
    out.push_back(make_radical_expansion(R, lat));
    for (int m = 0; m < lat->count(); ++m) out.push_back(make_add_ideal_expansion(R, lat, m));
    return out;
}

}  // namespace deltaj
