#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/expansion.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/lattice.hpp"
#include "deltaj/report.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

// Outcome of one exhaustive pair scan. When the property fails, (a,b) is the
// least violating pair ordered by (product ab, then a, then b) — the product
// ranges over the ideal, so scanning its sorted members first keeps reported
// witnesses stable across runs.
struct Verdict {
    bool holds = true;
    int a = -1, b = -1;
    explicit operator bool() const { return holds; }
};

namespace detail {

// Violation: ab in I, a not exempt, b outside the target set.
inline Verdict pair_scan(const FiniteRing& R, const Ideal& I, const std::vector<char>& exempt,
                         const std::vector<char>& target) {
    for (int c : I.members)
        for (int a = 0; a < R.order; ++a) {
            if (exempt[a]) continue;
            for (int b = 0; b < R.order; ++b)
                if (!target[b] && R.mul(a, b) == c) return {false, a, b};
        }
    return {};
}

inline void require_proper(const Ideal& I, const char* what) {
    if (!I.is_proper()) throw domain_error(I.ring->spec + ": " + what + " requires a proper ideal");
}

}  // namespace detail

// ab in I implies a in J(R) or b in delta(I).
inline Verdict is_delta_J_ideal(const Ideal& I, const ExpansionFn& d) {
    detail::require_proper(I, "is_delta_J_ideal");
    if (I.ring.get() != d.ring.get())
        throw domain_error("is_delta_J_ideal: ideal and expansion live on different rings");
    const IdealLattice& lat = *d.lat;
    int i = lat.find(I);
    return detail::pair_scan(*I.ring, I, lat.at(lat.jacobson_idx).mask, lat.at(d.table[i]).mask);
}

// ab in I and a not in I imply b in delta(I).
inline Verdict is_delta_primary(const Ideal& I, const ExpansionFn& d) {
    detail::require_proper(I, "is_delta_primary");
    if (I.ring.get() != d.ring.get())
        throw domain_error("is_delta_primary: ideal and expansion live on different rings");
    int i = d.lat->find(I);
    return detail::pair_scan(*I.ring, I, I.mask, d.lat->at(d.table[i]).mask);
}

// ab in I implies a in sqrt(0) or b in delta(I).
inline Verdict is_delta_n_ideal(const Ideal& I, const ExpansionFn& d) {
    detail::require_proper(I, "is_delta_n_ideal");
    if (I.ring.get() != d.ring.get())
        throw domain_error("is_delta_n_ideal: ideal and expansion live on different rings");
    const IdealLattice& lat = *d.lat;
    int i = lat.find(I);
    return detail::pair_scan(*I.ring, I, lat.at(lat.rad[lat.zero_idx]).mask,
                             lat.at(d.table[i]).mask);
}

// The three named special cases, phrased directly off the lattice.
inline Verdict is_J_ideal(const IdealLattice& lat, const Ideal& I) {
    detail::require_proper(I, "is_J_ideal");
    return detail::pair_scan(*I.ring, I, lat.at(lat.jacobson_idx).mask, I.mask);
}

inline Verdict is_quasi_J_ideal(const IdealLattice& lat, const Ideal& I) {
    detail::require_proper(I, "is_quasi_J_ideal");
    int i = lat.find(I);
    return detail::pair_scan(*I.ring, I, lat.at(lat.jacobson_idx).mask, lat.at(lat.rad[i]).mask);
}

inline Verdict is_n_ideal(const IdealLattice& lat, const Ideal& I) {
    detail::require_proper(I, "is_n_ideal");
    return detail::pair_scan(*I.ring, I, lat.at(lat.rad[lat.zero_idx]).mask, I.mask);
}

// Classification of one ideal against one expansion.
struct ExpansionProfile {
    std::string delta;
    bool delta_primary = false;
    bool delta_n_ideal = false;
    bool delta_J_ideal = false;
    std::optional<std::pair<int, int>> delta_primary_witness;
    std::optional<std::pair<int, int>> delta_n_ideal_witness;
    std::optional<std::pair<int, int>> delta_J_ideal_witness;
};

// Full classification record for one ideal. Every false flag of a
// pair-quantified class carries the violating pair; false maximal and
// superfluous flags carry a witnessing ideal instead.
struct IdealProfile {
    Ideal ideal;
    bool proper = false;
    bool prime = false;
    bool maximal = false;
    bool primary = false;
    bool superfluous = false;
    bool n_ideal = false;
    bool J_ideal = false;
    bool quasi_J_ideal = false;
    std::optional<std::pair<int, int>> prime_witness;
    std::optional<std::pair<int, int>> primary_witness;
    std::optional<std::pair<int, int>> n_ideal_witness;
    std::optional<std::pair<int, int>> J_ideal_witness;
    std::optional<std::pair<int, int>> quasi_J_ideal_witness;
    std::string maximal_witness;      // proper ideal strictly above, when proper and not maximal
    std::string superfluous_witness;  // proper J with I + J = R, when not superfluous
    std::vector<ExpansionProfile> expansions;
};

inline IdealProfile ideal_profile(const LatticePtr& lat, const Ideal& I,
                                  const std::vector<ExpansionFn>& deltas) {
    IdealProfile p;
    p.ideal = I;
    if (!I.is_proper()) return p;  // unit ideal: proper=false, everything else false
    const FiniteRing& R = *I.ring;
    int i = lat->find(I);
    p.proper = true;
    p.prime = lat->is_prime[i];
    p.maximal = lat->is_maximal[i];
    p.primary = lat->is_primary[i];
    p.superfluous = lat->is_superfluous_f[i];

    if (!p.prime) {
        Verdict v = detail::pair_scan(R, I, I.mask, I.mask);
        p.prime_witness = {{v.a, v.b}};
    }
    if (!p.primary) {
        Verdict v = detail::pair_scan(R, I, I.mask, lat->at(lat->rad[i]).mask);
        p.primary_witness = {{v.a, v.b}};
    }
    if (!p.maximal) {
        for (int j = 0; j < lat->count(); ++j)
            if (j != i && j != lat->unit_idx && lat->subset[i][j]) {
                p.maximal_witness = lat->at(j).display();
                break;
            }
    }
    if (!p.superfluous) {
        for (int j = 0; j < lat->count(); ++j)
            if (j != lat->unit_idx && lat->sum[i][j] == lat->unit_idx) {
                p.superfluous_witness = lat->at(j).display();
                break;
            }
    }

    auto record = [](Verdict v, bool& flag, std::optional<std::pair<int, int>>& w) {
        flag = v.holds;
        if (!v.holds) w = {{v.a, v.b}};
    };
    record(is_n_ideal(*lat, I), p.n_ideal, p.n_ideal_witness);
    record(is_J_ideal(*lat, I), p.J_ideal, p.J_ideal_witness);
    record(is_quasi_J_ideal(*lat, I), p.quasi_J_ideal, p.quasi_J_ideal_witness);

    for (const ExpansionFn& d : deltas) {
        ExpansionProfile ep;
        ep.delta = d.name;
        record(is_delta_primary(I, d), ep.delta_primary, ep.delta_primary_witness);
        record(is_delta_n_ideal(I, d), ep.delta_n_ideal, ep.delta_n_ideal_witness);
        record(is_delta_J_ideal(I, d), ep.delta_J_ideal, ep.delta_J_ideal_witness);
        p.expansions.push_back(std::move(ep));
    }
    return p;
}

inline json witness_json(const FiniteRing& R, const std::pair<int, int>& w) {
    return json::array({R.name(w.first), R.name(w.second)});
}

inline json profile_to_json(const IdealProfile& p) {
    const FiniteRing& R = *p.ideal.ring;
    json j;
    j["ring"] = R.spec;
    j["ideal"] = p.ideal.display();
    j["proper"] = p.proper;
    j["prime"] = p.prime;
    j["maximal"] = p.maximal;
    j["primary"] = p.primary;
    j["superfluous"] = p.superfluous;
    j["n_ideal"] = p.n_ideal;
    j["J_ideal"] = p.J_ideal;
    j["quasi_J_ideal"] = p.quasi_J_ideal;
    json w = json::object();
    if (p.prime_witness) w["prime"] = witness_json(R, *p.prime_witness);
    if (p.primary_witness) w["primary"] = witness_json(R, *p.primary_witness);
    if (!p.maximal_witness.empty()) w["maximal"] = p.maximal_witness;
    if (!p.superfluous_witness.empty()) w["superfluous"] = p.superfluous_witness;
    if (p.n_ideal_witness) w["n_ideal"] = witness_json(R, *p.n_ideal_witness);
    if (p.J_ideal_witness) w["J_ideal"] = witness_json(R, *p.J_ideal_witness);
    if (p.quasi_J_ideal_witness) w["quasi_J_ideal"] = witness_json(R, *p.quasi_J_ideal_witness);
    j["witnesses"] = w;
    json exps = json::array();
    for (const ExpansionProfile& ep : p.expansions) {
        json e;
        e["delta"] = ep.delta;
        e["delta_primary"] = ep.delta_primary;
        e["delta_n_ideal"] = ep.delta_n_ideal;
        e["delta_J_ideal"] = ep.delta_J_ideal;
        json ew = json::object();
        if (ep.delta_primary_witness) ew["delta_primary"] = witness_json(R, *ep.delta_primary_witness);
        if (ep.delta_n_ideal_witness) ew["delta_n_ideal"] = witness_json(R, *ep.delta_n_ideal_witness);
        if (ep.delta_J_ideal_witness) ew["delta_J_ideal"] = witness_json(R, *ep.delta_J_ideal_witness);
        e["witnesses"] = ew;
        exps.push_back(std::move(e));
    }
    j["expansions"] = exps;
    return j;
}

}  // namespace deltaj
