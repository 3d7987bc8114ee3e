#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "deltaj/classify.hpp"
#include "deltaj/corpus.hpp"
#include "deltaj/expansion.hpp"
#include "deltaj/hom.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/idealize.hpp"
#include "deltaj/lattice.hpp"
#include "deltaj/localize.hpp"
#include "deltaj/module.hpp"
#include "deltaj/report.hpp"
#include "deltaj/ring.hpp"

namespace deltaj {

// Three results state a quantifier domain whose literal form contradicts
// their own proofs ("for all x not in R\delta(I)"). By default the repaired
// reading gates (the domain correction for CHK-05, the strengthened colon
// hypothesis for CHK-06/07); `stated` gates the text as printed instead.
// Every evaluated reading is reported either as a full outcome or as a
// one-line digest note.
enum class TypoReading { corrected, stated };

struct CheckOptions {
    TypoReading typo = TypoReading::corrected;
    long stated_cex_cap = 100;  // counterexample cap for non-gating forms (-1: unlimited)
};

namespace detail {

// Per-ring memo of the classification scans. dj(i,t) decides "ab in I_i
// implies a in J(R) or b in I_t"; dp(i,t) the primary analogue with I_i
// itself exempt. Keying by explicit target makes one memo serve every
// expansion, composition, and induced function on the ring.
struct ClassCtx {
    RingPtr ring;
    LatticePtr lat;
    const std::vector<ExpansionFn>* deltas = nullptr;
    std::vector<std::vector<signed char>> dj_memo, dp_memo;
    std::vector<signed char> int_pres;

    ClassCtx(RingPtr r, LatticePtr l, const std::vector<ExpansionFn>* ds = nullptr)
        : ring(std::move(r)), lat(std::move(l)), deltas(ds) {
        int L = lat->count();
        dj_memo.assign(L, std::vector<signed char>(L, -1));
        dp_memo.assign(L, std::vector<signed char>(L, -1));
        if (ds) int_pres.assign(ds->size(), -1);
    }
    explicit ClassCtx(const CorpusRing& cr) : ClassCtx(cr.ring, cr.lat, &cr.deltas) {}

    bool dj(int i, int t) {
        signed char& m = dj_memo[i][t];
        if (m < 0) {
            if (!lat->proper(i)) m = 0;
            else
                m = pair_scan(*ring, lat->at(i), lat->at(lat->jacobson_idx).mask, lat->at(t).mask)
                        .holds
                        ? 1 : 0;
        }
        return m == 1;
    }
    bool dj_of(const ExpansionFn& d, int i) { return dj(i, d.table[i]); }

    bool dp(int i, int t) {
        signed char& m = dp_memo[i][t];
        if (m < 0) {
            if (!lat->proper(i)) m = 0;
            else m = pair_scan(*ring, lat->at(i), lat->at(i).mask, lat->at(t).mask).holds ? 1 : 0;
        }
        return m == 1;
    }

    bool int_preserving(size_t di) {
        signed char& m = int_pres[di];
        if (m < 0) m = is_intersection_preserving((*deltas)[di]).first ? 1 : 0;
        return m == 1;
    }
};

// Counterexample collector with an optional cap (used for the non-gating
// literal readings, which can fail in bulk by design).
struct Sink {
    CheckOutcome out;
    long cap = -1;
    long suppressed = 0;

    explicit Sink(long c = -1) { cap = c; }
    void count(bool hyp) { out.count(hyp); }
    void fail(json j) {
        if (cap >= 0 && static_cast<long>(out.counterexamples.size()) >= cap) {
            out.pass = false;
            ++suppressed;
            return;
        }
        out.fail(std::move(j));
    }
    CheckOutcome take() {
        if (suppressed > 0)
            out.notes.push_back("suppressed " + std::to_string(suppressed) +
                                " further counterexamples");
        out.finish();
        return std::move(out);
    }
};

inline json cex(const CorpusRing& cr) {
    json j;
    j["ring"] = cr.ring->spec;
    return j;
}

// delta_q on R/J rebuilt against a caller-owned quotient (the one-shot
// induce_quotient would re-derive ring and lattice per expansion).
inline ExpansionFn quotient_induced(const ExpansionFn& d, const RingHom& pi,
                                    const LatticePtr& ql) {
    const IdealLattice& sl = *d.lat;
    std::vector<int> t(ql->count());
    for (int w = 0; w < ql->count(); ++w) {
        int k = sl.find(hom_preimage(pi, ql->at(w)));
        t[w] = ql->find(hom_image(pi, sl.at(d.table[k])));
    }
    return make_table_expansion(pi.target, ql, std::move(t), d.name + "_q");
}

inline std::string submodule_label(const FiniteModule& M, const std::vector<int>& N) {
    std::string s = "{";
    for (size_t k = 0; k < N.size(); ++k) {
        if (k) s += ",";
        s += M.name(N[k]);
    }
    return s + "}";
}

// Multiplicative sets exercised per ring: the power closure of every
// element (when it avoids 0) and the complement of every prime ideal,
// deduplicated and ordered by (size, members).
inline std::vector<MultiplicativeSet> corpus_mult_sets(const RingPtr& R, const IdealLattice& lat) {
    std::map<std::vector<int>, MultiplicativeSet> found;
    for (int u = 0; u < R->order; ++u) {
        if (u == R->zero) continue;
        if (auto s = mult_closure(R, {u})) found.emplace(s->members, *s);
    }
    for (int p = 0; p < lat.count(); ++p)
        if (lat.is_prime[p]) {
            std::vector<int> comp;
            for (int a = 0; a < R->order; ++a)
                if (!lat.at(p).mask[a]) comp.push_back(a);
            found.emplace(comp, make_mult_set(R, comp));
        }
    std::vector<MultiplicativeSet> out;
    for (auto& [members, s] : found) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const MultiplicativeSet& a, const MultiplicativeSet& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

// ---- CHK-01: three formulations of the defining implication agree ----
inline CheckReport chk01(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-01";
    Sink s;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        const FiniteRing& R = *cr.ring;
        const int L = lat.count();
        // aK is an ideal: precompute its lattice index per (a, K)
        std::vector<std::vector<int>> aK(R.order, std::vector<int>(L));
        for (int a = 0; a < R.order; ++a)
            for (int k = 0; k < L; ++k) {
                std::vector<char> m(R.order, 0);
                for (int x : lat.at(k).members) m[R.mul(a, x)] = 1;
                aK[a][k] = lat.find(ideal_from_mask(cr.ring, std::move(m)));
            }
        for (const ExpansionFn& d : cr.deltas)
            for (int i = 0; i < L; ++i) {
                if (!lat.proper(i)) continue;
                s.count(true);
                int t = d.table[i];
                bool f1 = ctx.dj(i, t);
                bool f2 = true;
                for (int a = 0; a < R.order && f2; ++a) {
                    if (lat.at(lat.jacobson_idx).mask[a]) continue;
                    for (int k = 0; k < L; ++k)
                        if (lat.subset[aK[a][k]][i] && !lat.subset[k][t]) { f2 = false; break; }
                }
                bool f3 = true;
                for (int k = 0; k < L && f3; ++k) {
                    if (lat.subset[k][lat.jacobson_idx]) continue;
                    for (int l = 0; l < L; ++l)
                        if (lat.subset[lat.prod[k][l]][i] && !lat.subset[l][t]) { f3 = false; break; }
                }
                if (f1 != f2 || f2 != f3) {
                    json j = cex(cr);
                    j["ideal"] = lat.at(i).display();
                    j["delta"] = d.name;
                    j["elementwise"] = f1;
                    j["element_ideal"] = f2;
                    j["ideal_ideal"] = f3;
                    s.fail(std::move(j));
                }
            }
    }
    rep.parts.push_back({"CHK-01",
                         "the element, element-ideal, and ideal-ideal formulations of the "
                         "delta-J condition agree on every (ideal, expansion) instance",
                         s.take(), std::nullopt});
    return rep;
}

// ---- CHK-02: when delta(I) != R, delta-J  <=>  I inside J(R) and the
// implication with J(I) exempt ----
inline CheckReport chk02(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-02";
    Sink s;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        for (const ExpansionFn& d : cr.deltas)
            for (int i = 0; i < lat.count(); ++i) {
                if (!lat.proper(i)) continue;
                bool hyp = d.table[i] != lat.unit_idx;
                s.count(hyp);
                if (!hyp) continue;
                bool f1 = ctx.dj_of(d, i);
                bool f2 = lat.subset[i][lat.jacobson_idx] &&
                          pair_scan(*cr.ring, lat.at(i), lat.at(lat.j_of[i]).mask,
                                    lat.at(d.table[i]).mask)
                              .holds;
                if (f1 != f2) {
                    json j = cex(cr);
                    j["ideal"] = lat.at(i).display();
                    j["delta"] = d.name;
                    j["delta_J_ideal"] = f1;
                    j["contained_with_J_of_I_exempt"] = f2;
                    s.fail(std::move(j));
                }
            }
    }
    CheckOutcome o = s.take();
    o.notes.push_back(
        "J(I) read as the intersection of the maximal ideals containing I");
    rep.parts.push_back(
        {"CHK-02",
         "for delta(I) != R: I is delta-J iff I lies in J(R) and ab in I forces a in J(I) "
         "or b in delta(I)",
         std::move(o), std::nullopt});
    return rep;
}

// ---- CHK-03: rings where delta(I) != R for every proper I: quasi-local
// <=> every proper principal ideal delta-J <=> every proper ideal delta-J ----
inline CheckReport chk03(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-03";
    Sink s;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        for (const ExpansionFn& d : cr.deltas) {
            bool hyp = true;
            for (int i = 0; i < lat.count() && hyp; ++i)
                if (lat.proper(i) && d.table[i] == lat.unit_idx) hyp = false;
            s.count(hyp);
            if (!hyp) continue;
            bool f1 = lat.quasi_local;
            bool f2 = true, f3 = true;
            for (int i = 0; i < lat.count(); ++i) {
                if (!lat.proper(i)) continue;
                bool isdj = ctx.dj_of(d, i);
                if (!isdj) {
                    f3 = false;
                    if (lat.is_principal[i]) f2 = false;
                }
            }
            if (f1 != f2 || f2 != f3) {
                json j = cex(cr);
                j["delta"] = d.name;
                j["quasi_local"] = f1;
                j["principal_ideals_delta_J"] = f2;
                j["all_ideals_delta_J"] = f3;
                s.fail(std::move(j));
            }
        }
    }
    rep.parts.push_back({"CHK-03",
                         "when delta never expands a proper ideal to R: quasi-local with maximal "
                         "ideal J(R) <=> all proper principal ideals delta-J <=> all proper "
                         "ideals delta-J",
                         s.take(), std::nullopt});
    return rep;
}

// ---- CHK-04: delta-primary and maximal special cases ----
inline CheckReport chk04(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-04";
    Sink s1, s2;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        for (const ExpansionFn& d : cr.deltas)
            for (int i = 0; i < lat.count(); ++i) {
                if (!lat.proper(i)) continue;
                int t = d.table[i];
                bool ne = t != lat.unit_idx;
                bool hyp1 = ne && ctx.dp(i, t);
                s1.count(hyp1);
                if (hyp1 && ctx.dj(i, t) != static_cast<bool>(lat.subset[i][lat.jacobson_idx])) {
                    json j = cex(cr);
                    j["ideal"] = lat.at(i).display();
                    j["delta"] = d.name;
                    j["delta_J_ideal"] = ctx.dj(i, t);
                    j["inside_jacobson"] = static_cast<bool>(lat.subset[i][lat.jacobson_idx]);
                    s1.fail(std::move(j));
                }
                bool hyp2 = ne && lat.is_maximal[i];
                s2.count(hyp2);
                if (hyp2 && ctx.dj(i, t) != (i == lat.jacobson_idx)) {
                    json j = cex(cr);
                    j["ideal"] = lat.at(i).display();
                    j["delta"] = d.name;
                    j["delta_J_ideal"] = ctx.dj(i, t);
                    j["equals_jacobson"] = (i == lat.jacobson_idx);
                    s2.fail(std::move(j));
                }
            }
    }
    rep.parts.push_back({"CHK-04(1)",
                         "a delta-primary ideal with delta(I) != R is delta-J iff it lies in J(R)",
                         s1.take(), std::nullopt});
    rep.parts.push_back({"CHK-04(2)",
                         "a maximal ideal with delta(I) != R is delta-J iff it equals J(R)",
                         s2.take(), std::nullopt});
    return rep;
}

// ---- CHK-05: colon stability ((delta(I):x) inside delta((I:x)) != R)
// transfers delta-J from I to (I:x). Corrected domain: x outside delta(I);
// literal domain: x inside delta(I). ----
inline CheckReport chk05(const Corpus& corpus, const CheckOptions& opt) {
    CheckReport rep;
    rep.id = "CHK-05";
    bool gate_corrected = opt.typo == TypoReading::corrected;
    Sink corr(gate_corrected ? -1 : opt.stated_cex_cap);
    Sink lit(gate_corrected ? opt.stated_cex_cap : -1);
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        for (const ExpansionFn& d : cr.deltas)
            for (int i = 0; i < lat.count(); ++i) {
                if (!lat.proper(i)) continue;
                int t = d.table[i];
                bool isdj = ctx.dj(i, t);
                const std::vector<char>& dmask = lat.at(t).mask;
                for (int x = 0; x < cr.ring->order; ++x) {
                    int px = lat.principal_of[x];
                    int ci = lat.colon[i][px];   // (I : x)
                    int cd = lat.colon[t][px];   // (delta(I) : x)
                    bool colon_ok =
                        lat.subset[cd][d.table[ci]] && d.table[ci] != lat.unit_idx;
                    bool concl = ctx.dj(ci, d.table[ci]);
                    auto run = [&](Sink& s, bool in_domain) {
                        bool hyp = isdj && in_domain && colon_ok;
                        s.count(hyp);
                        if (hyp && !concl) {
                            json j = cex(cr);
                            j["ideal"] = lat.at(i).display();
                            j["delta"] = d.name;
                            j["x"] = cr.ring->name(x);
                            j["colon_ideal"] = lat.at(ci).display();
                            s.fail(std::move(j));
                        }
                    };
                    run(corr, !dmask[x]);
                    run(lit, dmask[x] != 0);
                }
            }
    }
    CheckOutcome co = corr.take(), lo = lit.take();
    co.notes.push_back("reading: corrected (x ranges over R \\ delta(I))");
    lo.notes.push_back("reading: literal (x ranges over delta(I))");
    CheckPart p;
    p.id = "CHK-05";
    p.what =
        "if I is delta-J and (delta(I):x) lies in delta((I:x)) != R, then (I:x) is delta-J";
    p.gating = gate_corrected ? std::move(co) : std::move(lo);
    p.stated = gate_corrected ? std::move(lo) : std::move(co);
    rep.parts.push_back(std::move(p));
    return rep;
}

// One-line digest of a non-gating reading, attached as a note so the third
// form stays visible without a third outcome slot.
inline std::string reading_digest(const std::string& label, const Sink& s) {
    std::string t = label + ": ";
    if (s.out.tested == 0) t += "vacuous";
    else t += s.out.pass ? "pass" : "fail";
    t += ", tested " + std::to_string(s.out.tested);
    long long nc = static_cast<long long>(s.out.counterexamples.size()) + s.suppressed;
    if (nc > 0) t += ", counterexamples " + std::to_string(nc);
    return t;
}

// ---- CHK-06: a maximal element of the delta-J poset with a colon-stable
// expansion is a J-ideal ----
//
// Three readings of the colon hypothesis are evaluated. The result as
// written restricts x to delta(I) union J(R); the domain-corrected form
// flips that to its complement. Both are refuted on rings where delta(I)=R
// for the maximal delta-J-ideal I (the corrected domain is then empty, the
// literal containment trivial, yet I need not be a J-ideal). The argument
// actually needs, at every x outside J(R), both the containment
// (delta(I):x) <= delta((I:x)) and that delta((I:x)) stays proper -- that
// strengthened reading gates by default.
inline CheckReport chk06(const Corpus& corpus, const CheckOptions& opt) {
    CheckReport rep;
    rep.id = "CHK-06";
    bool gate_strong = opt.typo == TypoReading::corrected;
    Sink strong(gate_strong ? -1 : opt.stated_cex_cap);
    Sink corr(opt.stated_cex_cap);
    Sink lit(gate_strong ? opt.stated_cex_cap : -1);
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        const std::vector<char>& jmask = lat.at(lat.jacobson_idx).mask;
        for (const ExpansionFn& d : cr.deltas)
            for (int i = 0; i < lat.count(); ++i) {
                if (!lat.proper(i)) continue;
                int t = d.table[i];
                bool max_dj = ctx.dj(i, t);
                for (int j = 0; j < lat.count() && max_dj; ++j)
                    if (j != i && lat.proper(j) && lat.subset[i][j] && ctx.dj_of(d, j))
                        max_dj = false;
                const std::vector<char>& dmask = lat.at(t).mask;
                auto colon_ok = [&](int x, bool want_proper) {
                    int px = lat.principal_of[x];
                    int dcx = d.table[lat.colon[i][px]];
                    if (!lat.subset[lat.colon[t][px]][dcx]) return false;
                    return !want_proper || dcx != lat.unit_idx;
                };
                auto strong_all = [&] {
                    for (int x = 0; x < cr.ring->order; ++x)
                        if (!jmask[x] && !colon_ok(x, true)) return false;
                    return true;
                };
                auto domain_all = [&](bool inside_domain) {
                    for (int x = 0; x < cr.ring->order; ++x) {
                        bool inside = dmask[x] || jmask[x];
                        if (inside != inside_domain) continue;
                        if (!colon_ok(x, false)) return false;
                    }
                    return true;
                };
                bool concl = ctx.dj(i, i);
                auto run = [&](Sink& s, bool hyp) {
                    s.count(hyp);
                    if (hyp && !concl) {
                        json j = cex(cr);
                        j["ideal"] = lat.at(i).display();
                        j["delta"] = d.name;
                        s.fail(std::move(j));
                    }
                };
                run(strong, max_dj && strong_all());
                run(corr, max_dj && domain_all(false));
                run(lit, max_dj && domain_all(true));
            }
    }
    std::string strong_digest = reading_digest("strengthened reading", strong);
    std::string lit_digest = reading_digest("literal reading", lit);
    CheckOutcome so = strong.take(), co = corr.take(), lo = lit.take();
    so.notes.push_back(
        "reading: strengthened (containment plus delta((I:x)) proper, every x outside J(R))");
    co.notes.push_back(
        "reading: domain-corrected (containment only, x over R \\ (delta(I) union J(R)))");
    lo.notes.push_back("reading: literal (containment only, x over delta(I) union J(R))");
    CheckPart p;
    p.id = "CHK-06";
    p.what = "a maximal delta-J-ideal with a colon-stable expansion is a J-ideal";
    if (gate_strong) {
        so.notes.push_back(lit_digest);
        p.gating = std::move(so);
    } else {
        lo.notes.push_back(strong_digest);
        p.gating = std::move(lo);
    }
    p.stated = std::move(co);
    rep.parts.push_back(std::move(p));
    return rep;
}

// ---- CHK-07: when delta keeps every proper ideal proper and is
// colon-stable, J(R) J-ideal <=> J(R) delta-J <=> J(R) prime ----
//
// Same three colon readings as CHK-06. Here the blanket "delta(I) != R for
// every proper I" hypothesis makes delta((I:x)) automatically proper at the
// x the argument touches, so the strengthened reading only widens the
// quantifier domain to every x outside J(R).
inline CheckReport chk07(const Corpus& corpus, const CheckOptions& opt) {
    CheckReport rep;
    rep.id = "CHK-07";
    bool gate_strong = opt.typo == TypoReading::corrected;
    Sink strong(gate_strong ? -1 : opt.stated_cex_cap);
    Sink corr(opt.stated_cex_cap);
    Sink lit(gate_strong ? opt.stated_cex_cap : -1);
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        int jac = lat.jacobson_idx;
        const std::vector<char>& jmask = lat.at(jac).mask;
        for (const ExpansionFn& d : cr.deltas) {
            bool never_unit = true;
            for (int i = 0; i < lat.count() && never_unit; ++i)
                if (lat.proper(i) && d.table[i] == lat.unit_idx) never_unit = false;
            // 0: every x outside J(R); 1: x outside delta(I) union J(R);
            // 2: x inside delta(I) union J(R)
            auto colon_all = [&](int mode) {
                if (!never_unit) return false;
                for (int i = 0; i < lat.count(); ++i) {
                    if (!lat.proper(i)) continue;
                    int t = d.table[i];
                    const std::vector<char>& dmask = lat.at(t).mask;
                    for (int x = 0; x < cr.ring->order; ++x) {
                        bool inside = dmask[x] || jmask[x];
                        if (mode == 0 ? jmask[x] : (mode == 1) == inside) continue;
                        int px = lat.principal_of[x];
                        if (!lat.subset[lat.colon[t][px]][d.table[lat.colon[i][px]]]) return false;
                    }
                }
                return true;
            };
            bool f1 = ctx.dj(jac, jac);
            bool f2 = ctx.dj_of(d, jac);
            bool f3 = lat.is_prime[jac];
            auto run = [&](Sink& s, bool hyp) {
                s.count(hyp);
                if (hyp && (f1 != f2 || f2 != f3)) {
                    json j = cex(cr);
                    j["delta"] = d.name;
                    j["jacobson_J_ideal"] = f1;
                    j["jacobson_delta_J_ideal"] = f2;
                    j["jacobson_prime"] = f3;
                    s.fail(std::move(j));
                }
            };
            run(strong, never_unit && colon_all(0));
            run(corr, never_unit && colon_all(1));
            run(lit, never_unit && colon_all(2));
        }
    }
    std::string strong_digest = reading_digest("strengthened reading", strong);
    std::string lit_digest = reading_digest("literal reading", lit);
    CheckOutcome so = strong.take(), co = corr.take(), lo = lit.take();
    so.notes.push_back("reading: strengthened (containment for every x outside J(R))");
    co.notes.push_back(
        "reading: domain-corrected (containment for x over R \\ (delta(I) union J(R)))");
    lo.notes.push_back("reading: literal (containment for x over delta(I) union J(R))");
    CheckPart p;
    p.id = "CHK-07";
    p.what =
        "when delta never expands proper ideals to R and colon stability holds: J(R) J-ideal "
        "<=> J(R) delta-J-ideal <=> J(R) prime";
    if (gate_strong) {
        so.notes.push_back(lit_digest);
        p.gating = std::move(so);
    } else {
        lo.notes.push_back(strong_digest);
        p.gating = std::move(lo);
    }
    p.stated = std::move(co);
    rep.parts.push_back(std::move(p));
    return rep;
}

// ---- CHK-08: consequences of idempotence delta(delta(I)) = delta(I) ----
inline CheckReport chk08(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-08";
    Sink s1, s2, s3, s4;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        const int L = lat.count();
        for (const ExpansionFn& d : cr.deltas) {
            auto idem = [&](int i) { return d.table[d.table[i]] == d.table[i]; };
            for (int i = 0; i < L; ++i) {
                if (!lat.proper(i)) continue;
                bool base = idem(i) && ctx.dj_of(d, i);
                // (1) delta((I:a)) = delta(I) for a outside J(R)
                for (int a = 0; a < cr.ring->order; ++a) {
                    bool hyp = base && !lat.at(lat.jacobson_idx).mask[a];
                    s1.count(hyp);
                    if (hyp) {
                        int ca = lat.colon[i][lat.principal_of[a]];
                        if (d.table[ca] != d.table[i]) {
                            json j = cex(cr);
                            j["ideal"] = lat.at(i).display();
                            j["delta"] = d.name;
                            j["a"] = cr.ring->name(a);
                            j["delta_of_colon"] = lat.at(d.table[ca]).display();
                            j["delta_of_ideal"] = lat.at(d.table[i]).display();
                            s1.fail(std::move(j));
                        }
                    }
                }
                // (2) delta(I) J-ideal <=> delta(I) delta-J-ideal
                {
                    bool hyp = idem(i);
                    s2.count(hyp);
                    int t = d.table[i];
                    if (hyp && ctx.dj(t, t) != ctx.dj(t, d.table[t])) {
                        json j = cex(cr);
                        j["ideal"] = lat.at(i).display();
                        j["delta"] = d.name;
                        j["expansion_J_ideal"] = ctx.dj(t, t);
                        j["expansion_delta_J_ideal"] = ctx.dj(t, d.table[t]);
                        s2.fail(std::move(j));
                    }
                }
                // (3) IK = JK with K not inside J(R) forces delta(I) = delta(J)
                for (int jj = 0; jj < L; ++jj) {
                    if (!lat.proper(jj)) continue;
                    bool pre =
                        base && idem(jj) && ctx.dj_of(d, jj);
                    for (int k = 0; k < L; ++k) {
                        bool hyp = pre && lat.prod[i][k] == lat.prod[jj][k] &&
                                   !lat.subset[k][lat.jacobson_idx];
                        s3.count(hyp);
                        if (hyp && d.table[i] != d.table[jj]) {
                            json j = cex(cr);
                            j["ideal_I"] = lat.at(i).display();
                            j["ideal_J"] = lat.at(jj).display();
                            j["ideal_K"] = lat.at(k).display();
                            j["delta"] = d.name;
                            s3.fail(std::move(j));
                        }
                    }
                }
                // (4) IK and I delta-J with idempotence at IK forces delta(IK) = delta(I)
                for (int k = 0; k < L; ++k) {
                    int ik = lat.prod[i][k];
                    bool hyp = idem(i) && ctx.dj_of(d, i) && ctx.dj_of(d, ik) && idem(ik) &&
                               !lat.subset[k][lat.jacobson_idx];
                    s4.count(hyp);
                    if (hyp && d.table[ik] != d.table[i]) {
                        json j = cex(cr);
                        j["ideal_I"] = lat.at(i).display();
                        j["ideal_K"] = lat.at(k).display();
                        j["delta"] = d.name;
                        s4.fail(std::move(j));
                    }
                }
            }
        }
    }
    rep.parts.push_back({"CHK-08(1)",
                         "idempotent delta at a delta-J-ideal I: delta((I:a)) = delta(I) for "
                         "every a outside J(R)",
                         s1.take(), std::nullopt});
    rep.parts.push_back({"CHK-08(2)",
                         "idempotent delta at I: delta(I) is a J-ideal iff it is a delta-J-ideal",
                         s2.take(), std::nullopt});
    rep.parts.push_back({"CHK-08(3)",
                         "IK = JK with K outside J(R), both delta-J with idempotence: delta(I) = "
                         "delta(J)",
                         s3.take(), std::nullopt});
    rep.parts.push_back({"CHK-08(4)",
                         "IK and I delta-J with idempotence at IK and K outside J(R): delta(IK) "
                         "= delta(I)",
                         s4.take(), std::nullopt});
    return rep;
}

// ---- CHK-09: transfer along expansion comparisons and composition ----
inline CheckReport chk09(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-09";
    Sink s1, s1c, s2, s3;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        const int L = lat.count();
        const size_t D = cr.deltas.size();
        // pointwise comparison of expansion tables
        std::vector<std::vector<char>> ple(D, std::vector<char>(D, 1));
        for (size_t a = 0; a < D; ++a)
            for (size_t b = 0; b < D; ++b)
                for (int i = 0; i < L; ++i)
                    if (!lat.subset[cr.deltas[a].table[i]][cr.deltas[b].table[i]]) {
                        ple[a][b] = 0;
                        break;
                    }
        for (int i = 0; i < L; ++i) {
            if (!lat.proper(i)) continue;
            // (1) forward: delta(I) J-ideal => I delta-J
            for (const ExpansionFn& d : cr.deltas) {
                int t = d.table[i];
                bool hyp = ctx.dj(t, t);
                s1.count(hyp);
                if (hyp && !ctx.dj(i, t)) {
                    json j = cex(cr);
                    j["ideal"] = lat.at(i).display();
                    j["delta"] = d.name;
                    s1.fail(std::move(j));
                }
            }
            // (1) converse for the radical expansion
            {
                bool hyp = ctx.dj(i, lat.rad[i]);
                s1c.count(hyp);
                if (hyp && !ctx.dj(lat.rad[i], lat.rad[i])) {
                    json j = cex(cr);
                    j["ideal"] = lat.at(i).display();
                    s1c.fail(std::move(j));
                }
            }
            for (size_t a = 0; a < D; ++a)
                for (size_t b = 0; b < D; ++b) {
                    const ExpansionFn& d = cr.deltas[a];
                    const ExpansionFn& g = cr.deltas[b];
                    // (2) pointwise delta <= gamma transfers delta-J to gamma-J
                    bool hyp2 = ple[a][b] && ctx.dj_of(d, i);
                    s2.count(hyp2);
                    if (hyp2 && !ctx.dj_of(g, i)) {
                        json j = cex(cr);
                        j["ideal"] = lat.at(i).display();
                        j["delta"] = d.name;
                        j["gamma"] = g.name;
                        s2.fail(std::move(j));
                    }
                    // (3) gamma(I) delta-J => I (delta o gamma)-J
                    int gi = g.table[i];
                    bool hyp3 = lat.proper(gi) && ctx.dj(gi, d.table[gi]);
                    s3.count(hyp3);
                    if (hyp3 && !ctx.dj(i, d.table[gi])) {
                        json j = cex(cr);
                        j["ideal"] = lat.at(i).display();
                        j["delta"] = d.name;
                        j["gamma"] = g.name;
                        s3.fail(std::move(j));
                    }
                }
        }
    }
    rep.parts.push_back({"CHK-09(1)", "if delta(I) is a J-ideal then I is a delta-J-ideal",
                         s1.take(), std::nullopt});
    rep.parts.push_back({"CHK-09(1-converse)",
                         "for the radical expansion: a quasi-J-ideal has a J-ideal radical",
                         s1c.take(), std::nullopt});
    rep.parts.push_back({"CHK-09(2)",
                         "pointwise delta <= gamma: every delta-J-ideal is a gamma-J-ideal",
                         s2.take(), std::nullopt});
    rep.parts.push_back({"CHK-09(3)",
                         "if gamma(I) is a delta-J-ideal then I is a (delta o gamma)-J-ideal",
                         s3.take(), std::nullopt});
    return rep;
}

// ---- CHK-10: sandwich transfer J inside K inside I with delta(J) = delta(I) ----
inline CheckReport chk10(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-10";
    Sink s;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        const int L = lat.count();
        for (const ExpansionFn& d : cr.deltas)
            for (int i = 0; i < L; ++i) {
                if (!lat.proper(i)) continue;
                bool base = ctx.dj_of(d, i);
                for (int j = 0; j < L; ++j) {
                    if (!lat.proper(j) || !lat.subset[j][i]) continue;
                    bool mid = base && d.table[j] == d.table[i];
                    for (int k = 0; k < L; ++k) {
                        bool hyp = mid && lat.proper(k) && lat.subset[j][k] && lat.subset[k][i];
                        s.count(hyp);
                        if (hyp && !ctx.dj_of(d, k)) {
                            json jj = cex(cr);
                            jj["ideal_I"] = lat.at(i).display();
                            jj["ideal_J"] = lat.at(j).display();
                            jj["ideal_K"] = lat.at(k).display();
                            jj["delta"] = d.name;
                            s.fail(std::move(jj));
                        }
                    }
                }
            }
    }
    rep.parts.push_back({"CHK-10",
                         "J inside K inside I with I delta-J and delta(J) = delta(I) makes K "
                         "delta-J",
                         s.take(), std::nullopt});
    return rep;
}

// ---- CHK-11: intersections under an intersection-preserving expansion ----
inline CheckReport chk11(const Corpus& corpus, const CheckOptions& opt) {
    CheckReport rep;
    rep.id = "CHK-11";
    Sink s1;
    Sink gat, lit(opt.stated_cex_cap);
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        const int L = lat.count();
        // families of 2 or 3 distinct proper ideals, canonically ordered
        std::vector<std::vector<int>> fams;
        for (int i = 0; i < L; ++i) {
            if (!lat.proper(i)) continue;
            for (int j = i + 1; j < L; ++j) {
                if (!lat.proper(j)) continue;
                fams.push_back({i, j});
                for (int k = j + 1; k < L; ++k)
                    if (lat.proper(k)) fams.push_back({i, j, k});
            }
        }
        for (size_t di = 0; di < cr.deltas.size(); ++di) {
            const ExpansionFn& d = cr.deltas[di];
            bool ip = ctx.int_preserving(di);
            for (const std::vector<int>& fam : fams) {
                int meet = fam[0];
                for (size_t k = 1; k < fam.size(); ++k) meet = lat.meet[meet][fam[k]];
                auto fam_json = [&]() {
                    json arr = json::array();
                    for (int f : fam) arr.push_back(lat.at(f).display());
                    return arr;
                };
                // (1) intersection of delta-J-ideals is delta-J
                {
                    bool hyp = ip;
                    for (size_t k = 0; k < fam.size() && hyp; ++k)
                        if (!ctx.dj_of(d, fam[k])) hyp = false;
                    s1.count(hyp);
                    if (hyp && !ctx.dj_of(d, meet)) {
                        json j = cex(cr);
                        j["ideals"] = fam_json();
                        j["delta"] = d.name;
                        s1.fail(std::move(j));
                    }
                }
                // (2) converse when the delta(I_i) are pairwise non-comparable primes
                {
                    bool pre = ip && ctx.dj_of(d, meet);
                    for (size_t a = 0; a < fam.size() && pre; ++a) {
                        int ta = d.table[fam[a]];
                        if (!lat.is_prime[ta]) pre = false;
                        for (size_t b = a + 1; b < fam.size() && pre; ++b) {
                            int tb = d.table[fam[b]];
                            if (lat.subset[ta][tb] || lat.subset[tb][ta]) pre = false;
                        }
                    }
                    bool choice_ok = pre;
                    for (size_t k = 0; k < fam.size() && choice_ok; ++k) {
                        int rest = -1;
                        for (size_t a = 0; a < fam.size(); ++a) {
                            if (a == k) continue;
                            rest = rest < 0 ? fam[a] : lat.prod[rest][fam[a]];
                        }
                        if (lat.subset[rest][d.table[fam[k]]]) choice_ok = false;
                    }
                    auto run = [&](Sink& s, bool need_choice) {
                        bool hyp = pre && (!need_choice || choice_ok);
                        s.count(hyp);
                        if (!hyp) return;
                        for (size_t k = 0; k < fam.size(); ++k)
                            if (!ctx.dj_of(d, fam[k])) {
                                json j = cex(cr);
                                j["ideals"] = fam_json();
                                j["delta"] = d.name;
                                j["failing_ideal"] = lat.at(fam[k]).display();
                                s.fail(std::move(j));
                                return;
                            }
                    };
                    run(gat, true);
                    run(lit, false);
                }
            }
        }
    }
    rep.parts.push_back({"CHK-11(1)",
                         "intersection-preserving delta: finite intersections of delta-J-ideals "
                         "are delta-J",
                         s1.take(), std::nullopt});
    CheckOutcome go = gat.take(), lo = lit.take();
    go.notes.push_back(
        "strengthened: requires each choice set (product of the others) \\ delta(I_k) nonempty");
    lo.notes.push_back("stated: no nonempty-choice-set requirement");
    if (go.vacuous && lo.vacuous) {
        // a delta-J-ideal with proper delta(K) exists only in quasi-local
        // finite rings, whose proper primes form a chain of length one
        const char* why =
            "hypothesis unsatisfiable over finite rings: a delta-J-ideal with proper "
            "expansion forces a quasi-local ring, which has no two non-comparable primes";
        go.notes.push_back(why);
        lo.notes.push_back(why);
    }
    rep.parts.push_back({"CHK-11(2)",
                         "non-comparable-prime expansions: the factors of a delta-J intersection "
                         "are delta-J",
                         std::move(go), std::move(lo)});
    return rep;
}

// ---- CHK-12: transfer along delta-gamma homomorphisms ----
inline CheckReport chk12(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-12";
    Sink s1, s2;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx src(cr);
        const IdealLattice& lat = *cr.lat;
        const FiniteRing& R = *cr.ring;

        auto process = [&](const RingHom& f, ClassCtx& sctx, ClassCtx& tctx,
                           const std::vector<ExpansionFn>& ds,
                           const std::vector<ExpansionFn>& gs) {
            const IdealLattice& sl = *sctx.lat;
            const IdealLattice& tl = *tctx.lat;
            bool mono = f.is_injective();
            bool epi = f.is_surjective();
            std::vector<int> pre(tl.count());
            for (int w = 0; w < tl.count(); ++w) pre[w] = sl.find(hom_preimage(f, tl.at(w)));
            std::vector<int> img;
            int ker_idx = sl.find(kernel(f));
            if (epi) {
                img.resize(sl.count());
                for (int i = 0; i < sl.count(); ++i) img[i] = tl.find(hom_image(f, sl.at(i)));
            }
            for (const ExpansionFn& d : ds)
                for (const ExpansionFn& g : gs) {
                    bool dg = is_delta_gamma_hom(f, d, g).first;
                    if (mono)
                        for (int w = 0; w < tl.count(); ++w) {
                            if (!tl.proper(w)) continue;
                            bool hyp = dg && tctx.dj_of(g, w);
                            s1.count(hyp);
                            if (hyp && !sctx.dj_of(d, pre[w])) {
                                json j = cex(cr);
                                j["map"] = f.source->spec + " -> " + f.target->spec;
                                j["target_ideal"] = tl.at(w).display();
                                j["delta"] = d.name;
                                j["gamma"] = g.name;
                                s1.fail(std::move(j));
                            }
                        }
                    if (epi)
                        for (int i = 0; i < sl.count(); ++i) {
                            if (!sl.proper(i)) continue;
                            bool hyp = dg && sl.subset[ker_idx][i] && sctx.dj_of(d, i);
                            s2.count(hyp);
                            if (hyp && !tctx.dj_of(g, img[i])) {
                                json j = cex(cr);
                                j["map"] = f.source->spec + " -> " + f.target->spec;
                                j["ideal"] = sl.at(i).display();
                                j["delta"] = d.name;
                                j["gamma"] = g.name;
                                s2.fail(std::move(j));
                            }
                        }
                }
        };

        {
            std::vector<int> idmap(R.order);
            std::iota(idmap.begin(), idmap.end(), 0);
            RingHom id = make_hom(cr.ring, cr.ring, std::move(idmap));
            process(id, src, src, cr.deltas, cr.deltas);
        }
        for (int j = 0; j < lat.count(); ++j) {
            if (!lat.proper(j)) continue;
            auto [Q, pi] = quotient_ring(cr.ring, lat.at(j));
            LatticePtr ql = all_ideals(Q);
            ClassCtx tctx(Q, ql);
            std::vector<ExpansionFn> gammas = registered_expansions(Q, ql);
            for (const ExpansionFn& d : cr.deltas)
                gammas.push_back(quotient_induced(d, pi, ql));
            process(pi, src, tctx, cr.deltas, gammas);
        }
        if (R.order <= 16) {
            std::vector<char> full(R.order, 1);
            for (const std::vector<char>& mask : unital_subring_masks(cr.ring)) {
                if (mask == full) continue;  // identity case already covered
                auto [S, incl] = make_subring(cr.ring, mask);
                LatticePtr sl = all_ideals(S);
                ClassCtx sctx(S, sl);
                std::vector<ExpansionFn> ds = registered_expansions(S, sl);
                process(incl, sctx, src, ds, cr.deltas);
            }
        }
    }
    rep.parts.push_back({"CHK-12(1)",
                         "monomorphic delta-gamma maps pull gamma-J-ideals back to "
                         "delta-J-ideals",
                         s1.take(), std::nullopt});
    rep.parts.push_back({"CHK-12(2)",
                         "epimorphic delta-gamma maps push delta-J-ideals containing the kernel "
                         "to gamma-J-ideals",
                         s2.take(), std::nullopt});
    return rep;
}

// ---- CHK-13: quotient transfer and the subring intersection ----
inline CheckReport chk13(const Corpus& corpus, const CheckOptions& opt) {
    CheckReport rep;
    rep.id = "CHK-13";
    Sink s1, s2, s3;
    Sink gat4, lit4(opt.stated_cex_cap);
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        for (int j = 0; j < lat.count(); ++j) {
            if (!lat.proper(j)) continue;
            auto [Q, pi] = quotient_ring(cr.ring, lat.at(j));
            LatticePtr ql = all_ideals(Q);
            ClassCtx qctx(Q, ql);
            std::vector<int> img(lat.count(), -1);
            for (int i = 0; i < lat.count(); ++i)
                if (lat.subset[j][i]) img[i] = ql->find(hom_image(pi, lat.at(i)));
            for (const ExpansionFn& d : cr.deltas) {
                ExpansionFn dq = quotient_induced(d, pi, ql);
                for (int i = 0; i < lat.count(); ++i) {
                    if (!lat.proper(i) || !lat.subset[j][i]) continue;
                    bool f_r = ctx.dj_of(d, i);
                    bool f_q = qctx.dj_of(dq, img[i]);
                    auto jrec = [&]() {
                        json jj = cex(cr);
                        jj["quotient_by"] = lat.at(j).display();
                        jj["ideal"] = lat.at(i).display();
                        jj["delta"] = d.name;
                        return jj;
                    };
                    s1.count(f_r);
                    if (f_r && !f_q) s1.fail(jrec());
                    bool hyp2 = f_q && lat.subset[j][lat.jacobson_idx];
                    s2.count(hyp2);
                    if (hyp2 && !f_r) s2.fail(jrec());
                    bool hyp3 = f_q && ctx.dj_of(d, j) && d.table[j] != lat.unit_idx;
                    s3.count(hyp3);
                    if (hyp3 && !f_r) s3.fail(jrec());
                }
            }
        }
        // (4): subring intersections, rings of order <= 16
        if (cr.ring->order <= 16) {
            for (const std::vector<char>& mask : unital_subring_masks(cr.ring)) {
                auto [S, incl] = make_subring(cr.ring, mask);
                LatticePtr sl = all_ideals(S);
                ClassCtx sctx(S, sl);
                for (const ExpansionFn& d : cr.deltas) {
                    ExpansionFn dio = preimage_expansion(incl, d, sl);
                    bool dg = is_delta_gamma_hom(incl, dio, d).first;
                    for (int i = 0; i < lat.count(); ++i) {
                        if (!lat.proper(i)) continue;
                        // S never lies inside a proper ideal (it contains 1)
                        int a = sl->find(hom_preimage(incl, lat.at(i)));
                        bool hyp = dg && ctx.dj_of(d, i);
                        gat4.count(hyp);
                        if (hyp && !sctx.dj_of(dio, a)) {
                            json jj = cex(cr);
                            jj["subring"] = S->spec;
                            jj["ideal"] = lat.at(i).display();
                            jj["delta"] = d.name;
                            gat4.fail(std::move(jj));
                        }
                        // literal reading: S meet I is an ideal of the ambient
                        // ring and delta-J there, with no hypothesis on I
                        lit4.count(true);
                        std::vector<char> cut(cr.ring->order, 0);
                        for (int x = 0; x < cr.ring->order; ++x)
                            cut[x] = mask[x] && lat.at(i).mask[x];
                        if (!is_ideal_set(*cr.ring, cut)) {
                            json jj = cex(cr);
                            jj["subring"] = S->spec;
                            jj["ideal"] = lat.at(i).display();
                            jj["delta"] = d.name;
                            jj["reason"] = "S meet I is not an ideal of the ambient ring";
                            lit4.fail(std::move(jj));
                        } else {
                            int c = lat.find(ideal_from_mask(cr.ring, cut));
                            if (!ctx.dj_of(d, c)) {
                                json jj = cex(cr);
                                jj["subring"] = S->spec;
                                jj["ideal"] = lat.at(i).display();
                                jj["delta"] = d.name;
                                jj["reason"] = "S meet I is not a delta-J-ideal of the ambient ring";
                                lit4.fail(std::move(jj));
                            }
                        }
                    }
                }
            }
        }
    }
    rep.parts.push_back({"CHK-13(1)",
                         "I delta-J in R implies I/J delta_q-J in R/J", s1.take(), std::nullopt});
    rep.parts.push_back({"CHK-13(2)",
                         "I/J delta_q-J with J inside J(R) implies I delta-J", s2.take(),
                         std::nullopt});
    rep.parts.push_back({"CHK-13(3)",
                         "I/J delta_q-J with J a delta-J-ideal and delta(J) != R implies I "
                         "delta-J",
                         s3.take(), std::nullopt});
    CheckOutcome go = gat4.take(), lo = lit4.take();
    go.notes.push_back(
        "strengthened: I delta-J in the ambient ring, inclusion a delta-gamma homomorphism "
        "for the preimage expansion; conclusion read inside the subring");
    lo.notes.push_back("stated: S meet I read as an ideal of the ambient ring, no hypothesis on I");
    rep.parts.push_back({"CHK-13(4)",
                         "subring intersections S meet I inherit the delta-J property",
                         std::move(go), std::move(lo)});
    return rep;
}

// ---- CHK-14: delta-J-ideals with delta(I) != R are superfluous ----
inline CheckReport chk14(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-14";
    Sink s;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        for (const ExpansionFn& d : cr.deltas)
            for (int i = 0; i < lat.count(); ++i) {
                if (!lat.proper(i)) continue;
                bool hyp = d.table[i] != lat.unit_idx && ctx.dj_of(d, i);
                s.count(hyp);
                if (hyp && !lat.is_superfluous_f[i]) {
                    json j = cex(cr);
                    j["ideal"] = lat.at(i).display();
                    j["delta"] = d.name;
                    s.fail(std::move(j));
                }
            }
    }
    rep.parts.push_back({"CHK-14", "every delta-J-ideal with delta(I) != R is superfluous",
                         s.take(), std::nullopt});
    return rep;
}

// ---- CHK-15: sums of delta-J-ideals ----
inline CheckReport chk15(const Corpus& corpus, const CheckOptions& opt) {
    CheckReport rep;
    rep.id = "CHK-15";
    Sink gat, lit(opt.stated_cex_cap);
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        for (size_t di = 0; di < cr.deltas.size(); ++di) {
            const ExpansionFn& d = cr.deltas[di];
            bool ip = ctx.int_preserving(di);
            for (int i = 0; i < lat.count(); ++i) {
                if (!lat.proper(i)) continue;
                for (int j = i; j < lat.count(); ++j) {
                    if (!lat.proper(j)) continue;
                    bool base = d.table[i] != lat.unit_idx && d.table[j] != lat.unit_idx &&
                                ctx.dj_of(d, i) && ctx.dj_of(d, j);
                    int sum = lat.sum[i][j];
                    bool concl = lat.proper(sum) && ctx.dj_of(d, sum);
                    auto run = [&](Sink& s, bool need_ip) {
                        bool hyp = base && (!need_ip || ip);
                        s.count(hyp);
                        if (hyp && !concl) {
                            json jj = cex(cr);
                            jj["ideal_I"] = lat.at(i).display();
                            jj["ideal_J"] = lat.at(j).display();
                            jj["delta"] = d.name;
                            jj["sum"] = lat.at(sum).display();
                            s.fail(std::move(jj));
                        }
                    };
                    run(gat, true);
                    run(lit, false);
                }
            }
        }
    }
    CheckOutcome go = gat.take(), lo = lit.take();
    go.notes.push_back("strengthened: delta additionally intersection-preserving (used by the "
                       "transfer through R/(I meet J))");
    lo.notes.push_back("stated: no intersection-preservation requirement");
    rep.parts.push_back({"CHK-15",
                         "the sum of two delta-J-ideals with proper expansions is a delta-J-ideal",
                         std::move(go), std::move(lo)});
    return rep;
}

// ---- CHK-16: localization transfer ----
inline CheckReport chk16(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-16";
    Sink s1, s2;
    long sets_total = 0, sets_jac_ok = 0, pairs_total = 0, pairs_ill = 0;
    for (const CorpusRing& cr : corpus.rings) {
        ClassCtx ctx(cr);
        const IdealLattice& lat = *cr.lat;
        for (const MultiplicativeSet& S : corpus_mult_sets(cr.ring, lat)) {
            ++sets_total;
            Localization loc = localize(cr.ring, S);
            LatticePtr ll = all_ideals(loc.ring);
            ClassCtx lctx(loc.ring, ll);
            std::vector<int> ext(lat.count());
            for (int i = 0; i < lat.count(); ++i) ext[i] = ll->find(extend_ideal(loc, lat.at(i)));
            bool jac_ok = ext[lat.jacobson_idx] == ll->jacobson_idx;
            if (jac_ok) ++sets_jac_ok;
            auto disjoint = [&](const std::vector<int>& zs) {
                for (int a : S.members)
                    if (std::binary_search(zs.begin(), zs.end(), a)) return false;
                return true;
            };
            bool s_avoids_zjac = disjoint(lat.zsets[lat.jacobson_idx]);
            for (const ExpansionFn& d : cr.deltas) {
                ++pairs_total;
                std::vector<int> t(ll->count(), -1);
                bool wd = true;
                for (int i = 0; i < lat.count() && wd; ++i) {
                    int e = ext[i], im = ext[d.table[i]];
                    if (t[e] == -1) t[e] = im;
                    else if (t[e] != im) wd = false;
                }
                if (!wd) ++pairs_ill;
                for (int i = 0; i < lat.count(); ++i) {
                    if (!lat.proper(i)) continue;
                    bool meets_S = false;
                    for (int a : S.members)
                        if (lat.at(i).mask[a]) { meets_S = true; break; }
                    bool hyp1 = jac_ok && wd && !meets_S && ctx.dj_of(d, i);
                    s1.count(hyp1);
                    if (hyp1 && !lctx.dj(ext[i], t[ext[i]])) {
                        json j = cex(cr);
                        j["mult_set"] = S.display();
                        j["ideal"] = lat.at(i).display();
                        j["delta"] = d.name;
                        s1.fail(std::move(j));
                    }
                    bool hyp2 = jac_ok && wd && s_avoids_zjac &&
                                disjoint(lat.zsets[d.table[i]]) && lctx.dj(ext[i], t[ext[i]]);
                    s2.count(hyp2);
                    if (hyp2 && !ctx.dj_of(d, i)) {
                        json j = cex(cr);
                        j["mult_set"] = S.display();
                        j["ideal"] = lat.at(i).display();
                        j["delta"] = d.name;
                        s2.fail(std::move(j));
                    }
                }
            }
        }
    }
    CheckOutcome o1 = s1.take(), o2 = s2.take();
    std::string note_jac = "extension of J(R) equalled the localized Jacobson radical for " +
                           std::to_string(sets_jac_ok) + " of " + std::to_string(sets_total) +
                           " multiplicative sets";
    std::string note_wd = "the induced expansion was ill-defined for " +
                          std::to_string(pairs_ill) + " of " + std::to_string(pairs_total) +
                          " (set, delta) pairs";
    o1.notes.push_back(note_jac);
    o1.notes.push_back(note_wd);
    o2.notes.push_back(note_jac);
    o2.notes.push_back(note_wd);
    rep.parts.push_back({"CHK-16(1)",
                         "delta-J-ideals avoiding S extend to delta_S-J-ideals of the "
                         "localization",
                         std::move(o1), std::nullopt});
    rep.parts.push_back({"CHK-16(2)",
                         "when S avoids the relevant zero-divisor sets, delta_S-J extensions "
                         "pull back to delta-J-ideals",
                         std::move(o2), std::nullopt});
    return rep;
}

// ---- CHK-17: idealization transfer ----
inline CheckReport chk17(const Corpus& corpus, const CheckOptions&) {
    CheckReport rep;
    rep.id = "CHK-17";
    Sink s;
    for (const CorpusRing& cr : corpus.rings) {
        if (!cr.ring->idealization) continue;
        const IdealizationInfo& info = *cr.ring->idealization;
        ClassCtx rmctx(cr);
        LatticePtr bl = all_ideals(info.base);
        ClassCtx bctx(info.base, bl);
        std::vector<ExpansionFn> bdeltas = registered_expansions(info.base, bl);
        std::vector<std::vector<int>> subs = all_submodules(*info.mod);
        std::vector<std::vector<int>> im(bl->count());
        for (int i = 0; i < bl->count(); ++i) im[i] = ideal_times_module(bl->at(i), *info.mod);
        for (const ExpansionFn& d : bdeltas) {
            IdealizationExpansion ie = induce_idealization(d, cr.ring, cr.lat);
            for (int i = 0; i < bl->count(); ++i) {
                if (!bl->proper(i)) continue;
                for (const std::vector<int>& N : subs) {
                    bool legal = std::includes(N.begin(), N.end(), im[i].begin(), im[i].end());
                    s.count(legal);
                    if (!legal) continue;
                    Ideal H = embed_ideal(cr.ring, bl->at(i), N);
                    int h = cr.lat->find(H);
                    bool f_base = bctx.dj_of(d, i);
                    bool f_rm = rmctx.dj_of(ie.fn, h);
                    if (f_base != f_rm) {
                        json j = cex(cr);
                        j["ideal"] = bl->at(i).display();
                        j["submodule"] = submodule_label(*info.mod, N);
                        j["delta"] = d.name;
                        j["base_delta_J"] = f_base;
                        j["idealization_delta_J"] = f_rm;
                        s.fail(std::move(j));
                    }
                }
            }
        }
    }
    rep.parts.push_back({"CHK-17",
                         "I is delta-J in R iff I(+)N is delta_(+)-J in R(+)M, for every legal "
                         "embedded ideal",
                         s.take(), std::nullopt});
    return rep;
}

}  // namespace detail

inline const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = {
        "CHK-01", "CHK-02", "CHK-03", "CHK-04", "CHK-05", "CHK-06", "CHK-07", "CHK-08",
        "CHK-09", "CHK-10", "CHK-11", "CHK-12", "CHK-13", "CHK-14", "CHK-15", "CHK-16",
        "CHK-17"};
    return ids;
}

inline CheckReport run_check(const std::string& id, const Corpus& corpus,
                             const CheckOptions& opt = {}) {
    using Fn = CheckReport (*)(const Corpus&, const CheckOptions&);
    static const std::map<std::string, Fn> table = {
        {"CHK-01", detail::chk01}, {"CHK-02", detail::chk02}, {"CHK-03", detail::chk03},
        {"CHK-04", detail::chk04}, {"CHK-05", detail::chk05}, {"CHK-06", detail::chk06},
        {"CHK-07", detail::chk07}, {"CHK-08", detail::chk08}, {"CHK-09", detail::chk09},
        {"CHK-10", detail::chk10}, {"CHK-11", detail::chk11}, {"CHK-12", detail::chk12},
        {"CHK-13", detail::chk13}, {"CHK-14", detail::chk14}, {"CHK-15", detail::chk15},
        {"CHK-16", detail::chk16}, {"CHK-17", detail::chk17}};
    auto it = table.find(id);
    if (it == table.end()) {
        std::string known;
        for (const std::string& k : all_check_ids()) known += (known.empty() ? "" : ", ") + k;
        throw domain_error("unknown check id '" + id + "' (known: " + known + ")");
    }
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = it->second(corpus, opt);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline std::vector<CheckReport> run_all_checks(const Corpus& corpus, const CheckOptions& opt = {}) {
    std::vector<CheckReport> out;
    for (const std::string& id : all_check_ids()) out.push_back(run_check(id, corpus, opt));
    return out;
}

}  // namespace deltaj
