#pragma once

#include <string>
#include <vector>

#include "deltaj/expansion.hpp"
#include "deltaj/lattice.hpp"
#include "deltaj/ring.hpp"
#include "deltaj/ring_spec.hpp"

namespace deltaj {

// Deterministic generation bounds for the test corpus. The defaults keep the
// full check suite at desk scale.
struct CorpusConfig {
    int zn_max = 24;           // Z_n for 2 <= n <= zn_max
    int prod_max = 24;         // Z_a x Z_b for a <= b, ab <= prod_max
    bool poly = true;          // Z_p[x]/(f), p in {2,3}, all monic f of degree 2
    bool idealizations = true; // R(+)M of order <= idealization_cap
    int idealization_cap = 32;
    bool quotients = true;     // R/J for every proper nonzero J, one level deep
};

struct CorpusRing {
    RingPtr ring;
    LatticePtr lat;
    std::vector<ExpansionFn> deltas;  // delta0, delta1, delta_{+M} for every M
};

struct Corpus {
    CorpusConfig config;
    std::vector<CorpusRing> rings;
};

// Rings are rebuilt from their spec strings so that every corpus member is
// reachable by name from the command line.
inline Corpus generate_corpus(const CorpusConfig& cfg = {}) {
    Corpus c;
    c.config = cfg;
    auto add = [&c](const std::string& spec) {
        CorpusRing r;
        r.ring = make_ring(spec);
        r.lat = all_ideals(r.ring);
        r.deltas = registered_expansions(r.ring, r.lat);
        c.rings.push_back(std::move(r));
    };

    for (int n = 2; n <= cfg.zn_max; ++n) add("Z" + std::to_string(n));
    for (int a = 2; a * a <= cfg.prod_max; ++a)
        for (int b = a; a * b <= cfg.prod_max; ++b)
            add("Z" + std::to_string(a) + "xZ" + std::to_string(b));
    if (cfg.poly)
        for (int p : {2, 3})
            for (int c1 = 0; c1 < p; ++c1)
                for (int c0 = 0; c0 < p; ++c0)
                    add("Z" + std::to_string(p) + "[x]/(" +
                        detail::poly_name(std::vector<int>{c0, c1, 1}) + ")");

    size_t base_count = c.rings.size();
    if (cfg.idealizations) {
        std::vector<std::string> specs;
        for (size_t i = 0; i < base_count; ++i) {
            const CorpusRing& br = c.rings[i];
            long o = br.ring->order;
            if (o * o <= cfg.idealization_cap) specs.push_back(br.ring->spec + "(+)" + br.ring->spec);
            if (o * o * o <= cfg.idealization_cap) specs.push_back(br.ring->spec + "(+)free:2");
            for (int j = 0; j < br.lat->count(); ++j) {
                const Ideal& I = br.lat->at(j);
                if (!I.is_proper() || I.is_zero()) continue;
                long m = o / I.size();
                if (m > 1 && m < o && o * m <= cfg.idealization_cap)
                    specs.push_back(br.ring->spec + "(+)quot:" + br.lat->gen_label(j));
            }
        }
        for (const std::string& s : specs) add(s);
    }
    if (cfg.quotients) {
        size_t upto = c.rings.size();
        std::vector<std::string> specs;
        for (size_t i = 0; i < upto; ++i) {
            const CorpusRing& r = c.rings[i];
            std::string base = r.ring->spec;
            if (detail::find_top_level_idealize(base) != std::string::npos) base = "(" + base + ")";
            for (int j = 0; j < r.lat->count(); ++j) {
                const Ideal& I = r.lat->at(j);
                if (!I.is_proper() || I.is_zero()) continue;
                specs.push_back(base + "/" + r.lat->gen_label(j));
            }
        }
        for (const std::string& s : specs) add(s);
    }
    return c;
}

}  // namespace deltaj
