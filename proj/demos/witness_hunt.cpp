// Run a few search templates over a small corpus and print what they find.
// Each template describes a conjunction of ideal/ring properties; the search
// returns every (ring, ideal, expansion) instance matching it. Empty results
// are findings too: they witness rigidity facts of finite rings.

#include <iostream>

#include "deltaj/deltaj.hpp"

using namespace deltaj;

static void hunt(const Corpus& corpus, const std::string& tmpl) {
    std::vector<json> hits = search_counterexample(tmpl, corpus);
    std::cout << "  " << tmpl << "\n";
    if (hits.empty()) {
        std::cout << "    no instance\n";
        return;
    }
    std::cout << "    " << hits.size() << " instance(s); first three:\n";
    for (size_t k = 0; k < hits.size() && k < 3; ++k)
        std::cout << "    " << hits[k].dump() << "\n";
}

int main() {
    CorpusConfig cfg;
    cfg.zn_max = 16;
    cfg.prod_max = 16;
    cfg.poly = false;
    cfg.idealizations = false;
    cfg.quotients = false;
    Corpus corpus = generate_corpus(cfg);
    std::cout << "corpus: " << corpus.rings.size() << " rings (Z_n and products up to 16)\n\n";

    // at finite scale the nilradical equals J(R), every proper ideal of a
    // quasi-local ring is a J-ideal, and non-local rings have none -- so the
    // three element-condition classes coincide and live only in local rings
    std::cout << "rigidity of the ideal classes over finite rings:\n";
    hunt(corpus, "quasi_J_ideal and not J_ideal");
    hunt(corpus, "J_ideal and ring not quasi-local");
    hunt(corpus, "prime and not maximal");

    // classes that do separate
    std::cout << "\nseparations:\n";
    hunt(corpus, "primary and not prime");
    hunt(corpus, "superfluous and not delta_J_ideal(delta1)");

    // an expansion that sends I to R makes the delta-J condition trivial;
    // under the identity expansion the same ideals fail it
    std::cout << "\nexpansion-relative behavior:\n";
    hunt(corpus, "delta_J_ideal(plusM(3)) and not delta_J_ideal(delta0)");
    hunt(corpus, "proper and not superfluous and delta_J_ideal(delta0)");
    return 0;
}
