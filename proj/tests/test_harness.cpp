#include <algorithm>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "deltaj/checks.hpp"
#include "deltaj/corpus.hpp"
#include "deltaj/search.hpp"

using namespace deltaj;

namespace {

CorpusConfig zn_only(int n) {
    CorpusConfig cfg;
    cfg.zn_max = n;
    cfg.prod_max = 0;
    cfg.poly = false;
    cfg.idealizations = false;
    cfg.quotients = false;
    return cfg;
}

bool has_note(const std::vector<std::string>& notes, const std::string& needle) {
    return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) {
        return n.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("corpus generation") {
    Corpus c = generate_corpus(zn_only(12));
    REQUIRE(c.rings.size() == 11);  // Z2 .. Z12
    REQUIRE(c.rings.front().ring->spec == "Z2");
    REQUIRE(c.rings.back().ring->spec == "Z12");
    for (const CorpusRing& cr : c.rings) {
        REQUIRE(cr.lat->count() >= 2);
        REQUIRE(cr.deltas.size() == 2 + static_cast<size_t>(cr.lat->count()));
        REQUIRE(cr.deltas[0].name == "delta0");
        REQUIRE(cr.deltas[1].name == "delta1");
    }

    // same configuration, same corpus
    Corpus d = generate_corpus(zn_only(12));
    REQUIRE(c.rings.size() == d.rings.size());
    for (size_t i = 0; i < c.rings.size(); ++i) {
        REQUIRE(c.rings[i].ring->spec == d.rings[i].ring->spec);
        REQUIRE(c.rings[i].ring->mul_table == d.rings[i].ring->mul_table);
    }

    Corpus full = generate_corpus(zn_only(6));
    REQUIRE(full.rings.size() == 5);
}

TEST_CASE("check registry") {
    REQUIRE(all_check_ids().size() == 17);
    REQUIRE(all_check_ids().front() == "CHK-01");
    REQUIRE(all_check_ids().back() == "CHK-17");

    Corpus c = generate_corpus(zn_only(4));
    try {
        run_check("CHK-99", c);
        FAIL("expected a domain_error for an unknown check id");
    } catch (const domain_error& e) {
        std::string msg = e.what();
        REQUIRE(msg.find("CHK-99") != std::string::npos);
        REQUIRE(msg.find("CHK-17") != std::string::npos);  // lists the known ids
    }
}

TEST_CASE("hypothesis accounting") {
    Corpus c = generate_corpus(zn_only(8));
    for (const CheckReport& rep : run_all_checks(c)) {
        REQUIRE(rep.pass());
        for (const CheckPart& p : rep.parts) {
            REQUIRE(p.gating.tested + p.gating.filtered == p.gating.enumerated);
            REQUIRE(p.gating.vacuous == (p.gating.tested == 0));
            if (p.stated)
                REQUIRE(p.stated->tested + p.stated->filtered == p.stated->enumerated);
        }
    }
}

TEST_CASE("colon-hypothesis readings of CHK-06") {
    Corpus c = generate_corpus(zn_only(6));
    CheckReport rep = run_check("CHK-06", c);
    REQUIRE(rep.parts.size() == 1);
    const CheckPart& p = rep.parts[0];

    // the strengthened reading gates and holds
    REQUIRE(p.gating.pass);
    REQUIRE_FALSE(p.gating.vacuous);
    REQUIRE(has_note(p.gating.notes, "reading: strengthened"));
    REQUIRE(has_note(p.gating.notes, "literal reading:"));

    // the printed reading is reported alongside, and Z6 refutes it: the
    // expansion I -> I + (3) sends (2) to the whole ring, so the corrected
    // domain is empty while (2) is still no J-ideal
    REQUIRE(p.stated.has_value());
    REQUIRE_FALSE(p.stated->pass);
    REQUIRE(p.stated->counterexamples.size() == 4);
    const json& first = p.stated->counterexamples[0];
    REQUIRE(first["ring"] == "Z6");
    REQUIRE(first["ideal"] == "(2)");
    REQUIRE(first["delta"] == "plusM(3)");
}

TEST_CASE("gating the printed reading instead") {
    Corpus c = generate_corpus(zn_only(6));
    CheckOptions opt;
    opt.typo = TypoReading::stated;

    // the literal CHK-06 text is refuted outright
    CheckReport r6 = run_check("CHK-06", c, opt);
    REQUIRE_FALSE(r6.pass());
    REQUIRE(has_note(r6.parts[0].gating.notes, "reading: literal"));

    // the literal CHK-05 hypothesis is unsatisfiable: x inside delta(I)
    // makes (delta(I):x) the whole ring
    CheckReport r5 = run_check("CHK-05", c, opt);
    REQUIRE(r5.pass());
    REQUIRE(r5.vacuous());
}

TEST_CASE("vacuity is reported, not hidden") {
    CorpusConfig cfg = zn_only(8);
    Corpus c = generate_corpus(cfg);
    REQUIRE_FALSE(cfg.idealizations);
    CheckReport rep = run_check("CHK-17", c);
    REQUIRE(rep.pass());
    REQUIRE(rep.vacuous());
}

TEST_CASE("report serialization") {
    Corpus c = generate_corpus(zn_only(6));
    json j = report_to_json(run_check("CHK-06", c));
    REQUIRE(j["check"] == "CHK-06");
    REQUIRE(j["outcome"] == "pass");
    REQUIRE(j["parts"].size() == 1);
    const json& part = j["parts"][0];
    REQUIRE(part.contains("what"));
    REQUIRE(part["gating"]["outcome"] == "pass");
    REQUIRE(part["gating"]["tested"].get<long>() > 0);
    REQUIRE(part["stated"]["outcome"] == "fail");
    REQUIRE(part["stated"]["counterexamples"].size() == 4);

    json v = report_to_json(run_check("CHK-17", c));
    REQUIRE(v["outcome"] == "pass (vacuous)");
}

TEST_CASE("search templates parse") {
    auto q1 = parse_template("prime and not maximal");
    REQUIRE(q1.uses_ideal);
    REQUIRE_FALSE(q1.iterates_deltas);

    // unicode spellings normalize to the ascii forms
    auto q2 = parse_template("delta_J_ideal(δ₁) ∧ ¬ J_ideal");
    REQUIRE(q2.uses_ideal);
    REQUIRE_FALSE(q2.iterates_deltas);

    auto q3 = parse_template("delta_primary && !prime");
    REQUIRE(q3.iterates_deltas);

    auto q4 = parse_template("ring not quasi_local");
    REQUIRE_FALSE(q4.uses_ideal);

    REQUIRE_THROWS_AS(parse_template(""), parse_error);
    REQUIRE_THROWS_AS(parse_template("shiny"), parse_error);
    REQUIRE_THROWS_AS(parse_template("prime maximal"), parse_error);
    REQUIRE_THROWS_AS(parse_template("prime(delta0)"), parse_error);
    REQUIRE_THROWS_AS(parse_template("delta_J_ideal()"), parse_error);
    REQUIRE_THROWS_AS(parse_template("prime %"), parse_error);
}

TEST_CASE("search over the corpus") {
    Corpus c = generate_corpus(zn_only(6));

    // rigidity at this scale: primes are maximal, and an ideal that is
    // delta0-J must be superfluous
    REQUIRE(search_counterexample("prime and not maximal", c).empty());
    REQUIRE(search_counterexample("proper and not superfluous and delta_J_ideal(δ₀)", c).empty());

    // radical-expansion J-ideals need a quasi-local ring
    CorpusConfig pc = zn_only(4);
    pc.prod_max = 8;
    Corpus prods = generate_corpus(pc);
    REQUIRE(search_counterexample("delta_J_ideal(δ₁) and ring not quasi_local", prods).empty());

    auto hits = search_counterexample("primary and not prime", c);
    REQUIRE_FALSE(hits.empty());
    REQUIRE(hits[0]["ring"] == "Z4");
    REQUIRE(hits[0]["ideal"] == "(0)");
    REQUIRE_FALSE(hits[0].contains("delta"));  // no expansion atom in the template

    // replay every hit against the classifier
    for (const json& h : hits) {
        for (const CorpusRing& cr : c.rings) {
            if (cr.ring->spec != h["ring"]) continue;
            for (int i = 0; i < cr.lat->count(); ++i)
                if (cr.lat->at(i).display() == h["ideal"]) {
                    REQUIRE(cr.lat->is_primary[i]);
                    REQUIRE_FALSE(cr.lat->is_prime[i]);
                }
        }
    }

    // open expansion selectors record which expansion matched
    auto open_hits = search_counterexample("delta_J_ideal and not J_ideal", c);
    REQUIRE_FALSE(open_hits.empty());
    REQUIRE(open_hits[0].contains("delta"));
}
