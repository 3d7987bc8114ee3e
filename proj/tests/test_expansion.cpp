#include <algorithm>

#include "catch_amalgamated.hpp"
#include "deltaj/deltaj.hpp"

using namespace deltaj;

TEST_CASE("expansion tables on Z12") {
    RingPtr R = make_ring("Z12");
    LatticePtr lat = all_ideals(R);
    // lattice order: (0) (6) (4) (3) (2) (1)

    ExpansionFn d0 = make_identity_expansion(R, lat);
    REQUIRE(d0.table == std::vector<int>{0, 1, 2, 3, 4, 5});
    REQUIRE(d0.name == "delta0");

    ExpansionFn d1 = make_radical_expansion(R, lat);
    REQUIRE(d1.table == std::vector<int>{1, 1, 4, 3, 4, 5});
    REQUIRE(d1.name == "delta1");

    ExpansionFn p2 = make_add_ideal_expansion(R, lat, ideal_generated(R, {2}));
    REQUIRE(p2.table == std::vector<int>{4, 4, 4, 5, 4, 5});
    REQUIRE(p2.name == "plusM(2)");
    REQUIRE(p2(ideal_generated(R, {3})).is_proper() == false);
    REQUIRE(p2(ideal_generated(R, {4})).members == std::vector<int>{0, 2, 4, 6, 8, 10});

    // composition applies right-to-left
    ExpansionFn c = compose(d1, p2);
    REQUIRE(c.name == "delta1oplusM(2)");
    for (int i = 0; i < lat->count(); ++i) REQUIRE(c.table[i] == d1.table[p2.table[i]]);
}

TEST_CASE("registered expansion family") {
    RingPtr R = make_ring("Z12");
    LatticePtr lat = all_ideals(R);
    std::vector<ExpansionFn> ds = registered_expansions(R, lat);
    REQUIRE(ds.size() == 8);  // delta0, delta1, plusM per ideal
    std::vector<std::string> names;
    for (const ExpansionFn& d : ds) names.push_back(d.name);
    REQUIRE(names == std::vector<std::string>{"delta0", "delta1", "plusM(0)", "plusM(6)",
                                              "plusM(4)", "plusM(3)", "plusM(2)", "plusM(1)"});
}

TEST_CASE("expansion axioms enforced") {
    RingPtr R = make_ring("Z4");
    LatticePtr lat = all_ideals(R);  // (0) (2) (1)

    REQUIRE_FALSE(expansion_axiom_violation(*lat, {0, 1, 2}).has_value());

    // not extensive: sends (2) to (0)
    REQUIRE(expansion_axiom_violation(*lat, {0, 0, 2}).has_value());
    REQUIRE_THROWS_AS(make_table_expansion(R, lat, {0, 0, 2}), domain_error);

    // extensive but not monotone: (0) -> (1) while (2) -> (2)
    REQUIRE(expansion_axiom_violation(*lat, {2, 1, 2}).has_value());
    REQUIRE_THROWS_AS(make_table_expansion(R, lat, {2, 1, 2}), domain_error);

    // wrong arity
    REQUIRE(expansion_axiom_violation(*lat, {0, 1}).has_value());
}

TEST_CASE("intersection preservation") {
    RingPtr R = make_ring("Z12");
    LatticePtr lat = all_ideals(R);
    REQUIRE(is_intersection_preserving(make_identity_expansion(R, lat)).first);
    REQUIRE(is_intersection_preserving(make_radical_expansion(R, lat)).first);

    // in Z2 (+) (Z2 x Z2), adding the diagonal submodule-ideal breaks it:
    // the two axis ideals intersect in (0), but their expansions intersect
    // in the full 0(+)M
    RingPtr RM = make_ring("Z2(+)free:2");
    REQUIRE(RM->order == 8);
    LatticePtr rml = all_ideals(RM);
    int diag = -1;
    for (int i = 0; i < rml->count(); ++i)
        if (rml->at(i).members == std::vector<int>{0, 3}) diag = i;
    REQUIRE(diag >= 0);
    auto [ok, wit] = is_intersection_preserving(make_add_ideal_expansion(RM, rml, diag));
    REQUIRE_FALSE(ok);
    REQUIRE(wit == std::pair<int, int>{1, 2});
}

TEST_CASE("quotient-induced expansion") {
    RingPtr R = make_ring("Z12");
    LatticePtr lat = all_ideals(R);
    ExpansionFn p2 = make_add_ideal_expansion(R, lat, ideal_generated(R, {2}));

    QuotientExpansion q = induce_quotient(p2, ideal_generated(R, {4}));
    REQUIRE(q.quotient->order == 4);
    REQUIRE(q.fn.name == "plusM(2)_q");
    // delta_q((0)) = image of delta((4)) = (2)/(4), the class set {0, 2}
    Ideal dz = q.fn(zero_ideal(q.quotient));
    REQUIRE(dz.members.size() == 2);
    std::vector<std::string> names;
    for (int m : dz.members) names.push_back(q.quotient->name(m));
    REQUIRE(names == std::vector<std::string>{"0", "2"});

    REQUIRE_THROWS_AS(induce_quotient(p2, unit_ideal(R)), domain_error);
}

TEST_CASE("localization-induced expansion") {
    RingPtr R = make_ring("Z12");
    LatticePtr lat = all_ideals(R);
    auto S = mult_closure(R, {4});
    REQUIRE(S.has_value());
    REQUIRE(S->members == std::vector<int>{1, 4});

    LocalizedExpansion le = induce_localization(make_identity_expansion(R, lat), *S);
    REQUIRE(le.well_defined);
    REQUIRE(le.loc.ring->order == 3);
    REQUIRE(le.fn.name == "delta0_S");
    REQUIRE(jacobson_radical(*le.loc_lattice).members == std::vector<int>{0});
}

TEST_CASE("idealization-induced expansion") {
    RingPtr RM = make_ring("Z4(+)Z4");
    REQUIRE(RM->order == 16);
    LatticePtr rml = all_ideals(RM);
    REQUIRE(rml->count() == 7);
    RingPtr R = RM->idealization->base;  // the inducer checks ring identity
    LatticePtr lat = all_ideals(R);

    IdealizationExpansion ie =
        induce_idealization(make_identity_expansion(R, lat), RM, rml);
    REQUIRE(ie.fn.name == "delta0_(+)");
    // H = <(2,1)> = {(0,0),(2,1),(0,2),(2,3)} is an ideal not of the form I(+)N
    REQUIRE_FALSE(ie.non_embedded.empty());
    for (int h : ie.non_embedded) REQUIRE_FALSE(embedded_form(RM, rml->at(h)).has_value());

    // embedded ideals map to delta(I)(+)M
    Ideal emb = embed_ideal(RM, ideal_generated(R, {2}), {0, 2});
    REQUIRE(emb.members == std::vector<int>{0, 2, 8, 10});
    Ideal img = ie.fn(emb);
    REQUIRE(img.members == std::vector<int>{0, 1, 2, 3, 8, 9, 10, 11});
}

TEST_CASE("subring-restricted expansion") {
    RingPtr R = make_ring("Z12");
    LatticePtr lat = all_ideals(R);
    auto masks = unital_subring_masks(R);
    REQUIRE_FALSE(masks.empty());
    for (const auto& mask : masks) {
        auto [S, incl] = make_subring(R, mask);
        LatticePtr sl = all_ideals(S);
        ExpansionFn rd = preimage_expansion(incl, make_radical_expansion(R, lat), sl);
        REQUIRE_FALSE(expansion_axiom_violation(*sl, rd.table).has_value());
    }
}
