#include <utility>
#include <vector>

#include "catch_amalgamated.hpp"
#include "deltaj/expansion.hpp"
#include "deltaj/hom.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/idealize.hpp"
#include "deltaj/lattice.hpp"
#include "deltaj/localize.hpp"
#include "deltaj/module.hpp"
#include "deltaj/ring_spec.hpp"

using namespace deltaj;

TEST_CASE("quotient rings") {
    RingPtr Z12 = make_ring("Z12");
    auto [Q, proj] = quotient_ring(Z12, ideal_generated(Z12, {4}));
    REQUIRE(Q->order == 4);
    REQUIRE(Q->spec == "Z12/(4)");
    std::vector<std::string> units;
    for (int a = 0; a < Q->order; ++a)
        if (Q->is_unit(a)) units.push_back(Q->name(a));
    REQUIRE(units == std::vector<std::string>{"1", "3"});
    REQUIRE(proj(4) == Q->zero);
    REQUIRE(proj(5) == proj(1));

    REQUIRE(quotient_ring(Z12, ideal_generated(Z12, {3})).first->order == 3);
    REQUIRE(quotient_ring(Z12, ideal_generated(Z12, {0})).first->order == 12);
    REQUIRE_THROWS_AS(quotient_ring(Z12, ideal_generated(Z12, {1})), domain_error);

    // the spec label round-trips through the parser
    RingPtr again = make_ring(Q->spec);
    REQUIRE(again->order == 4);
    REQUIRE(again->mul_table == Q->mul_table);
}

TEST_CASE("quotients of idealizations keep parseable labels") {
    RingPtr RM = make_ring("Z2(+)Z2");
    REQUIRE(RM->order == 4);
    int eps = RM->idealization->pair_index(0, 1);
    auto [Q, proj] = quotient_ring(RM, ideal_generated(RM, {eps}));
    REQUIRE(Q->spec == "(Z2(+)Z2)/((0,1))");
    REQUIRE(Q->order == 2);
    REQUIRE(make_ring(Q->spec)->order == 2);
}

TEST_CASE("ring homomorphisms") {
    RingPtr Z12 = make_ring("Z12");
    RingPtr Z4 = make_ring("Z4");
    std::vector<int> m(12);
    for (int a = 0; a < 12; ++a) m[a] = a % 4;
    RingHom f = make_hom(Z12, Z4, m);

    REQUIRE(kernel(f).members == std::vector<int>{0, 4, 8});
    REQUIRE(hom_image(f, ideal_generated(Z12, {6})).members == std::vector<int>{0, 2});
    REQUIRE(hom_preimage(f, ideal_generated(Z4, {2})).members ==
            std::vector<int>{0, 2, 4, 6, 8, 10});

    // a non-multiplicative map is rejected
    std::vector<int> bad(12);
    for (int a = 0; a < 12; ++a) bad[a] = (a + 1) % 4;
    REQUIRE_THROWS_AS(make_hom(Z12, Z4, bad), domain_error);
}

TEST_CASE("expansion-compatible homomorphisms") {
    RingPtr Z12 = make_ring("Z12");
    RingPtr Z4 = make_ring("Z4");
    LatticePtr l12 = all_ideals(Z12);
    LatticePtr l4 = all_ideals(Z4);
    std::vector<int> m(12);
    for (int a = 0; a < 12; ++a) m[a] = a % 4;
    RingHom f = make_hom(Z12, Z4, m);

    // identity against identity commutes with preimages
    auto ok = is_delta_gamma_hom(f, make_identity_expansion(Z12, l12),
                                 make_identity_expansion(Z4, l4));
    REQUIRE(ok.first);

    // identity against radical does not: the preimage of sqrt(0) in Z4 is the
    // even ideal, strictly larger than the untouched preimage of (0)
    auto notok = is_delta_gamma_hom(f, make_identity_expansion(Z12, l12),
                                    make_radical_expansion(Z4, l4));
    REQUIRE_FALSE(notok.first);
    REQUIRE(notok.second == l4->zero_idx);
}

TEST_CASE("localization") {
    RingPtr Z6 = make_ring("Z6");
    auto S6 = mult_closure(Z6, {3});
    REQUIRE(S6.has_value());
    REQUIRE(S6->members == std::vector<int>{1, 3});
    Localization loc6 = localize(Z6, *S6);
    REQUIRE(loc6.kernel.members == std::vector<int>{0, 2, 4});
    REQUIRE(loc6.ring->order == 2);

    RingPtr Z12 = make_ring("Z12");
    auto S12 = mult_closure(Z12, {4});
    Localization loc = localize(Z12, *S12);
    REQUIRE(loc.kernel.members == std::vector<int>{0, 3, 6, 9});
    REQUIRE(loc.ring->order == 3);
    REQUIRE(loc.fraction(4, 4) == loc.ring->one);

    LatticePtr ll = all_ideals(loc.ring);
    REQUIRE(jacobson_radical(*ll).members == std::vector<int>{0});
    Ideal ext = extend_ideal(loc, ideal_generated(Z12, {6}));
    REQUIRE(ext.members == std::vector<int>{0});

    // a set meeting 0 collapses the ring; mult_closure refuses it
    REQUIRE_FALSE(mult_closure(Z6, {0}).has_value());
}

TEST_CASE("idealization") {
    RingPtr small = make_ring("Z2(+)Z2");
    REQUIRE(small->order == 4);
    LatticePtr sl = all_ideals(small);
    REQUIRE(sl->count() == 3);
    const Ideal& jac = sl->at(sl->jacobson_idx);
    std::vector<std::string> jn;
    for (int x : jac.members) jn.push_back(small->name(x));
    REQUIRE(jn == std::vector<std::string>{"(0,0)", "(0,1)"});

    RingPtr RM = make_ring("Z4(+)Z4");
    const IdealizationInfo& info = *RM->idealization;
    Ideal H = ideal_generated(RM, {info.pair_index(2, 1)});
    REQUIRE(H.members == std::vector<int>{0, 2, 9, 11});
    REQUIRE_FALSE(embedded_form(RM, H).has_value());
    REQUIRE(projection_ideal(RM, H).members == std::vector<int>{0, 2});

    // 0(+)M is an embedded ideal and every product from it dies: (0,m)(0,m')=0
    Ideal zm = embed_ideal(RM, ideal_generated(info.base, {0}), {0, 1, 2, 3});
    auto form = embedded_form(RM, zm);
    REQUIRE(form.has_value());
    REQUIRE(form->first.members == std::vector<int>{0});
    for (int x : zm.members)
        for (int y : zm.members) REQUIRE(RM->mul(x, y) == RM->zero);
}

TEST_CASE("finite modules") {
    RingPtr Z2 = make_ring("Z2");
    ModulePtr F2 = make_free_module(Z2, 2);
    REQUIRE(F2->order == 4);
    REQUIRE(all_submodules(*F2).size() == 5);

    RingPtr Z4 = make_ring("Z4");
    ModulePtr F = make_free_module(Z4, 1);
    REQUIRE(verify_module_axioms(*F).pass());
    auto subs = all_submodules(*F);
    REQUIRE(subs == std::vector<std::vector<int>>{{0}, {0, 2}, {0, 1, 2, 3}});
    REQUIRE(submodules_between(*F, {0, 2}) ==
            std::vector<std::vector<int>>{{0, 2}, {0, 1, 2, 3}});
    REQUIRE(submodule_generated(*F, {2}) == std::vector<int>{0, 2});

    ModulePtr Q = make_quot_module(Z4, ideal_generated(Z4, {2}));
    REQUIRE(Q->order == 2);
    REQUIRE(verify_module_axioms(*Q).pass());
    REQUIRE(ideal_times_module(ideal_generated(Z4, {2}), *F) == std::vector<int>{0, 2});
}
