#include <algorithm>
#include <utility>
#include <vector>

#include "catch_amalgamated.hpp"
#include "deltaj/classify.hpp"
#include "deltaj/expansion.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/lattice.hpp"
#include "deltaj/ring_spec.hpp"

using namespace deltaj;

namespace {

std::pair<int, int> wit(const Verdict& v) {
    REQUIRE_FALSE(v.holds);
    return {v.a, v.b};
}

}  // namespace

TEST_CASE("delta-J membership and witnesses") {
    RingPtr Z6 = make_ring("Z6");
    LatticePtr l6 = all_ideals(Z6);
    ExpansionFn d0_6 = make_identity_expansion(Z6, l6);

    // (2) in Z6: 2*3 = 0 lands in the ideal, 2 is not in J(R) = (0),
    // 3 is not in (2)
    Ideal two6 = ideal_generated(Z6, {2});
    REQUIRE(wit(is_delta_J_ideal(two6, d0_6)) == std::pair{2, 3});

    RingPtr Z12 = make_ring("Z12");
    LatticePtr l12 = all_ideals(Z12);
    ExpansionFn d1_12 = make_radical_expansion(Z12, l12);

    Ideal four = ideal_generated(Z12, {4});
    REQUIRE(wit(is_delta_J_ideal(four, d1_12)) == std::pair{4, 3});
    REQUIRE(wit(is_quasi_J_ideal(*l12, four)) == std::pair{4, 3});

    Ideal six = ideal_generated(Z12, {6});
    REQUIRE(wit(is_J_ideal(*l12, six)) == std::pair{3, 4});

    // under delta1 the radical absorbs the failure: (4) is delta1-primary
    REQUIRE(is_delta_primary(four, d1_12));
    REQUIRE(wit(is_delta_primary(ideal_generated(Z6, {0}), d0_6)) == std::pair{2, 3});
}

TEST_CASE("witness pairs follow the canonical scan order") {
    // least violating pair ordered by (product, a, b); re-derive by brute
    // force for (4) in Z12 against the radical expansion
    RingPtr R = make_ring("Z12");
    LatticePtr lat = all_ideals(R);
    Ideal I = ideal_generated(R, {4});
    const Ideal& jac = lat->at(lat->jacobson_idx);
    const Ideal& rad = lat->at(lat->rad[lat->find(I)]);

    std::pair<int, int> first{-1, -1};
    for (int c : I.members) {
        for (int a = 0; a < R->order && first.first < 0; ++a) {
            if (jac.mask[a]) continue;
            for (int b = 0; b < R->order; ++b)
                if (!rad.mask[b] && R->mul(a, b) == c) {
                    first = {a, b};
                    break;
                }
        }
        if (first.first >= 0) break;
    }
    REQUIRE(first == std::pair{4, 3});
    Verdict v = is_quasi_J_ideal(*lat, I);
    REQUIRE(std::pair{v.a, v.b} == first);
}

TEST_CASE("local ring classes") {
    // Z4 is quasi-local with J = sqrt(0) = (2): every proper ideal is an
    // n-ideal, J-ideal and quasi-J-ideal at once
    RingPtr Z4 = make_ring("Z4");
    LatticePtr lat = all_ideals(Z4);
    Ideal two = ideal_generated(Z4, {2});
    REQUIRE(is_n_ideal(*lat, two));
    REQUIRE(is_J_ideal(*lat, two));
    REQUIRE(is_quasi_J_ideal(*lat, two));
    REQUIRE(is_delta_n_ideal(two, make_identity_expansion(Z4, lat)));
}

TEST_CASE("non-local rings have no quasi-J ideals") {
    RingPtr R = make_ring("Z2xZ4");
    LatticePtr lat = all_ideals(R);
    REQUIRE_FALSE(lat->quasi_local);
    std::vector<std::string> hits;
    for (int i = 0; i < lat->count(); ++i) {
        if (i == lat->unit_idx) continue;
        if (is_quasi_J_ideal(*lat, lat->at(i))) hits.push_back(lat->at(i).display());
    }
    REQUIRE(hits.empty());
}

TEST_CASE("classification requires a proper ideal") {
    RingPtr R = make_ring("Z6");
    LatticePtr lat = all_ideals(R);
    Ideal unit = ideal_generated(R, {1});
    ExpansionFn d0 = make_identity_expansion(R, lat);
    REQUIRE_THROWS_AS(is_delta_J_ideal(unit, d0), domain_error);
    REQUIRE_THROWS_AS(is_J_ideal(*lat, unit), domain_error);
    REQUIRE_THROWS_AS(is_n_ideal(*lat, unit), domain_error);
    REQUIRE_THROWS_AS(is_delta_primary(unit, d0), domain_error);

    // mismatched ring and expansion is also rejected
    RingPtr other = make_ring("Z6");
    LatticePtr olat = all_ideals(other);
    REQUIRE_THROWS_AS(is_delta_J_ideal(ideal_generated(other, {2}), d0), domain_error);

    // the profile itself does not throw: it records the unit ideal as improper
    IdealProfile p = ideal_profile(lat, unit, {});
    REQUIRE_FALSE(p.proper);
    REQUIRE_FALSE(p.prime);
}

TEST_CASE("ideal profiles") {
    RingPtr R = make_ring("Z12");
    LatticePtr lat = all_ideals(R);
    std::vector<ExpansionFn> deltas = registered_expansions(R, lat);

    IdealProfile p = ideal_profile(lat, ideal_generated(R, {4}), deltas);
    REQUIRE(p.proper);
    REQUIRE_FALSE(p.prime);
    REQUIRE(p.primary);
    REQUIRE_FALSE(p.maximal);
    REQUIRE(p.maximal_witness == "(2)");
    REQUIRE_FALSE(p.quasi_J_ideal);
    REQUIRE(p.quasi_J_ideal_witness == std::pair{4, 3});
    REQUIRE(p.expansions.size() == deltas.size());
    REQUIRE(p.expansions[0].delta == "delta0");
    REQUIRE(p.expansions[1].delta == "delta1");
    REQUIRE(p.expansions[1].delta_primary);

    IdealProfile m = ideal_profile(lat, ideal_generated(R, {2}), deltas);
    REQUIRE(m.prime);
    REQUIRE(m.maximal);
    REQUIRE_FALSE(m.superfluous);
    REQUIRE(m.superfluous_witness == "(3)");
}

TEST_CASE("profile serialization") {
    RingPtr R = make_ring("Z12");
    LatticePtr lat = all_ideals(R);
    std::vector<ExpansionFn> deltas = registered_expansions(R, lat);
    json j = profile_to_json(ideal_profile(lat, ideal_generated(R, {4}), deltas));

    REQUIRE(j["ring"] == "Z12");
    REQUIRE(j["ideal"] == "(4)");
    REQUIRE(j["proper"] == true);
    REQUIRE(j["prime"] == false);
    REQUIRE(j["primary"] == true);
    REQUIRE(j["quasi_J_ideal"] == false);
    REQUIRE(j["witnesses"]["quasi_J_ideal"] == json::array({"4", "3"}));
    REQUIRE(j["witnesses"].contains("maximal"));
    REQUIRE_FALSE(j["witnesses"].contains("primary"));
    REQUIRE(j["expansions"].is_array());
    REQUIRE(j["expansions"].size() == deltas.size());
    REQUIRE(j["expansions"][0]["delta"] == "delta0");
    REQUIRE(j["expansions"][0].contains("delta_J_ideal"));
    REQUIRE(j["expansions"][0]["witnesses"].is_object());
}
