#include <set>

#include "catch_amalgamated.hpp"
#include "deltaj/deltaj.hpp"

using namespace deltaj;

TEST_CASE("cyclic rings") {
    RingPtr R = make_ring("Z12");
    REQUIRE(R->order == 12);
    REQUIRE(R->zero == 0);
    REQUIRE(R->one == 1);
    REQUIRE(R->add(7, 8) == 3);
    REQUIRE(R->mul(7, 8) == 8);
    REQUIRE(R->neg(5) == 7);
    REQUIRE(R->sub(3, 5) == 10);
    REQUIRE(R->name(11) == "11");
    REQUIRE(R->spec == "Z12");

    REQUIRE(units(*R) == std::vector<int>{1, 5, 7, 11});
    REQUIRE_FALSE(R->is_unit(6));

    REQUIRE_THROWS_AS(make_zn(1), domain_error);
    REQUIRE_THROWS_AS(make_zn(0), domain_error);
}

TEST_CASE("product rings") {
    RingPtr P = make_ring("Z2xZ3");
    REQUIRE(P->order == 6);
    REQUIRE(P->name(P->one) == "(1,1)");

    // componentwise arithmetic: (1,2)+(1,2) = (0,1), (1,2)*(1,2) = (1,1)
    int a = P->add(P->one, P->one);  // not used as index arithmetic: look up by names
    (void)a;
    int e12 = -1;
    for (int i = 0; i < P->order; ++i)
        if (P->name(i) == "(1,2)") e12 = i;
    REQUIRE(e12 >= 0);
    REQUIRE(P->name(P->add(e12, e12)) == "(0,1)");
    REQUIRE(P->name(P->mul(e12, e12)) == "(1,1)");

    std::vector<std::string> idem;
    for (int i : idempotents(*P)) idem.push_back(P->name(i));
    REQUIRE(idem == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});

    RingPtr Q = make_ring("Z2xZ2");
    std::vector<std::string> us;
    for (int u : units(*Q)) us.push_back(Q->name(u));
    REQUIRE(us == std::vector<std::string>{"(1,1)"});

    // x associates: Z2xZ3xZ2 parses to a 12-element ring
    REQUIRE(make_ring("Z2xZ3xZ2")->order == 12);
}

TEST_CASE("polynomial quotient rings") {
    // the field with four elements
    RingPtr F4 = make_ring("Z2[x]/(x^2+x+1)");
    REQUIRE(F4->order == 4);
    std::vector<std::string> names;
    for (int i = 0; i < F4->order; ++i) names.push_back(F4->name(i));
    REQUIRE(names == std::vector<std::string>{"0", "1", "x", "x+1"});
    for (int i = 0; i < F4->order; ++i)
        if (i != F4->zero) REQUIRE(F4->is_unit(i));

    // x^2 = -1 = 2 makes Z3[x]/(x^2+1) the field with nine elements
    RingPtr F9 = make_ring("Z3[x]/(x^2+1)");
    REQUIRE(F9->order == 9);
    for (int i = 0; i < F9->order; ++i)
        if (i != F9->zero) REQUIRE(F9->is_unit(i));

    // x is nilpotent in Z2[x]/(x^2)
    RingPtr N = make_ring("Z2[x]/(x^2)");
    int x = -1;
    for (int i = 0; i < N->order; ++i)
        if (N->name(i) == "x") x = i;
    REQUIRE(N->mul(x, x) == N->zero);

    REQUIRE_THROWS_AS(make_ring("Z4[x]/(x^2+1)"), domain_error);  // 4 not prime
    REQUIRE_THROWS_AS(make_ring("Z2[x]/(x^4+1)"), domain_error);  // degree cap
}

TEST_CASE("ring axiom verification") {
    for (const char* spec : {"Z12", "Z2xZ3", "Z2[x]/(x^2+x+1)", "Z8/(4)"})
        REQUIRE(verify_ring_axioms(*make_ring(spec)).pass());

    // breaking one multiplication entry must be caught
    FiniteRing bad = *make_ring("Z4");
    bad.mul_table[1 * 4 + 2] = 3;  // 1*2 := 3
    REQUIRE_FALSE(verify_ring_axioms(bad).pass());
}

TEST_CASE("ring spec parsing") {
    REQUIRE(make_ring(" Z4 x Z3 ")->spec == "Z4xZ3");
    REQUIRE(make_ring("(Z6)")->order == 6);

    REQUIRE_THROWS_AS(make_ring(""), parse_error);
    REQUIRE_THROWS_AS(make_ring("Q7"), parse_error);
    REQUIRE_THROWS_AS(make_ring("Zx"), parse_error);
    REQUIRE_THROWS_AS(make_ring("Z2[x]/(x^2"), parse_error);

    // identical specs give identical tables
    RingPtr a = make_ring("Z6xZ2");
    RingPtr b = make_ring("Z6xZ2");
    REQUIRE(a->add_table == b->add_table);
    REQUIRE(a->mul_table == b->mul_table);
    REQUIRE(a->element_names == b->element_names);
}

TEST_CASE("order cap") {
    REQUIRE_THROWS_AS(make_ring("Z300"), cap_error);
    REQUIRE_THROWS_AS(make_ring("Z20xZ20"), cap_error);
    REQUIRE(make_ring("Z256")->order == 256);
}
