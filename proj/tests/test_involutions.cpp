#include "doctest.h"
#include "kn/cactus.hpp"
#include "kn/crystal.hpp"
#include "kn/involutions.hpp"

using namespace kn;

TEST_CASE("evacuation is the lowest-to-highest involution") {
    for (auto& t : kn_straight_universe(2, 4)) {
        Tableau e = evacuation_C(t);
        CHECK(evacuation_C(e) == t);
        CHECK(e == xi_oracle(t, 1, 2));
    }
}

TEST_CASE("partial reversal by switching matches the crystal") {
    for (auto& t : kn_straight_universe(3, 3))
        for (int j = 1; j <= 3; ++j) CHECK(colorful_partial_reversal(t, j) == xi_oracle(t, j, 3));
}

TEST_CASE("trace stages are labelled") {
    Trace tr;
    colorful_partial_reversal(parse_tableau("1,2/-2", 2), 2, &tr);
    CHECK_FALSE(tr.empty());
}

TEST_CASE("symplectic bender-knuth is an involution and t2t1t2t1 is not xi") {
    for (auto& t : kn_straight_universe(2, 3))
        for (int i = 1; i <= 3; ++i) CHECK(symplectic_bk(symplectic_bk(t, i), i) == t);
    Tableau t = parse_tableau("2,-1/-2", 2);
    Tableau w = act({{Family::BkC, 2, 0}, {Family::BkC, 1, 0}, {Family::BkC, 2, 0}, {Family::BkC, 1, 0}}, t);
    CHECK(render(w) == "1,-2/2");
    CHECK(render(xi_oracle(t, 1, 2)) == "1,2/-2");
}

TEST_CASE("reflections agree with the crystal on strings") {
    for (auto& t : kn_straight_universe(2, 3))
        for (int i = 1; i <= 2; ++i) CHECK(reflection_xi(t, i) == xi_oracle(t, i, i));
}
