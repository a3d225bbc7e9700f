#include "doctest.h"
#include "kn/cactus.hpp"
#include "kn/type_a.hpp"

using namespace kn;

TEST_CASE("bender-knuth and evacuation are involutions") {
    for (auto& t : ssyt_straight_universe(4, 4)) {
        for (int i = 1; i < 4; ++i) CHECK(bender_knuth_A(bender_knuth_A(t, i), i) == t);
        CHECK(evacuation_A(evacuation_A(t, 4), 4) == t);
        CHECK(partial_xi_A(partial_xi_A(t, 1, 2), 1, 2) == t);
    }
}

TEST_CASE("evacuation factors through bender-knuth") {
    for (auto& t : ssyt_straight_universe(3, 4)) CHECK(evacuation_A(t, 3) == bk_q_A(t, 2));
}

TEST_CASE("type-A cactus relations") {
    Universe u(ssyt_straight_universe(4, 4));
    Report r = verify(enumerate_relations("jn", 3), u);
    CHECK_MESSAGE(r.pass(), r.text());
}
