#include "doctest.h"
#include "kn/cactus.hpp"
#include "kn/crystal.hpp"

using namespace kn;

TEST_CASE("suites hold on a small universe") {
    Universe u(kn_straight_universe(2, 3));
    for (auto kind : {"jsp", "bkc", "weyl"}) {
        Report r = verify(enumerate_relations(kind, 2), u);
        CHECK_MESSAGE(r.pass(), r.text());
        CHECK(r.relations > 0);
    }
}

TEST_CASE("words act right to left") {
    Tableau t = parse_tableau("1,1/2", 2);
    Generator a{Family::BkC, 1, 0}, b{Family::BkC, 2, 0};
    CHECK(act({a, b}, t) == apply_generator(a, apply_generator(b, t)));
    CHECK(power({a, b}, 2).size() == 4);
}

TEST_CASE("a false relation is detected") {
    Universe u(kn_straight_universe(2, 3));
    RelationSuite bogus{"bogus", 2, {{"t1 = 1", {{Family::BkC, 1, 0}}, {}}}};
    CHECK_FALSE(verify(bogus, u).pass());
    CHECK(probe_nonrelation("t1", {{Family::BkC, 1, 0}}, {}, u).found);
}
