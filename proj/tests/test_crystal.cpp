#include <chrono>

#include "doctest.h"
#include "kn/crystal.hpp"
#include "support.hpp"

using namespace kn;

TEST_CASE("KN((2,1),2) has sixteen vertices") {
    auto t0 = std::chrono::steady_clock::now();
    CrystalGraph g = generate_crystal(parse_tableau("1,1/2", 2));
    CHECK(g.size() == 16);
    CHECK(g.ncomponents == 1);
    CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(1));
}

TEST_CASE("operators are partial inverses with matching string lengths") {
    for (auto& t : kn_straight_universe(2, 4))
        for (int i = 1; i <= 2; ++i) {
            CHECK(eps_phi(t, i) == eps_phi_by_iteration(t, i));
            if (auto f = f_op(t, i)) CHECK(*e_op(*f, i) == t);
        }
}

TEST_CASE("branching keeps one source per component") {
    CrystalGraph g = generate_crystal(yamanouchi({2, 1}, 3));
    for (auto& J : testing::color_subsets(3)) {
        auto ex = testing::extremes(branch(g, J));
        for (int s : ex.sources) CHECK(s == 1);
        for (int s : ex.sinks) CHECK(s == 1);
    }
}

TEST_CASE("characters are Weyl symmetric") {
    for (auto& lam : partitions_upto(4, 2)) {
        std::string why;
        CHECK_MESSAGE(character_symmetric(character(generate_crystal(yamanouchi(lam, 2))), false, &why), why);
    }
}

TEST_CASE("reflections on weights") {
    CHECK(reflect({2, 0}, 1, false) == Weight{0, 2});
    CHECK(reflect({2, 1}, 2, false) == Weight{2, -1});
}
