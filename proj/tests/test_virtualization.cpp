#include "doctest.h"
#include "kn/crystal.hpp"
#include "kn/virtualization.hpp"

using namespace kn;

TEST_CASE("letter maps") {
    CHECK(to_A_letter(-1, 3) == 6);
    CHECK(from_A_letter(4, 3) == -3);
    CHECK(lambda_A({2, 1}, 3) == Partition{4, 3, 2, 2, 1});
}

TEST_CASE("psi and its inverse") {
    for (int n = 1; n <= 4; ++n)
        for (int h = 1; h <= n; ++h)
            for (auto& c : admissible_columns(n, h)) CHECK(psi_inv(psi(c, n), n) == c);
}

TEST_CASE("E is injective with the fixed recording tableau") {
    for (auto& t : kn_straight_universe(2, 4)) {
        Embedded e = embed_E(t);
        CHECK(e.q == build_Q_lambda(t.outer(), 2));
        CHECK(invert_E(e.p, t.outer(), 2) == t);
    }
}

TEST_CASE("virtual operators intertwine") {
    for (auto& t : kn_straight_universe(3, 3))
        for (int i = 1; i <= 3; ++i) {
            auto f = f_op(t, i);
            auto v = virtual_f(embed_E(t).p, i, 3);
            REQUIRE((bool)f == (bool)v);
            if (f) CHECK(embed_E(*f).p == *v);
        }
}

TEST_CASE("partial xi squares") {
    for (auto& t : kn_straight_universe(3, 3))
        for (int p = 1; p <= 3; ++p)
            for (int q = p; q <= 3; ++q) {
                std::string why;
                CHECK_MESSAGE(check_diagram(t, p, q, &why), why);
            }
}
