#include "doctest.h"
#include "kn/tableau.hpp"
#include "support.hpp"

using namespace kn;

TEST_CASE("admissibility of the two small columns") {
    CHECK(is_admissible({2, -2}, 2));
    CHECK_FALSE(is_admissible({1, -1}, 2));
    CHECK(admissible_violation({1, -1}, 2) == 1);
}

TEST_CASE("counting and witness definitions agree") {
    for (int n = 1; n <= 4; ++n) {
        auto alpha = testing::alphabet(n);
        int m = (int)alpha.size();
        for (int mask = 1; mask < (1 << m); ++mask) {
            Column c;
            for (int k = 0; k < m; ++k)
                if (mask >> k & 1) c.push_back(alpha[k]);
            CHECK(is_admissible(c, n) == is_admissible_by_witness(c, n));
        }
    }
}

TEST_CASE("split of an admissible column") {
    Split s = split_column({2, -2}, 2);
    CHECK(s.l == Column{1, -2});
    CHECK(s.r == Column{2, -1});
    CHECK_THROWS_AS(split_column({1, -1}, 2), Error);
}

TEST_CASE("phi is a bijection onto coadmissible columns") {
    for (int n = 1; n <= 4; ++n)
        for (int h = 1; h <= n; ++h)
            for (auto& c : admissible_columns(n, h)) {
                Column d = phi(c, n);
                CHECK(is_coadmissible(d, n));
                CHECK(phi_inv(d, n) == c);
            }
}

TEST_CASE("KN rejects a split that is not semistandard") {
    Tableau t = parse_tableau("2,2/-2,-2", 2);
    std::string why;
    REQUIRE_FALSE(is_kn(t, &why));
    CHECK(why.find("split not semi-standard") != std::string::npos);
    CHECK(is_kn(parse_tableau("1,1/2", 2)));
}

TEST_CASE("parse and render") {
    for (std::string s : {"1,2/-2", "*,1/2,-1", "1,-2,-1/2,-1"}) {
        Tableau t = parse_tableau(s, 2);
        CHECK(render(t) == s);
        CHECK(from_json(to_json(t)) == t);
    }
    CHECK_THROWS(parse_tableau("1,x", 2));
}

TEST_CASE("weights and windows") {
    Tableau t = parse_tableau("1,-2/2", 2);
    CHECK(weight(t) == Weight{1, 0});
    CHECK(window(Weight{1, 2, 3, 4}, 2, 3) == Weight{2, 3});
}

TEST_CASE("brute-force KN fillings of a small shape") {
    // KN((1),n) is the standard 2n-dimensional crystal
    CHECK(testing::kn_fillings({1}, {}, 3).size() == 6);
    CHECK(testing::kn_fillings({1, 1}, {}, 2).size() == 5);
}
