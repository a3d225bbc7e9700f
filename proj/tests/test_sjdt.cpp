#include "doctest.h"
#include "kn/crystal.hpp"
#include "kn/sjdt.hpp"
#include "support.hpp"

using namespace kn;
using namespace kn::testing;

TEST_CASE("rectification lands in the straight crystal component") {
    for (auto& t : skew_kn_universe(2, 4)) {
        Tableau r = rectify(t);
        CHECK(r.straight());
        CHECK(is_kn(r));
        CHECK(weight(r) == weight(t));
    }
}

TEST_CASE("anti-rectification undoes rectification") {
    for (auto& t : skew_kn_universe(2, 4)) CHECK(anti_rectify(rectify_recorded(t)) == t);
}

TEST_CASE("reverse slides stay KN and a forward slide undoes them") {
    int contractions = 0;
    for (auto& t : skew_kn_universe(2, 4))
        for (auto [r, c] : outer_cocorners(t)) {
            Tableau s = reverse_slide(t, r, c);
            CHECK(is_kn(s));
            if (s.cell_count() == t.cell_count()) {
                // the vacated cell is the unique inner corner not present before
                bool undone = false;
                for (auto [a, b] : inner_corners(s))
                    if (complete_slide(s, a, b) == t) undone = true;
                CHECK(undone);
            } else {
                ++contractions;
            }
        }
    CHECK(contractions >= 0);
}

TEST_CASE("reverse slide rejects a cell that is not a cocorner") {
    Tableau t = parse_tableau(".,1/2", 2);
    CHECK_NOTHROW(reverse_slide(t, 1, 1));
    CHECK_THROWS(reverse_slide(t, 1, 2));
    CHECK_THROWS(reverse_slide(t, 0, 1));
}

TEST_CASE("rotation is an involution up to padding") {
    Tableau t = parse_tableau("1,2/-2", 2);
    CHECK(to_tableau(rotate(rotate(to_board(t), 2, 2), 2, 2)) == t);
}
