#include "doctest.h"
#include "kn/words.hpp"

using namespace kn;

TEST_CASE("japanese reading word") {
    Tableau t = parse_tableau("1,2/-2", 2);
    CHECK(reading_word(t) == Word{2, 1, -2});
}

TEST_CASE("knuth moves preserve the plactic class") {
    Tableau t = parse_tableau("1,2/-2,-1", 2);
    Word w = reading_word(t);
    CHECK(plactic_normal_form(w, 2) == t);
    for (size_t pos = 0; pos + 3 <= w.size(); ++pos)
        for (Knuth r : {Knuth::R1a, Knuth::R1b, Knuth::R2a, Knuth::R2b}) {
            Word v;
            try {
                v = knuth_step(w, (int)pos, r, 2);
            } catch (const Error&) {
                continue;
            }
            CHECK(plactic_equivalent(v, w, 2));
        }
}

TEST_CASE("R3 contraction shortens by a pair") {
    Word w{1, -1};
    Word v = knuth_step(w, 0, Knuth::R3contract, 1, 0, 2);
    CHECK(v.empty());
}

TEST_CASE("column insertion round trip") {
    Word w{3, 1, 2, 2, 1, 3};
    Inserted ins = column_insert_A(make_tableau(3, {}, {}, true), w, 3);
    CHECK(ins.p.outer() == ins.q.outer());
    CHECK(reverse_column_insert_A(ins.p, ins.q) == w);
}
