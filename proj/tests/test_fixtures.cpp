#include "doctest.h"
#include "kn/fixtures.hpp"
#include "kn/tableau.hpp"

using namespace kn;

TEST_CASE("every fixture passes") {
    for (auto& name : fixture_names()) {
        FixtureReport r = run_fixture(name, KN_DATA_DIR);
        CHECK_MESSAGE(r.pass(), r.text(true));
    }
}

TEST_CASE("unknown fixture is an error") { CHECK_THROWS_AS(run_fixture("nope", KN_DATA_DIR), Error); }
