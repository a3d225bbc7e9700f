#pragma once
// Worked examples shipped as JSON in data/fixtures, replayed check by check.

#include <string>
#include <vector>

namespace kn {

struct FixtureCheck {
    std::string what, expected, got;
    bool ok = false;
};

struct FixtureReport {
    std::string name;
    std::vector<FixtureCheck> checks;
    bool pass() const;
    int failures() const;
    std::string text(bool verbose = true) const;
    std::string json() const;
};

std::vector<std::string> fixture_names();
// throws kn::Error on a missing or malformed file
FixtureReport run_fixture(const std::string& name, const std::string& dir);

}  // namespace kn
