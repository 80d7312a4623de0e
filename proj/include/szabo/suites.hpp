#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szabo/fixtures.hpp"

namespace szabo {

struct SuiteResult {
    std::string name;
    int passed = 0, failed = 0;
    std::vector<std::string> notes;  // one line per failure or finding
    bool ok() const { return failed == 0; }
    void record(bool good, const std::string& what);
};

// Shared by the CLI selftest and the acceptance binary.  Every suite runs
// over the given fixtures; `decorations` random decorations are drawn from
// `seed`.
SuiteResult suite_d_squared(const std::vector<const Fixture*>& fx, int decorations, std::uint64_t seed);
SuiteResult suite_oracle(const std::vector<const Fixture*>& fx);
SuiteResult suite_decoration_invariance(const std::vector<const Fixture*>& fx, int decorations, std::uint64_t seed);
SuiteResult suite_diagram_invariance(const std::vector<std::pair<std::string, std::string>>& pairs);
SuiteResult suite_reduced_quotient(const std::vector<const Fixture*>& fx);
SuiteResult suite_chain_map(const std::vector<const Fixture*>& fx, int decorations, std::uint64_t seed);
SuiteResult suite_deformation(const std::vector<const Fixture*>& fx);
SuiteResult suite_strategies(const std::vector<const Fixture*>& fx);
SuiteResult suite_delta_thin(const std::vector<const Fixture*>& fx);
SuiteResult suite_connect_sum();
SuiteResult suite_torus();
// findings only: failures are reported in notes but the suite never fails
SuiteResult suite_twin_arrows(const std::vector<const Fixture*>& fx);

struct FixtureCheck {
    bool pass = false;
    std::string convention;  // direct | mirror | none
    int collapse = 0;
    double seconds = 0;
    std::vector<std::string> lines;
};

// Reduced pages of f against its table; `perturb` corrupts the expected
// table first (a falsifiability control).
FixtureCheck verify_fixture(const Fixture& f, bool perturb = false);

// Fixtures with tabulated pages / with at most `max_n` crossings.
std::vector<const Fixture*> tabulated_fixtures();
std::vector<const Fixture*> fixtures_up_to(int max_n);

}  // namespace szabo
