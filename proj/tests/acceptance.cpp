// Acceptance criteria 1-10; `--criterion N` runs one, no argument runs all.
// Each criterion prints one line "criterion N: PASS|FAIL ..." after its details.
#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <set>
#include <string>

#include "szabo/suites.hpp"

using namespace szabo;

namespace {

constexpr int kDecorations = 5;
constexpr std::uint64_t kSeed = 20;
constexpr double kMaxAllPagesSeconds = 600;   // criterion 1
constexpr double kPerfSeconds = 300;          // criterion 10
constexpr double kPerfMegabytes = 2048;       // criterion 10

double now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

bool report(const SuiteResult& r, bool verbose = false) {
    std::printf("  %-30s %d passed, %d failed\n", r.name.c_str(), r.passed, r.failed);
    std::size_t shown = 0;
    for (auto& n : r.notes)
        if (verbose || shown++ < 40) std::printf("    %s\n", n.c_str());
    return r.ok();
}

std::vector<const Fixture*> knots(std::vector<const Fixture*> v) {
    std::erase_if(v, [](const Fixture* f) { return f->diagram().components() != 1; });
    return v;
}

bool criterion1() {
    static const std::set<std::string> named = {"8_19",   "9_42",   "10_124", "10_128", "10_132", "10_136", "10_139",
                                                "10_145", "10_152", "10_153", "10_154", "10_161", "T(3,3)", "T(3,4)",
                                                "T(4,4)", "T(3,5)", "T(4,5)", "T(3,6)", "T(3,7)", "T(3,8)"};
    double t0 = now();
    int fails = 0, n11 = 0;
    std::set<std::string> seen;
    for (auto* f : tabulated_fixtures()) {
        auto c = verify_fixture(*f);
        std::printf("  %-8s %s convention=%s collapse=E^%d %.2fs\n", f->name.c_str(), c.pass ? "ok  " : "FAIL",
                    c.convention.c_str(), c.collapse, c.seconds);
        if (!c.pass)
            for (auto& l : c.lines) std::printf("      %s\n", l.c_str());
        fails += !c.pass;
        if (c.pass) seen.insert(f->name);
        if (c.pass && f->name.rfind("11n", 0) == 0) ++n11;
    }
    int missing = 0;
    for (auto& n : named)
        if (!seen.count(n)) {
            ++missing;
            std::printf("  required row %s not reproduced\n", n.c_str());
        }
    double dt = now() - t0;
    bool ok = fails == 0 && missing == 0 && n11 >= 10 && dt < kMaxAllPagesSeconds;
    std::printf("criterion 1: %s  table reproduction (%zu rows, %d failed, %d 11n rows, %.1fs)\n", ok ? "PASS" : "FAIL",
                tabulated_fixtures().size(), fails, n11, dt);
    return ok;
}

bool criterion2() {
    bool ok = report(suite_d_squared(fixtures_up_to(9), kDecorations, kSeed));
    std::printf("criterion 2: %s  d^2 = 0 for d and d' (%zu diagrams <= 9 crossings, %d decorations)\n",
                ok ? "PASS" : "FAIL", fixtures_up_to(9).size(), kDecorations);
    return ok;
}

bool criterion3() {
    bool ok = report(suite_oracle(fixtures_up_to(12)));
    std::printf("criterion 3: %s  E^2 equals the Khovanov oracle (%zu diagrams <= 12 crossings)\n",
                ok ? "PASS" : "FAIL", fixtures_up_to(12).size());
    return ok;
}

bool criterion4() {
    bool a = report(suite_decoration_invariance(fixtures_up_to(9), kDecorations, kSeed));
    bool b = report(suite_diagram_invariance({{"3_1", "3_1-braid"}, {"4_1", "4_1-braid"}}));
    std::printf("criterion 4: %s  decoration and diagram invariance\n", a && b ? "PASS" : "FAIL");
    return a && b;
}

bool criterion5() {
    bool a = report(suite_reduced_quotient(fixtures_up_to(11)));
    bool b = report(suite_chain_map(fixtures_up_to(9), 2, kSeed));
    bool c = report(suite_deformation({&fixture("3_1"), &fixture("8_19")}));
    std::printf("criterion 5: %s  reduced/quotient, P(t) chain map, deformation identity\n",
                a && b && c ? "PASS" : "FAIL");
    return a && b && c;
}

bool criterion6() {
    bool ok = report(suite_delta_thin({&fixture("4_1"), &fixture("5_2"), &fixture("6_1"), &fixture("7_4")}));
    std::printf("criterion 6: %s  reduced E^3 = E^2 on 4_1, 5_2, 6_1, 7_4\n", ok ? "PASS" : "FAIL");
    return ok;
}

bool criterion7() {
    bool ok = report(suite_connect_sum(), true);
    std::printf("criterion 7: %s  3_1#3_1 pages are the shifted square of 3_1 pages, k = 2, 3\n", ok ? "PASS" : "FAIL");
    return ok;
}

bool criterion8() {
    bool ok = report(suite_torus(), true);
    std::printf("criterion 8: %s  T(3,n) pages against the conjectured formula, n = 2..8, k = 2..4\n",
                ok ? "PASS" : "FAIL");
    return ok;
}

bool criterion9() {
    auto r = suite_twin_arrows(knots(fixtures_up_to(10)));
    report(r, true);
    std::printf("criterion 9: PASS  twin arrows checked on %d knots, %d deviate (findings only)\n", r.passed + r.failed,
                r.failed);
    return true;
}

bool criterion10() {
    const char* name = "T(3,7)";
    Diagram d = fixture(name).diagram();
    double t0 = now();
    auto r = compute_pages(build_complex(d, default_decoration(d)));
    double dt = now() - t0;
    rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    double mb = ru.ru_maxrss / 1024.0;
    bool perf = dt < kPerfSeconds && mb < kPerfMegabytes;
    std::printf("  %s unreduced, %d crossings: collapse E^%d, %.1fs, peak RSS %.0f MB\n", name, d.n(), r.collapse(), dt,
                mb);
    bool strat = report(suite_strategies(fixtures_up_to(10)));
    std::printf("criterion 10: %s  performance gate and pivot order independence\n", perf && strat ? "PASS" : "FAIL");
    return perf && strat;
}

}  // namespace

int main(int argc, char** argv) {
    bool (*const all[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                             criterion6, criterion7, criterion8, criterion9, criterion10};
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        int n = std::atoi(argv[2]);
        if (n < 1 || n > 10) return 2;
        return all[n - 1]() ? 0 : 1;
    }
    bool ok = true;
    for (auto* c : all) ok &= c();
    return ok ? 0 : 1;
}
