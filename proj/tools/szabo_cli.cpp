// szabo: compute / verify / selftest front end.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "szabo/suites.hpp"

using namespace szabo;

namespace {

enum Exit { kOk = 0, kParse = 2, kResource = 3, kVerifyFail = 4 };

struct Job {
    std::string pd, torus, fixture_name;
    bool reduced = false, unreduced = false, quotient = false;
    bool mirror_d = false, mirror = false, json = false;
    int basepoint = 0;  // PD label, 0 = default
    std::int64_t seed = -1;
    std::uint64_t max_generators = std::uint64_t{1} << 28;
    std::string strategy = "minfill";
};

Diagram parse_torus(const std::string& s) {
    static const std::regex re(R"(\s*(?:T\()?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw ParseError("torus spec must look like p,q or T(p,q): " + s);
    return torus_link(std::stoi(m[1]), std::stoi(m[2]));
}

Diagram job_diagram(const Job& j) {
    int given = !j.pd.empty() + !j.torus.empty() + !j.fixture_name.empty();
    if (given != 1) throw ParseError("give exactly one of --pd, --torus, --fixture");
    Diagram d;
    if (!j.pd.empty())
        d = j.pd.rfind("T(", 0) == 0 ? parse_torus(j.pd) : parse_pd(j.pd);
    else if (!j.torus.empty())
        d = parse_torus(j.torus);
    else {
        try {
            d = fixture(j.fixture_name).diagram();
        } catch (const std::out_of_range&) {
            throw ParseError("unknown fixture " + j.fixture_name);
        }
    }
    return j.mirror ? mirror_diagram(d) : d;
}

nlohmann::json page_json(const Page& p, bool last) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [ij, c] : p.poly().coeff) terms.push_back({ij.first, ij.second, c});
    return {{"k", p.k}, {"rank", p.total()}, {"final", last}, {"poly", p.poly().str()}, {"terms", terms}};
}

int cmd_compute(const Job& j) {
    Diagram d;
    try {
        d = job_diagram(j);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    }
    if (j.reduced + j.unreduced + j.quotient > 1) {
        std::cerr << "parse error: --reduced, --unreduced and --quotient are exclusive\n";
        return kParse;
    }
    BuildOptions o;
    o.part = j.reduced ? Part::Reduced : j.quotient ? Part::Quotient : Part::Full;
    o.variant = j.mirror_d ? Variant::Mirror : Variant::Standard;
    o.max_generators = j.max_generators;
    if (j.basepoint != 0) {
        try {
            o.basepoint = d.edge_of_label(j.basepoint);
        } catch (const std::exception&) {
            std::cerr << "parse error: no edge labelled " << j.basepoint << "\n";
            return kParse;
        }
    }
    Decoration t = j.seed < 0 ? default_decoration(d) : random_decoration(d, static_cast<std::uint64_t>(j.seed));
    PivotStrategy s = j.strategy == "index" ? PivotStrategy::IndexOrder : PivotStrategy::MinFill;

    SpectralResult r;
    try {
        r = compute_pages(build_complex(d, t, o), s);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource cap: " << e.what() << " (estimate " << e.estimate << " generators)\n";
        return kResource;
    }

    if (j.json) {
        nlohmann::json out;
        out["part"] = o.part == Part::Full ? "unreduced" : o.part == Part::Reduced ? "reduced" : "quotient";
        out["crossings"] = d.n();
        out["collapse"] = r.collapse();
        out["pages"] = nlohmann::json::array();
        for (auto& p : r.pages) out["pages"].push_back(page_json(p, p.k == r.collapse()));
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    for (auto& p : r.pages) {
        std::cout << "[rank " << p.total() << "] E^" << p.k;
        if (p.k == r.collapse()) std::cout << "=E^inf";
        std::cout << ": " << p.poly().str() << "\n";
    }
    return kOk;
}

int cmd_verify(const std::vector<std::string>& names, bool all, bool perturb) {
    std::vector<const Fixture*> sel;
    if (all || names.empty())
        sel = tabulated_fixtures();
    for (auto& n : names) {
        try {
            sel.push_back(&fixture(n));
        } catch (const std::out_of_range&) {
            std::cerr << "unknown fixture " << n << "\n";
            return kParse;
        }
    }
    int fails = 0;
    for (auto* f : sel) {
        auto c = verify_fixture(*f, perturb);
        fails += !c.pass;
        std::printf("%-10s %s  convention=%s collapse=E^%d  %.2fs\n", f->name.c_str(), c.pass ? "PASS" : "FAIL",
                    c.convention.c_str(), c.collapse, c.seconds);
        for (auto& l : c.lines) std::printf("    %s\n", l.c_str());
    }
    std::printf("%zu checked, %d failed\n", sel.size(), fails);
    return fails ? kVerifyFail : kOk;
}

int cmd_selftest(const std::string& scope, std::uint64_t seed, int max_n, int decorations) {
    std::set<std::string> want;
    std::stringstream ss(scope);
    for (std::string s; std::getline(ss, s, ',');) want.insert(s);
    auto on = [&](const char* s) { return want.count("all") || want.count(s); };
    auto fx = fixtures_up_to(max_n);

    std::vector<SuiteResult> rs;
    if (on("d2")) rs.push_back(suite_d_squared(fx, decorations, seed));
    if (on("chain")) rs.push_back(suite_chain_map(fx, 1, seed));
    if (on("decoration")) rs.push_back(suite_decoration_invariance(fx, decorations, seed));
    if (on("reduced")) rs.push_back(suite_reduced_quotient(fx));
    if (on("oracle")) rs.push_back(suite_oracle(fx));
    if (rs.empty()) {
        std::cerr << "scope must list d2, chain, decoration, reduced, oracle or all\n";
        return kParse;
    }
    bool ok = true;
    for (auto& r : rs) {
        std::printf("%-28s %s  %d passed, %d failed\n", r.name.c_str(), r.ok() ? "ok" : "FAIL", r.passed, r.failed);
        for (auto& n : r.notes) std::printf("    %s\n", n.c_str());
        ok &= r.ok();
    }
    std::printf("%zu fixtures with <= %d crossings, seed %llu\n", fx.size(), max_n,
                static_cast<unsigned long long>(seed));
    return ok ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* env = std::getenv("SZABO_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
    CLI::App app{"Spectral sequence pages for knot and link diagrams over F2"};
    app.require_subcommand(1);

    Job job;
    auto* compute = app.add_subcommand("compute", "print every page until collapse");
    compute->add_option("--pd", job.pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
    compute->add_option("--torus", job.torus, "torus link p,q");
    compute->add_option("--fixture", job.fixture_name, "embedded fixture name");
    compute->add_flag("--reduced", job.reduced);
    compute->add_flag("--unreduced", job.unreduced, "default");
    compute->add_flag("--quotient", job.quotient);
    compute->add_flag("--mirror-d", job.mirror_d, "use the mirror differential d'");
    compute->add_flag("--mirror", job.mirror, "mirror the diagram");
    compute->add_option("--basepoint", job.basepoint, "PD edge label of the base point");
    compute->add_option("--decoration-seed", job.seed, "random decoration; default decoration if omitted");
    compute->add_flag("--json", job.json);
    compute->add_option("--max-generators", job.max_generators);
    compute->add_option("--strategy", job.strategy, "minfill | index")->check(CLI::IsMember({"minfill", "index"}));

    std::vector<std::string> names;
    bool all = false, perturb = false;
    auto* verify = app.add_subcommand("verify", "compare reduced pages with the embedded tables");
    verify->add_option("names", names, "fixture names (default: all tabulated)");
    verify->add_flag("--all", all);
    verify->add_flag("--perturb", perturb, "corrupt each expected table first");

    std::string scope = "all";
    std::uint64_t seed = 1;
    int max_n = 9, decorations = 5;
    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
    selftest->add_option("--scope", scope, "comma list of d2, chain, decoration, reduced, oracle, all");
    selftest->add_option("--seed", seed);
    selftest->add_option("--max-crossings", max_n);
    selftest->add_option("--decorations", decorations);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }
    try {
        if (*compute) return cmd_compute(job);
        if (*verify) return cmd_verify(names, all, perturb);
        return cmd_selftest(scope, seed, max_n, decorations);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kResource;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    }
}
