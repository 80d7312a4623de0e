// Timing of complex assembly and page computation on one diagram.
#include <chrono>
#include <cstdio>
#include <string>

#include "szabo/fixtures.hpp"

using namespace szabo;

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
    std::string name = argc > 1 ? argv[1] : "T(3,5)";
    bool with_reference = argc > 2 && std::string(argv[2]) == "--reference";
    Diagram d = fixture(name).diagram();
    Decoration t = default_decoration(d);
    ChainComplex c;
    BuildOptions par, ser;
    ser.parallel = false;

    std::printf("%s: %d crossings\n", name.c_str(), d.n());
    std::printf("build (parallel)  %8.3fs\n", seconds([&] { c = build_complex(d, t, par); }));
    std::printf("build (serial)    %8.3fs\n", seconds([&] { build_complex(d, t, ser); }));
    if (with_reference) std::printf("build (reference) %8.3fs\n", seconds([&] { build_complex_reference(d, t); }));
    std::printf("generators %zu, terms %zu\n", c.size(), c.terms());
    SpectralResult r;
    std::printf("pages (min-fill)  %8.3fs\n", seconds([&] { r = compute_pages(c); }));
    std::printf("pages (index)     %8.3fs\n", seconds([&] { compute_pages(c, PivotStrategy::IndexOrder); }));
    std::printf("collapse E^%d, E^inf rank %llu\n", r.collapse(), static_cast<unsigned long long>(r.pages.back().total()));
}
