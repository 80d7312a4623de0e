#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace szabo;
using namespace testing;

namespace {

ConfigMap standard = [](const Configuration& c, Mask a) { return d_map(c, a, Variant::Standard); };
ConfigMap mirrored = [](const Configuration& c, Mask a) { return d_map(c, a, Variant::Mirror); };

bool has_type(const Classification& cl, Family f) {
    return std::any_of(cl.types.begin(), cl.types.end(), [&](const ConfigType& t) { return t.family == f; });
}

}  // namespace

TEST_CASE("one-dimensional configurations are the Khovanov maps") {
    Diagram d = parse_pd(kTrefoilPD);
    for_each_face(d, default_decoration(d), [&](Resolution I, Resolution J, const Configuration& c) {
        if (weight(I ^ J) != 1) return;
        ConfigView w(active_part(c));
        auto cl = classify(c);
        if (w.t == 2) {  // join: m(1)=1, m(x1)=m(x2)=y, m(x1x2)=0
            CHECK(has_type(cl, Family::A));
            CHECK(d_map(c, 0) == std::vector<Mask>{0});
            CHECK(d_map(c, 1) == std::vector<Mask>{1});
            CHECK(d_map(c, 2) == std::vector<Mask>{1});
            CHECK(d_map(c, 3).empty());
        } else {  // split: 1 -> y1 + y2, x -> y1 y2
            CHECK(has_type(cl, Family::B));
            CHECK(d_map(c, 0) == std::vector<Mask>{1, 2});
            CHECK(d_map(c, 1) == std::vector<Mask>{3});
        }
    });
}

TEST_CASE("rule checks on every face") {
    for (auto& d : small_diagrams()) {
        Decoration t = random_decoration(d, 3);
        int faces = 0, nonzero = 0;
        for_each_face(d, t, [&](Resolution, Resolution, const Configuration& c) {
            ++faces;
            for (auto& f : {standard, mirrored}) {
                CHECK(check_grading(f, c));
                CHECK(check_filtration(f, c));
                CHECK(check_extension(f, c));
                CHECK(check_disconnected(f, c));
            }
            nonzero += !classify(c).terms.empty();
        });
        CHECK(faces > 0);
        CHECK(nonzero > 0);
    }
}

TEST_CASE("disconnected configurations vanish") {
    Diagram d = fixture("6_1").diagram();
    int seen = 0;
    for_each_face(d, default_decoration(d), [&](Resolution, Resolution, const Configuration& c) {
        if (!active_part(c).is_disconnected()) return;
        ++seen;
        ConfigView w(c);
        for (Mask a = 0; a < (Mask{1} << (w.t + c.passive)); ++a) CHECK(d_map(c, a).empty());
    });
    CHECK(seen > 0);
}

TEST_CASE("corrupted map fails a check") {
    // forget the output whenever the first passive circle carries x
    ConfigMap broken = [](const Configuration& c, Mask a) {
        auto out = d_map(c, a);
        ConfigView w(c);
        if (c.passive > 0 && ((a >> w.t) & 1)) out.clear();
        return out;
    };
    ConfigMap shifted = [](const Configuration& c, Mask a) {
        auto out = d_map(c, a);
        for (auto& b : out) b ^= 1;
        return out;
    };
    Diagram d = parse_pd(kTrefoilPD);
    bool grading_ok = true, extension_ok = true;
    for_each_face(d, default_decoration(d), [&](Resolution, Resolution, const Configuration& c) {
        grading_ok &= check_grading(shifted, c);
        extension_ok &= check_extension(broken, c);
    });
    CHECK_FALSE(grading_ok);
    CHECK_FALSE(extension_ok);
}

TEST_CASE("mirror variant is the standard map of the mirrored configuration") {
    for (auto& d : small_diagrams()) {
        for_each_face(d, random_decoration(d, 9), [&](Resolution, Resolution, const Configuration& c) {
            ConfigView w(c);
            for (Mask a = 0; a < (Mask{1} << (w.t + c.passive)); ++a)
                CHECK(d_map(c, a, Variant::Mirror) == d_map(mirror(c), a, Variant::Standard));
        });
    }
}

TEST_CASE("classification is invariant under relabelling arcs") {
    Diagram d = fixture("6_1").diagram();
    for_each_face(d, random_decoration(d, 2), [&](Resolution, Resolution, const Configuration& c0) {
        Configuration c = active_part(c0);
        if (c.arcs() < 2) return;
        auto p = [](int x) { return x < 6 ? x + 6 : x < 12 ? x - 6 : x; };
        Configuration s = c;
        for (int x = 0; x < c.darts(); ++x) {
            s.kind[p(x)] = c.kind[x];
            s.sigma[p(x)] = p(c.sigma[x]);
            s.alpha[p(x)] = p(c.alpha[x]);
        }
        auto a = classify(c), b = classify(s);
        std::vector<std::string> ta, tb;
        for (auto& t : a.types) ta.push_back(t.str());
        for (auto& t : b.types) tb.push_back(t.str());
        std::sort(ta.begin(), ta.end());
        std::sort(tb.begin(), tb.end());
        CHECK(ta == tb);
        CHECK(a.terms.size() == b.terms.size());
    });
}

TEST_CASE("edge homotopy") {
    Diagram d = parse_pd(kTrefoilPD);
    for_each_face(d, default_decoration(d), [&](Resolution I, Resolution J, const Configuration& c) {
        ConfigView w(c);
        if (weight(I ^ J) != 1) {
            for (Mask a = 0; a < (Mask{1} << (w.t + c.passive)); ++a) CHECK(homotopy_map(c, a).empty());
            return;
        }
        ConfigMap h = [](const Configuration& x, Mask a) { return homotopy_map(x, a); };
        CHECK(check_extension(h, c));
        CHECK(check_filtration(h, c));
        // independent of the arc orientation
        for (Mask a = 0; a < (Mask{1} << (w.t + c.passive)); ++a) CHECK(homotopy_map(c, a) == homotopy_map(reverse(c), a));
        if (w.t == 1) {
            CHECK(homotopy_map(c, 0) == std::vector<Mask>{0});
            CHECK(homotopy_map(c, 1).empty());
        } else {
            CHECK(homotopy_map(c, 3) == std::vector<Mask>{1});
            CHECK(homotopy_map(c, 0).empty());
            CHECK(homotopy_map(c, 1).empty());
        }
    });
}

TEST_CASE("type names") {
    CHECK(ConfigType{Family::A, 3, 0, false}.str() == "A(3)");
    CHECK(ConfigType{Family::C, 1, 2, true}.str() == "C'(1,2)");
    CHECK(ConfigType{Family::E, 0, 2, false}.str() == "E(0,2)");
}

TEST_CASE("reflection moves E(p,q) with p, q >= 1 out of family E") {
    // Joins of the arcs and of the dual arcs point the same way in E; the
    // reflection reverses the dual arcs only.
    auto has_mixed_e = [](const Classification& cl) {
        for (auto& x : cl.types)
            if (x.family == Family::E && x.p > 0 && x.q > 0) return true;
        return false;
    };
    int moved = 0, kept = 0;
    for (auto& d : small_diagrams())
        for_each_face(d, random_decoration(d, 4), [&](Resolution, Resolution, const Configuration& c) {
            auto act = active_part(c);
            if (act.darts() == 0 || act.is_disconnected() || !has_mixed_e(classify(act))) return;
            for (auto& x : classify(mirror(act)).types) kept += x.family == Family::E;
            ++moved;
        });
    CHECK(moved > 0);
    CHECK(kept == 0);
}
