#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "helpers.hpp"

using namespace szabo;
using namespace testing;

TEST_CASE("trefoil resolutions") {
    Diagram d = parse_pd(kTrefoilPD);
    // left-handed trefoil: the all-1 resolution is the oriented (Seifert)
    // one with 2 circles; the all-0 resolution has 3
    CHECK(resolve(d, 0b000).count == 3);
    CHECK(resolve(d, 0b111).count == 2);
    CHECK(resolve(Diagram::unknot(), 0).count == 1);
    ResolutionTable res(d);
    int total = 0;
    for (Resolution I = 0; I < 8; ++I) total += 1 << res.circles(I);
    CHECK(total == 30);
}

TEST_CASE("every edge lies on exactly one circle") {
    for (auto& d : small_diagrams()) {
        ResolutionTable res(d);
        for (Resolution I = 0; I < res.size(); ++I) {
            CircleSet cs = resolve(d, I);
            std::size_t seen = 0;
            for (auto& w : cs.walk) seen += w.size();
            CHECK(seen == static_cast<std::size_t>(2 * d.n()));
            for (int c = 0; c < d.n(); ++c)
                for (int s = 0; s < 4; ++s)
                    CHECK(res.circle_of_slot(I, c, s) == cs.edge_circle[d.edge_at(c, s)]);
        }
    }
}

TEST_CASE("one-faces change the circle count by one") {
    for (auto& d : small_diagrams()) {
        ResolutionTable res(d);
        for (Resolution I = 0; I < res.size(); ++I)
            for (int c = 0; c < d.n(); ++c)
                if (!((I >> c) & 1)) CHECK(std::abs(res.circles(I | (Resolution{1} << c)) - res.circles(I)) == 1);
    }
}

TEST_CASE("configurations match the resolutions at both ends") {
    for (auto& d : small_diagrams()) {
        ResolutionTable res(d);
        Decoration t = random_decoration(d, 11);
        for_each_face(d, t, [&](Resolution I, Resolution J, const Configuration& c) {
            int ns = 0, ne = 0;
            auto st = c.start_circles(&ns);
            auto en = c.end_circles(&ne);
            CHECK(ns + c.passive == res.circles(I));
            CHECK(ne + c.passive == res.circles(J));
            // local ending circles biject onto circles of J
            std::map<int, int> to_j;
            std::set<int> used;
            bool ok = true;
            for (int x = 0; x < c.darts(); ++x) {
                if (c.kind[x] != Seg) continue;
                int cj = res.circle_of_slot(J, c.arc_crossing[x / 6], c.slot[x]);
                auto [it, fresh] = to_j.emplace(en[x], cj);
                if (fresh)
                    ok &= used.insert(cj).second;
                else
                    ok &= it->second == cj;
            }
            CHECK(ok);
            if (!c.is_disconnected()) CHECK(c.euler_characteristic() == 2);
        });
    }
}

TEST_CASE("dual, reverse, mirror") {
    Diagram d = fixture("5_2").diagram();
    for_each_face(d, random_decoration(d, 5), [&](Resolution, Resolution, const Configuration& c) {
        Configuration r = reverse(reverse(c)), m = mirror(mirror(c));
        CHECK(r.kind == c.kind);
        CHECK(r.sigma == c.sigma);
        CHECK(m.sigma == c.sigma);
        // starting circles of the dual are the ending circles of c
        int a = 0, b = 0;
        auto st = dual(c).start_circles(&a);
        auto en = c.end_circles(&b);
        CHECK(a == b);
        std::map<int, int> f;
        bool same = true;
        for (int x = 0; x < c.darts(); ++x)
            if (c.kind[x] == Seg) {
                auto [it, fresh] = f.emplace(st[x], en[x]);
                same &= it->second == en[x];
            }
        CHECK(same);
        int a2 = 0, s0 = 0;
        dual(dual(c)).start_circles(&a2);
        c.start_circles(&s0);
        CHECK(a2 == s0);
    });
}

TEST_CASE("active part and connectivity") {
    Diagram d = parse_pd(kTrefoilPD);
    ResolutionTable res(d);
    // 1-face at crossing 0 from the all-0 resolution: one circle is passive
    Configuration c = face_configuration(d, res, 0, 1, default_decoration(d));
    CHECK(c.passive == 1);
    Configuration a = active_part(c);
    CHECK(a.passive == 0);
    CHECK(active_part(a).passive == 0);
    CHECK_FALSE(a.is_disconnected());
    int t = 0;
    a.start_circles(&t);
    CHECK(t == 2);
    CHECK_FALSE(Configuration{}.is_disconnected());

    // two disjoint 1-dim configurations side by side
    Configuration one = face_configuration(d, res, 6, 7, default_decoration(d));
    Configuration two = one;
    const int n = one.darts();
    for (int x = 0; x < n; ++x) {
        two.kind.push_back(one.kind[x]);
        two.sigma.push_back(one.sigma[x] + n);
        two.alpha.push_back(one.alpha[x] + n);
    }
    CHECK(two.is_disconnected());
}

TEST_CASE("canonical codes ignore arc order") {
    Diagram d = fixture("6_1").diagram();
    for_each_face(d, default_decoration(d), [&](Resolution, Resolution, const Configuration& c) {
        if (c.arcs() < 2) return;
        // swap the dart blocks of arcs 0 and 1
        auto p = [](int x) { return x < 6 ? x + 6 : x < 12 ? x - 6 : x; };
        Configuration s = c;
        for (int x = 0; x < c.darts(); ++x) {
            s.kind[p(x)] = c.kind[x];
            s.sigma[p(x)] = p(c.sigma[x]);
            s.alpha[p(x)] = p(c.alpha[x]);
        }
        CHECK(s.canonical_code() == c.canonical_code());
    });
}
