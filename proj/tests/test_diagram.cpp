#include <doctest.h>

#include <numeric>

#include "szabo/diagram.hpp"

using namespace szabo;

namespace {
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
}

TEST_CASE("parse trefoil PD") {
    Diagram d = parse_pd(kTrefoil);
    CHECK(d.n() == 3);
    CHECK(d.components() == 1);
    // hand trace: strand 1->2->...->6, over-strands run 4->5, 6->1, 2->3,
    // i.e. slot 1 to slot 3 at every crossing, so all three are negative
    CHECK(d.n_plus() == 0);
    CHECK(d.n_minus() == 3);
    CHECK(d.writhe() == -3);
    CHECK(d.pd_string() == "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_pd(""), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,2,1] Y"), ParseError);
}

TEST_CASE("one-crossing twist") {
    Diagram d = parse_pd("X[1,1,2,2]");
    CHECK(d.n() == 1);
    CHECK(d.components() == 1);
    CHECK(std::abs(d.writhe()) == 1);
}

TEST_CASE("torus links") {
    for (int p = 2; p <= 4; ++p)
        for (int q = 1; q <= 6; ++q) {
            Diagram d = torus_link(p, q);
            CHECK(d.n() == (p - 1) * q);
            CHECK(d.components() == std::gcd(p, q));
        }
    CHECK(torus_link(2, 3).components() == 1);
    CHECK(torus_link(3, 3).components() == 3);
    CHECK(torus_link(3, 4).n() == 8);
    CHECK_THROWS(torus_link(1, 3));
    CHECK_THROWS(torus_link(2, 0));
}

TEST_CASE("orientation reversal keeps signs") {
    Diagram d = torus_link(3, 4);
    Diagram r = reverse_components(d, {0});
    CHECK(r.n_plus() == d.n_plus());
    CHECK(r.n_minus() == d.n_minus());
    // reversing one component of a link flips its mixed crossings
    Diagram l = torus_link(3, 3);
    Diagram lr = reverse_components(l, {0});
    CHECK(lr.n_minus() == l.n_minus() + 4);
}

TEST_CASE("mirror") {
    Diagram d = torus_link(2, 3);
    Diagram m = mirror_diagram(d);
    CHECK(m.writhe() == -d.writhe());
    CHECK(m.n_plus() == d.n_minus());
    CHECK(mirror_diagram(m).pd() == d.pd());
    Diagram u = Diagram::unknot();
    CHECK(mirror_diagram(u).n() == 0);
    CHECK(mirror_diagram(u).components() == 1);
}

TEST_CASE("connect sum") {
    Diagram t = parse_pd(kTrefoil), u = Diagram::unknot();
    Diagram uu = connect_sum_diagram(u, -1, u, -1);
    CHECK(uu.n() == 0);
    CHECK(uu.components() == 1);
    Diagram tu = connect_sum_diagram(t, 0, u, -1);
    CHECK(tu.n() == 3);
    CHECK(tu.writhe() == t.writhe());
    Diagram tt = connect_sum_diagram(t, 0, t, 2);
    CHECK(tt.n() == 6);
    CHECK(tt.components() == 1);
    CHECK(tt.writhe() == 2 * t.writhe());
    CHECK_THROWS(connect_sum_diagram(t, 17, t, 0));
    CHECK_THROWS(connect_sum_diagram(t, -1, t, 0));
}

TEST_CASE("decorations") {
    Diagram d = parse_pd(kTrefoil);
    CHECK(default_decoration(d) == Decoration{0, 0, 0});
    CHECK(random_decoration(d, 7) == random_decoration(d, 7));
    bool differs = false;
    for (std::uint64_t s = 0; s < 8; ++s) differs |= random_decoration(d, s) != random_decoration(d, s + 100);
    CHECK(differs);
}

TEST_CASE("json round trip") {
    Diagram d = torus_link(3, 4);
    Decoration t = random_decoration(d, 3);
    Decoration back;
    Diagram e = diagram_from_json(diagram_to_json(d, t), &back);
    CHECK(e.pd() == d.pd());
    CHECK(back == t);
}

TEST_CASE("braid closure") {
    Diagram d = braid_closure({1, -2, 1, -2}, 3);
    CHECK(d.n() == 4);
    CHECK(d.components() == 1);
    CHECK(d.writhe() == 0);
    Diagram split = braid_closure({1, 1}, 3);
    CHECK(split.components() == 3);
    CHECK(split.free_loops() == 1);
}
