#include <doctest.h>

#include <set>

#include "szabo/fixtures.hpp"

using namespace szabo;

TEST_CASE("fixture table checksum") {
    // pinned: any edit of the embedded table must update this value
    CHECK(fixture_checksum() == 0xb4ab194892d545feull);
}

TEST_CASE("fixture table contents") {
    std::set<std::string> names;
    for (auto& f : fixtures()) {
        CHECK(names.insert(f.name).second);
        for (auto& [k, e] : f.pages) CHECK(e.poly.rank() == e.rank);
    }
    int elevens = 0;
    for (auto& n : names) elevens += n.rfind("11n", 0) == 0;
    CHECK(elevens >= 10);
    CHECK(fixture("8_19").pages.at(3).poly.str() == "q^5+t^3q^11+t^5q^15");
    CHECK(fixture("T(3,8)").pages.at(4).rank == 5);
    CHECK(fixture("T(3,3)").diagram().components() == 3);
    CHECK_THROWS_AS(fixture("nope"), std::out_of_range);
    for (const char* k : {"3_1", "4_1", "3_1-braid", "4_1-braid", "3_1#3_1"}) CHECK(fixture(k).diagram().components() == 1);
}
