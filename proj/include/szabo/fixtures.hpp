#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "szabo/diagram.hpp"
#include "szabo/spectral.hpp"

namespace szabo {

struct ExpectedPage {
    int rank = 0;
    PoincarePolynomial poly;
};

struct Fixture {
    std::string name;
    std::string kind;    // pd | torus | braid | sum
    std::string input;   // JSON text of the input field
    std::string source;
    std::vector<int> reverse;  // components whose orientation is flipped
    std::map<int, ExpectedPage> pages;  // reduced pages, empty if untabulated

    Diagram diagram() const;
    int crossings() const { return diagram().n(); }
};

const std::vector<Fixture>& fixtures();
// throws std::out_of_range for unknown names
const Fixture& fixture(const std::string& name);
const std::string& fixture_text();
// FNV-1a 64 over the embedded table
std::uint64_t fixture_checksum();

}  // namespace szabo
