#include "szabo/fixtures.hpp"

#include <json.hpp>
#include <stdexcept>

namespace szabo {

namespace {

const char* kTable =
#include "fixtures.inc"
    ;

std::vector<Fixture> load() {
    auto j = nlohmann::json::parse(kTable);
    std::vector<Fixture> out;
    for (auto& e : j) {
        Fixture f;
        f.name = e.at("name");
        f.kind = e.at("kind");
        f.input = e.at("input").dump();
        f.source = e.at("source");
        if (e.contains("reverse")) f.reverse = e["reverse"].get<std::vector<int>>();
        if (e.contains("pages"))
            for (auto& [k, v] : e["pages"].items())
                f.pages[std::stoi(k)] = {v.at("rank").get<int>(), PoincarePolynomial::parse(v.at("poly"))};
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

static Diagram base_diagram(const std::string& kind, const std::string& input);

Diagram Fixture::diagram() const {
    Diagram d = base_diagram(kind, input);
    return reverse.empty() ? d : reverse_components(d, reverse);
}

static Diagram base_diagram(const std::string& kind, const std::string& input) {
    auto j = nlohmann::json::parse(input);
    if (kind == "pd") {
        if (j.empty()) return Diagram::unknot();
        return Diagram::from_crossings(j.get<std::vector<std::array<int, 4>>>());
    }
    if (kind == "torus") return torus_link(j.at(0), j.at(1));
    if (kind == "braid") return braid_closure(j.at("word").get<std::vector<int>>(), j.at("strands"));
    if (kind == "sum") {
        Diagram a = fixture(j.at(0)).diagram(), b = fixture(j.at(1)).diagram();
        return connect_sum_diagram(a, a.default_basepoint(), b, b.default_basepoint());
    }
    throw std::invalid_argument("unknown fixture kind " + kind);
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = load();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (auto& f : fixtures())
        if (f.name == name) return f;
    throw std::out_of_range("unknown fixture " + name);
}

const std::string& fixture_text() {
    static const std::string s = kTable;
    return s;
}

std::uint64_t fixture_checksum() {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : fixture_text()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace szabo
