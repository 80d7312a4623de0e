#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace szabo {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One PD crossing X[a,b,c,d]: edge labels counterclockwise from the incoming
// under-strand.  Slot 0 is incoming, slot 2 outgoing; the over-strand runs
// 3 -> 1 on positive crossings and 1 -> 3 on negative ones.
struct Crossing {
    std::array<int, 4> edge{};
    int sign = 0;
};

struct Slot {
    int crossing = -1;
    int pos = -1;
};

class Diagram {
public:
    Diagram() = default;

    static Diagram from_crossings(const std::vector<std::array<int, 4>>& x, int free_loops = 0);
    static Diagram unknot() { return from_crossings({}, 1); }

    int n() const { return static_cast<int>(cross_.size()); }
    const std::vector<Crossing>& crossings() const { return cross_; }
    const Crossing& crossing(int c) const { return cross_[c]; }

    int n_plus() const { return npos_; }
    int n_minus() const { return n() - npos_; }
    int writhe() const { return 2 * npos_ - n(); }
    int components() const { return ncomp_; }
    // Components without crossings; each is a circle in every resolution.
    int free_loops() const { return free_loops_; }

    // Dense edge ids 0..num_edges()-1; label() gives the original PD label.
    int num_edges() const { return static_cast<int>(labels_.size()); }
    int label(int e) const { return labels_[e]; }
    int edge_of_label(int label) const;
    int edge_at(int c, int pos) const { return eid_[4 * c + pos]; }
    // The two crossing slots an edge is attached to.
    const std::array<Slot, 2>& ends(int e) const { return ends_[e]; }
    Slot other_end(int c, int pos) const;
    // Orientation: true if the strand enters crossing c at slot pos.
    bool incoming(int c, int pos) const { return in_[4 * c + pos]; }
    int component_of_edge(int e) const { return comp_[e]; }
    // Smallest edge of component 0 (or -1 for crossingless diagrams).
    int default_basepoint() const;

    std::vector<std::array<int, 4>> pd() const;
    std::string pd_string() const;

private:
    void build();

    std::vector<Crossing> cross_;
    std::vector<int> labels_;
    std::vector<int> eid_;
    std::vector<std::array<Slot, 2>> ends_;
    std::vector<bool> in_;
    std::vector<int> comp_;
    int npos_ = 0;
    int ncomp_ = 0;
    int free_loops_ = 0;
};

using Decoration = std::vector<std::uint8_t>;

Diagram parse_pd(const std::string& text);
Diagram torus_link(int p, int q);
// Closure of a braid word on `strands` strands; generator i>0 is sigma_i,
// i<0 its inverse.
Diagram braid_closure(const std::vector<int>& word, int strands);
Diagram mirror_diagram(const Diagram& d);
Diagram reverse_components(const Diagram& d, const std::vector<int>& comps);
// Connect sum along edges e1 of d1 and e2 of d2 (dense edge ids, or -1 for
// the unique circle of a crossingless component).
Diagram connect_sum_diagram(const Diagram& d1, int e1, const Diagram& d2, int e2);

Decoration default_decoration(const Diagram& d);
Decoration random_decoration(const Diagram& d, std::uint64_t seed);

std::string diagram_to_json(const Diagram& d, const Decoration& t);
Diagram diagram_from_json(const std::string& text, Decoration* t = nullptr);

}  // namespace szabo
