#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szabo/diagram.hpp"

namespace szabo {

using Resolution = std::uint64_t;
using Mask = std::uint64_t;

inline int weight(Resolution r) { return __builtin_popcountll(r); }

// Smoothing passages.  Slots are visited in the listed order when a circle
// is traversed "forward" through the passage.
enum Passage : int { AB = 0, CD = 1, AD = 2, BC = 3 };
inline constexpr int kPassageSlots[4][2] = {{0, 1}, {2, 3}, {3, 0}, {1, 2}};

inline int passage_of(int bit, int slot) {
    if (bit == 0) return slot < 2 ? AB : CD;
    return (slot == 0 || slot == 3) ? AD : BC;
}

struct PassageInfo {
    std::uint8_t circle = 0;
    std::uint8_t forward = 0;
    std::uint16_t pos = 0;
};

// Circles of one resolution, indexed by their smallest edge.  Crossingless
// components come last.
struct CircleSet {
    int count = 0;
    // per crossing, the two passages of its smoothing (AB/CD or AD/BC)
    std::vector<PassageInfo> pass;
    std::vector<std::uint8_t> edge_circle;
    std::vector<int> rep_edge;  // smallest edge per circle, -1 for free loops
    // cyclic sequence of (crossing, passage) along each circle
    std::vector<std::vector<std::pair<int, int>>> walk;

    const PassageInfo& at(int c, int p) const { return pass[2 * c + (p & 1)]; }
};

CircleSet resolve(const Diagram& d, Resolution I);

// All 2^n resolutions, stored flat for the assembly loops.
class ResolutionTable {
public:
    ResolutionTable(const Diagram& d);

    int n() const { return n_; }
    std::size_t size() const { return ncirc_.size(); }
    int circles(Resolution I) const { return ncirc_[I]; }
    const PassageInfo& passage(Resolution I, int c, int p) const { return pass_[(I * n_ + c) * 2 + (p & 1)]; }
    int circle_of_slot(Resolution I, int c, int slot) const {
        int bit = (I >> c) & 1;
        return passage(I, c, passage_of(bit, slot)).circle;
    }
    int edge_circle(Resolution I, int e) const { return ecirc_[I * ne_ + e]; }
    int rep_edge(Resolution I, int circle) const { return rep_[I * maxc_ + circle]; }
    int max_circles() const { return maxc_; }
    int free_loops() const { return free_; }

private:
    int n_ = 0, ne_ = 0, maxc_ = 0, free_ = 0;
    std::vector<std::uint8_t> ncirc_;
    std::vector<PassageInfo> pass_;
    std::vector<std::uint8_t> ecirc_;
    std::vector<std::int16_t> rep_;
};

struct Face {
    Resolution I = 0, J = 0;
    int dim() const { return weight(J ^ I); }
    std::vector<int> changed() const;
};

enum DartKind : std::uint8_t { Seg = 0, Tail = 1, Head = 2 };

// A configuration as a combinatorial map.  Every arc endpoint is a vertex
// with three darts (the arc dart and two segment darts); sigma rotates
// counterclockwise around the vertex, alpha pairs the two arc darts of an
// arc and the segment darts that bound one piece of a circle.  Passive
// circles carry no darts and are only counted.
struct Configuration {
    std::vector<std::uint8_t> kind;
    std::vector<int> sigma, alpha;
    int passive = 0;
    // face-built only: the crossing slot each segment dart sits at, and the
    // resolutions, so circles can be matched to actual circle indices
    std::vector<int> slot;
    std::vector<int> arc_crossing;

    int darts() const { return static_cast<int>(kind.size()); }
    int arcs() const { return darts() / 6; }

    // dart -> starting circle (segment darts only, -1 for arc darts)
    std::vector<int> start_circles(int* count) const;
    // dart -> ending circle, i.e. circles after surgery along every arc
    std::vector<int> end_circles(int* count) const;
    // arcs as (tail circle, head circle) of the starting circles
    std::vector<std::pair<int, int>> arc_circles(const std::vector<int>& circ) const;
    int arc_dart(int arc, DartKind k) const;

    bool is_disconnected() const;
    int euler_characteristic() const;
    std::string canonical_code() const;
};

Configuration face_configuration(const Diagram& d, const ResolutionTable& res, Resolution I, Resolution J,
                                 const Decoration& t);
Configuration active_part(const Configuration& c);
Configuration dual(const Configuration& c);
Configuration reverse(const Configuration& c);
Configuration mirror(const Configuration& c);
// A purely active configuration from explicit data; used by tests.
Configuration make_configuration(std::vector<std::uint8_t> kind, std::vector<int> sigma, std::vector<int> alpha,
                                 int passive = 0);

}  // namespace szabo
