#include "szabo/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

namespace szabo {

namespace {

int other_pos(int p) { return (p + 2) & 3; }

}  // namespace

Diagram Diagram::from_crossings(const std::vector<std::array<int, 4>>& x, int free_loops) {
    Diagram d;
    d.cross_.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) d.cross_[i].edge = x[i];
    d.free_loops_ = free_loops;
    d.build();
    return d;
}

void Diagram::build() {
    const int nc = n();
    std::map<int, std::vector<Slot>> occ;
    for (int c = 0; c < nc; ++c)
        for (int p = 0; p < 4; ++p) {
            int l = cross_[c].edge[p];
            if (l <= 0) throw ParseError("edge labels must be positive");
            occ[l].push_back({c, p});
        }
    labels_.clear();
    ends_.clear();
    for (auto& [l, v] : occ) {
        if (v.size() != 2)
            throw ParseError("edge label " + std::to_string(l) + " occurs " + std::to_string(v.size()) +
                             " times");
        labels_.push_back(l);
        ends_.push_back({v[0], v[1]});
    }
    eid_.assign(4 * nc, -1);
    for (int e = 0; e < num_edges(); ++e)
        for (auto s : ends_[e]) eid_[4 * s.crossing + s.pos] = e;

    // Orientation: slot 0 in, slot 2 out, then propagate along edges and
    // straight through crossings.  Components made only of over-strands
    // fall back to the increasing-label rule.
    std::vector<int> role(4 * nc, -1);  // 1 = incoming, 0 = outgoing
    std::vector<int> stack;
    auto set = [&](int s, int r) {
        if (role[s] == -1) {
            role[s] = r;
            stack.push_back(s);
        } else if (role[s] != r) {
            throw ParseError("inconsistent strand orientation at crossing " + std::to_string(s / 4));
        }
    };
    auto drain = [&]() {
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            int c = s / 4, p = s % 4, r = role[s];
            Slot o = other_end(c, p);
            set(4 * o.crossing + o.pos, 1 - r);
            set(4 * c + other_pos(p), 1 - r);
        }
    };
    for (int c = 0; c < nc; ++c) {
        set(4 * c + 0, 1);
        set(4 * c + 2, 0);
    }
    drain();
    for (int c = 0; c < nc; ++c)
        if (role[4 * c + 1] == -1) {
            int b = cross_[c].edge[1], dd = cross_[c].edge[3];
            set(4 * c + 1, dd == b + 1 ? 1 : 0);
            drain();
        }
    in_.assign(4 * nc, false);
    for (int s = 0; s < 4 * nc; ++s) in_[s] = role[s] == 1;

    npos_ = 0;
    for (int c = 0; c < nc; ++c) {
        cross_[c].sign = in_[4 * c + 3] ? 1 : -1;
        if (cross_[c].sign > 0) ++npos_;
    }

    // Components: follow each edge to its head, pass straight through.
    comp_.assign(num_edges(), -1);
    int comps = 0;
    for (int e0 = 0; e0 < num_edges(); ++e0) {
        if (comp_[e0] != -1) continue;
        int e = e0;
        while (comp_[e] == -1) {
            comp_[e] = comps;
            Slot h = in_[4 * ends_[e][0].crossing + ends_[e][0].pos] ? ends_[e][0] : ends_[e][1];
            e = eid_[4 * h.crossing + other_pos(h.pos)];
        }
        ++comps;
    }
    ncomp_ = comps + free_loops_;

    // Planarity: V - E + F = 2 per connected piece of the crossing graph.
    if (nc > 0) {
        std::vector<int> piece(nc);
        std::iota(piece.begin(), piece.end(), 0);
        auto find = [&](int a) {
            while (piece[a] != a) a = piece[a] = piece[piece[a]];
            return a;
        };
        for (auto& en : ends_) piece[find(en[0].crossing)] = find(en[1].crossing);
        int pieces = 0;
        for (int c = 0; c < nc; ++c) pieces += find(c) == c;
        std::vector<char> used(4 * nc, 0);
        int faces = 0;
        for (int s0 = 0; s0 < 4 * nc; ++s0) {
            if (used[s0]) continue;
            ++faces;
            int s = s0;
            while (!used[s]) {
                used[s] = 1;
                Slot o = other_end(s / 4, s % 4);
                s = 4 * o.crossing + ((o.pos + 1) & 3);
            }
        }
        if (nc - 2 * nc + faces != 2 * pieces) throw ParseError("crossing tuples do not close up to a planar diagram");
    }
}

int Diagram::edge_of_label(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

Slot Diagram::other_end(int c, int pos) const {
    const auto& en = ends_[eid_[4 * c + pos]];
    if (en[0].crossing == c && en[0].pos == pos) return en[1];
    return en[0];
}

int Diagram::default_basepoint() const { return num_edges() > 0 ? 0 : -1; }

std::vector<std::array<int, 4>> Diagram::pd() const {
    std::vector<std::array<int, 4>> out;
    for (auto& c : cross_) out.push_back(c.edge);
    return out;
}

std::string Diagram::pd_string() const {
    std::ostringstream os;
    for (int c = 0; c < n(); ++c) {
        auto& e = cross_[c].edge;
        if (c) os << ' ';
        os << "X[" << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ']';
    }
    return os.str();
}

Diagram parse_pd(const std::string& text) {
    std::vector<int> nums;
    bool any = false;
    for (size_t i = 0; i < text.size();) {
        char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            long v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                v = v * 10 + (text[j] - '0');
                if (v > 1000000) throw ParseError("edge label too large");
                ++j;
            }
            nums.push_back(static_cast<int>(v));
            i = j;
            continue;
        }
        if (ch == '-') throw ParseError("edge labels must be positive");
        if (!(std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']' || ch == '(' ||
              ch == ')' || ch == 'X' || ch == 'P' || ch == 'D'))
            throw ParseError(std::string("unexpected character '") + ch + "' in PD code");
        if (!std::isspace(static_cast<unsigned char>(ch))) any = true;
        ++i;
    }
    if (nums.empty()) throw ParseError(any ? "PD code has no crossings" : "empty input");
    if (nums.size() % 4) throw ParseError("PD code length is not a multiple of 4");
    std::vector<std::array<int, 4>> x(nums.size() / 4);
    for (size_t i = 0; i < nums.size(); ++i) x[i / 4][i % 4] = nums[i];
    return Diagram::from_crossings(x);
}

Diagram braid_closure(const std::vector<int>& word, int strands) {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    std::vector<int> cur(strands);
    std::iota(cur.begin(), cur.end(), 1);
    int next = strands + 1;
    std::vector<std::array<int, 4>> x;
    for (int g : word) {
        int i = std::abs(g) - 1;
        if (g == 0 || i + 1 >= strands) throw std::invalid_argument("braid generator out of range");
        int a = cur[i], b = cur[i + 1], na = next, nb = next + 1;
        next += 2;
        if (g > 0)
            x.push_back({b, nb, na, a});
        else
            x.push_back({a, b, nb, na});
        cur[i] = na;
        cur[i + 1] = nb;
    }
    std::map<int, int> ident;
    for (int j = 0; j < strands; ++j) ident[cur[j]] = j + 1;
    for (auto& c : x)
        for (auto& e : c)
            if (auto it = ident.find(e); it != ident.end()) e = it->second;
    // Closing strands that never cross anything are unknotted circles.
    int loops = 0;
    for (int j = 0; j < strands; ++j)
        if (cur[j] == j + 1) ++loops;
    return Diagram::from_crossings(x, loops);
}

Diagram torus_link(int p, int q) {
    if (p < 2 || q < 1) throw std::invalid_argument("torus_link needs p >= 2 and q >= 1");
    std::vector<int> word;
    for (int r = 0; r < q; ++r)
        for (int i = 1; i < p; ++i) word.push_back(i);
    return braid_closure(word, p);
}

Diagram mirror_diagram(const Diagram& d) {
    std::vector<std::array<int, 4>> x;
    for (int c = 0; c < d.n(); ++c) {
        auto e = d.crossing(c).edge;
        if (d.incoming(c, 3))
            x.push_back({e[3], e[0], e[1], e[2]});
        else
            x.push_back({e[1], e[2], e[3], e[0]});
    }
    return Diagram::from_crossings(x, d.free_loops());
}

Diagram reverse_components(const Diagram& d, const std::vector<int>& comps) {
    std::vector<char> rev(d.components(), 0);
    for (int k : comps) {
        if (k < 0 || k >= d.components()) throw std::invalid_argument("no such component");
        rev[k] = 1;
    }
    // the orientation of a component is read off its under-crossings
    std::vector<char> under(d.components(), 0);
    std::vector<std::array<int, 4>> x;
    for (int c = 0; c < d.n(); ++c) {
        auto e = d.crossing(c).edge;
        int k = d.component_of_edge(d.edge_at(c, 0));
        under[k] = 1;
        if (rev[k])
            x.push_back({e[2], e[3], e[0], e[1]});
        else
            x.push_back(e);
    }
    for (int k : comps)
        if (!under[k] && k < d.components() - d.free_loops())
            throw std::invalid_argument("cannot reverse a component without under-crossings");
    return Diagram::from_crossings(x, d.free_loops());
}

Diagram connect_sum_diagram(const Diagram& d1, int e1, const Diagram& d2, int e2) {
    auto check = [](const Diagram& d, int e) {
        if (e == -1 ? d.free_loops() == 0 : (e < 0 || e >= d.num_edges()))
            throw std::invalid_argument("invalid base point for connect sum");
    };
    check(d1, e1);
    check(d2, e2);
    if (e1 == -1) {
        auto x = d2.pd();
        return Diagram::from_crossings(x, d2.free_loops() + d1.free_loops() - 1);
    }
    if (e2 == -1) return Diagram::from_crossings(d1.pd(), d1.free_loops() + d2.free_loops() - 1);

    auto x1 = d1.pd(), x2 = d2.pd();
    int shift = d1.label(d1.num_edges() - 1);
    for (auto& c : x2)
        for (auto& e : c) e += shift;
    int fresh = shift + d2.label(d2.num_edges() - 1) + 1;
    int l1 = d1.label(e1);
    // Head end of e1 now receives the strand coming from the tail of e2,
    // and the head end of e2 continues the tail of e1.
    for (auto s : d1.ends(e1))
        if (d1.incoming(s.crossing, s.pos)) x1[s.crossing][s.pos] = fresh;
    for (auto s : d2.ends(e2))
        x2[s.crossing][s.pos] = d2.incoming(s.crossing, s.pos) ? l1 : fresh;
    x1.insert(x1.end(), x2.begin(), x2.end());
    return Diagram::from_crossings(x1, d1.free_loops() + d2.free_loops());
}

Decoration default_decoration(const Diagram& d) { return Decoration(d.n(), 0); }

Decoration random_decoration(const Diagram& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Decoration t(d.n());
    for (auto& b : t) b = static_cast<std::uint8_t>(rng() >> 63);
    return t;
}

std::string diagram_to_json(const Diagram& d, const Decoration& t) {
    nlohmann::json j;
    j["crossings"] = nlohmann::json::array();
    j["signs"] = nlohmann::json::array();
    for (auto& c : d.crossings()) {
        j["crossings"].push_back(c.edge);
        j["signs"].push_back(c.sign);
    }
    j["decoration"] = nlohmann::json::array();
    for (auto b : t) j["decoration"].push_back(static_cast<int>(b));
    if (d.free_loops()) j["free_loops"] = d.free_loops();
    return j.dump();
}

Diagram diagram_from_json(const std::string& text, Decoration* t) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what());
    }
    if (!j.contains("crossings")) throw ParseError("diagram JSON lacks crossings");
    auto x = j["crossings"].get<std::vector<std::array<int, 4>>>();
    int loops = j.value("free_loops", x.empty() ? 1 : 0);
    Diagram d = Diagram::from_crossings(x, loops);
    if (j.contains("signs")) {
        auto s = j["signs"].get<std::vector<int>>();
        for (int c = 0; c < d.n() && c < static_cast<int>(s.size()); ++c)
            if (s[c] != d.crossing(c).sign) throw ParseError("stored sign disagrees with strand orientation");
    }
    if (t) {
        *t = default_decoration(d);
        if (j.contains("decoration")) {
            auto v = j["decoration"].get<std::vector<int>>();
            if (static_cast<int>(v.size()) != d.n()) throw ParseError("decoration length mismatch");
            for (int c = 0; c < d.n(); ++c) (*t)[c] = v[c] ? 1 : 0;
        }
    }
    return d;
}

}  // namespace szabo
