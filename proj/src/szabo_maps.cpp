#include "szabo/szabo_maps.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace szabo {

std::string ConfigType::str() const {
    static const char* names = "ABCDE";
    std::ostringstream os;
    os << names[static_cast<int>(family)];
    if (mirror && (family == Family::C || family == Family::D)) os << '\'';
    if (family == Family::A || family == Family::B)
        os << '(' << p + q << ')';
    else
        os << '(' << p << ',' << q << ')';
    return os.str();
}

ConfigView::ConfigView(const Configuration& c) {
    k = c.arcs();
    start = c.start_circles(&t);
    end = c.end_circles(&s);
    for (int d = 0; d < c.darts(); ++d) {
        if (c.kind[d] != Tail) continue;
        int e = c.alpha[d];
        arcs.emplace_back(start[c.sigma[d]], start[c.sigma[e]]);
        duals.emplace_back(end[c.sigma[c.sigma[d]]], end[c.sigma[d]]);
    }
}

namespace {

// Star centres: circles meeting every arc while all other circles meet
// exactly one arc end.
std::vector<int> star_centres(const std::vector<std::pair<int, int>>& arcs, int n) {
    std::vector<int> cnt(n, 0);
    for (auto [a, b] : arcs) {
        ++cnt[a];
        ++cnt[b];
    }
    std::vector<int> out;
    for (int x = 0; x < n; ++x) {
        bool ok = true;
        for (auto [a, b] : arcs)
            if (a != x && b != x) ok = false;
        for (int y = 0; y < n && ok; ++y)
            if (y != x && cnt[y] != 1) ok = false;
        if (ok) out.push_back(x);
    }
    return out;
}

bool all_joins_one_way(const std::vector<std::pair<int, int>>& arcs) {
    for (auto [a, b] : arcs)
        if (a == b || a != arcs[0].first || b != arcs[0].second) return false;
    return true;
}

int vertex_arc(const Configuration& c, int s) {
    int a = c.sigma[s];
    return c.kind[a] != Seg ? a : c.sigma[a];
}

}  // namespace

int c_pattern(const Configuration& c, int* right) {
    int t = 0;
    c.start_circles(&t);
    if (t != 1 || c.darts() == 0) return 0;
    int start = c.arc_dart(0, Tail);
    // (side, head?) per visited endpoint, side 0 = right of travel
    std::vector<std::pair<int, int>> seq;
    std::vector<int> side(c.darts(), -1);
    int a = start, out = c.sigma[start], sd = 0;
    while (true) {
        seq.emplace_back(sd, c.kind[a] == Head);
        side[a] = sd;
        int nd = c.alpha[out];
        int ad = vertex_arc(c, nd);
        if (ad == start) break;
        int s1 = c.sigma[ad], s2 = c.sigma[s1];
        if (nd == s2) {
            out = s1;
            sd = 0;
        } else {
            out = s2;
            sd = 1;
        }
        a = ad;
    }
    int nr = 0;
    for (int d = 0; d < c.darts(); ++d)
        if (c.kind[d] == Tail) {
            if (side[d] != side[c.alpha[d]]) return 0;
            nr += side[d] == 0;
        }
    if (right) *right = nr;
    std::vector<std::pair<int, int>> blocks;
    for (auto& x : seq)
        if (blocks.empty() || blocks.back() != x) blocks.push_back(x);
    if (blocks.size() > 1 && blocks.front() == blocks.back()) blocks.pop_back();
    if (blocks.size() != 4) return 0;
    auto it = std::find(blocks.begin(), blocks.end(), std::make_pair(0, 0));
    if (it == blocks.end()) return 0;
    std::rotate(blocks.begin(), it, blocks.end());
    using B = std::vector<std::pair<int, int>>;
    if (blocks == B{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) return 1;
    if (blocks == B{{0, 0}, {1, 1}, {0, 1}, {1, 0}}) return -1;
    return 0;
}

Classification classify(const Configuration& c, Variant v) {
    Configuration act = active_part(c);
    if (act.darts() == 0 || act.is_disconnected()) return {};
    return classify(act, ConfigView(act), v);
}

Classification classify(const Configuration& c, const ConfigView& w, Variant v) {
    Classification r;
    if (v == Variant::Mirror) {
        // d'_C = d_{m(C)}; circle labels are orbit sets, so they survive the reflection
        Configuration m = mirror(c);
        r = classify(m, ConfigView(m), Variant::Standard);
        for (auto& x : r.types) x.mirror = true;
        return r;
    }
    const int k = w.k, t = w.t, s = w.s;
    const Mask fs = (Mask{1} << t) - 1, fe = (Mask{1} << s) - 1;
    auto add = [&](Family f, int p, int q, Term term) {
        r.types.push_back({f, p, q, false});
        if (std::find(r.terms.begin(), r.terms.end(), term) == r.terms.end()) r.terms.push_back(term);
    };
    if (t == 2 && all_joins_one_way(w.arcs)) add(Family::A, k, 0, {0, 0});
    if (s == 2 && all_joins_one_way(w.duals)) add(Family::B, k, 0, {fs, fe});
    if (t + s == k + 2) {
        for (int xc : star_centres(w.arcs, t))
            for (int yc : star_centres(w.duals, s)) {
                // every join points into its centre, or every join points out
                int into = -1;
                bool ok = true;
                auto vote = [&](bool in) {
                    if (into == -1)
                        into = in;
                    else if (into != static_cast<int>(in))
                        ok = false;
                };
                for (auto [a, b] : w.arcs)
                    if (a != b) vote(b == xc);
                for (auto [a, b] : w.duals)
                    if (a != b) vote(b == yc);
                if (ok) add(Family::E, t - 1, s - 1, {fs & ~(Mask{1} << xc), Mask{1} << yc});
            }
    }
    int nr = 0;
    if (t == 1 && s == k - 1 && c_pattern(c, &nr) == 1) add(Family::C, nr, k - nr, {0, 0});
    if (s == 1 && t == k - 1 && c_pattern(dual(c), &nr) == -1) add(Family::D, nr, k - nr, {fs, fe});
    return r;
}

std::vector<Mask> extend_terms(const std::vector<Term>& terms, int t, int s, int passive, Mask a) {
    std::vector<Mask> out;
    Mask act = a & ((Mask{1} << t) - 1);
    Mask pas = a >> t;
    for (auto& term : terms)
        if (term.a == act) out.push_back(term.b | (pas << s));
    (void)passive;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> d_map(const Configuration& c, Mask a, Variant v) {
    if (c.darts() == 0 || c.is_disconnected()) return {};
    Configuration act = active_part(c);
    ConfigView w(act);
    auto cl = classify(act, w, v);
    return extend_terms(cl.terms, w.t, w.s, c.passive, a);
}

std::vector<Term> homotopy_terms(const ConfigView& w) {
    if (w.k != 1) return {};
    if (w.t == 1) return {{0, 0}};  // split: 1 -> 1
    return {{3, 1}};                // join: x1 x2 -> y
}

std::vector<Mask> homotopy_map(const Configuration& c, Mask a) {
    if (c.arcs() != 1) return {};
    ConfigView w(c);
    return extend_terms(homotopy_terms(w), w.t, w.s, c.passive, a);
}

std::vector<Term> point_terms(const Configuration& c, const ConfigView& w, int xp, int yp) {
    (void)c;
    if (xp < 0 || yp < 0 || w.t + w.s != w.k + 2) return {};
    auto xs = star_centres(w.arcs, w.t);
    auto ys = star_centres(w.duals, w.s);
    if (std::find(xs.begin(), xs.end(), xp) == xs.end()) return {};
    if (std::find(ys.begin(), ys.end(), yp) == ys.end()) return {};
    for (auto [a, b] : w.arcs)
        if (a != b && a != xp) return {};
    for (auto [a, b] : w.duals)
        if (a != b && a != yp) return {};
    const Mask fs = (Mask{1} << w.t) - 1;
    return {{fs & ~(Mask{1} << xp), Mask{1} << yp}};
}

std::vector<Mask> point_map(const Configuration& c, Mask a, int xp, int yp) {
    if (c.darts() == 0 || c.is_disconnected()) return {};
    ConfigView w(c);
    return extend_terms(point_terms(c, w, xp, yp), w.t, w.s, c.passive, a);
}

namespace {

int gr(Mask m, int circles) { return circles - 2 * __builtin_popcountll(m); }

}  // namespace

bool check_extension(const ConfigMap& f, const Configuration& c) {
    ConfigView w(c);
    const int tot = w.t + c.passive;
    Configuration act = active_part(c);
    for (Mask a = 0; a < (Mask{1} << tot); ++a) {
        auto got = f(c, a);
        auto base = f(act, a & ((Mask{1} << w.t) - 1));
        Mask pas = a >> w.t;
        for (auto& b : base) b |= pas << w.s;
        std::sort(got.begin(), got.end());
        std::sort(base.begin(), base.end());
        if (got != base) return false;
    }
    return true;
}

bool check_disconnected(const ConfigMap& f, const Configuration& c) {
    if (!active_part(c).is_disconnected()) return true;
    ConfigView w(c);
    for (Mask a = 0; a < (Mask{1} << (w.t + c.passive)); ++a)
        if (!f(c, a).empty()) return false;
    return true;
}

bool check_grading(const ConfigMap& f, const Configuration& c, int degree_shift) {
    ConfigView w(c);
    const int ns = w.t + c.passive, ne = w.s + c.passive;
    for (Mask a = 0; a < (Mask{1} << ns); ++a)
        for (Mask b : f(c, a))
            if (gr(b, ne) - gr(a, ns) != w.k + degree_shift) return false;
    return true;
}

bool check_filtration(const ConfigMap& f, const Configuration& c) {
    ConfigView w(c);
    const int ns = w.t + c.passive;
    std::set<std::pair<int, int>> marks;
    for (int d = 0; d < c.darts(); ++d)
        if (c.kind[d] == Seg) marks.insert({w.start[d], w.end[d]});
    for (int i = 0; i < c.passive; ++i) marks.insert({w.t + i, w.s + i});
    for (auto [x, y] : marks)
        for (Mask a = 0; a < (Mask{1} << ns); ++a) {
            if (!((a >> x) & 1)) continue;
            for (Mask b : f(c, a))
                if (!((b >> y) & 1)) return false;
        }
    return true;
}

}  // namespace szabo
