#include "szabo/cube.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace szabo {

CircleSet resolve(const Diagram& d, Resolution I) {
    const int n = d.n();
    CircleSet cs;
    cs.pass.assign(2 * n, {});
    cs.edge_circle.assign(d.num_edges(), 0);
    std::vector<char> seen(d.num_edges(), 0);
    for (int e0 = 0; e0 < d.num_edges(); ++e0) {
        if (seen[e0]) continue;
        const int id = cs.count++;
        cs.rep_edge.push_back(e0);
        cs.walk.emplace_back();
        auto& walk = cs.walk.back();
        int e = e0;
        Slot at = d.ends(e0)[0];
        std::uint16_t pos = 0;
        while (!seen[e]) {
            seen[e] = 1;
            cs.edge_circle[e] = static_cast<std::uint8_t>(id);
            int c = at.crossing, in = at.pos;
            int bit = (I >> c) & 1;
            int p = passage_of(bit, in);
            int out = kPassageSlots[p][0] == in ? kPassageSlots[p][1] : kPassageSlots[p][0];
            auto& pi = cs.pass[2 * c + (p & 1)];
            pi.circle = static_cast<std::uint8_t>(id);
            pi.forward = kPassageSlots[p][0] == in;
            pi.pos = pos++;
            walk.emplace_back(c, p);
            e = d.edge_at(c, out);
            at = d.other_end(c, out);
        }
    }
    for (int l = 0; l < d.free_loops(); ++l) {
        cs.rep_edge.push_back(-1);
        cs.walk.emplace_back();
        ++cs.count;
    }
    if (cs.count > 64) throw std::length_error("more than 64 circles in a resolution");
    return cs;
}

ResolutionTable::ResolutionTable(const Diagram& d) : n_(d.n()), ne_(d.num_edges()), free_(d.free_loops()) {
    if (n_ > 30) throw std::length_error("too many crossings for a resolution table");
    const std::size_t N = std::size_t{1} << n_;
    maxc_ = n_ + 1 + free_;
    ncirc_.assign(N, 0);
    pass_.assign(N * n_ * 2, {});
    ecirc_.assign(N * ne_, 0);
    rep_.assign(N * maxc_, -1);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t I = 0; I < static_cast<std::int64_t>(N); ++I) {
        CircleSet cs = resolve(d, static_cast<Resolution>(I));
        ncirc_[I] = static_cast<std::uint8_t>(cs.count);
        std::copy(cs.pass.begin(), cs.pass.end(), pass_.begin() + I * n_ * 2);
        std::copy(cs.edge_circle.begin(), cs.edge_circle.end(), ecirc_.begin() + I * ne_);
        for (int i = 0; i < cs.count; ++i) rep_[I * maxc_ + i] = static_cast<std::int16_t>(cs.rep_edge[i]);
    }
}

std::vector<int> Face::changed() const {
    std::vector<int> out;
    for (Resolution m = J ^ I; m; m &= m - 1) out.push_back(__builtin_ctzll(m));
    return out;
}

namespace {

int sig2(const Configuration& c, int d) { return c.sigma[c.sigma[d]]; }

// the arc dart at the vertex of segment dart s
int vertex_arc(const Configuration& c, int s) {
    int a = c.sigma[s];
    if (c.kind[a] != Seg) return a;
    return c.sigma[a];
}

template <class Partner>
std::vector<int> orbit_circles(const Configuration& c, Partner partner, int* count) {
    std::vector<int> circ(c.darts(), -1);
    int k = 0;
    for (int s0 = 0; s0 < c.darts(); ++s0) {
        if (c.kind[s0] != Seg || circ[s0] != -1) continue;
        int s = s0;
        while (circ[s] == -1) {
            circ[s] = k;
            int t = c.alpha[s];
            circ[t] = k;
            s = partner(t);
        }
        ++k;
    }
    *count = k;
    return circ;
}

}  // namespace

std::vector<int> Configuration::start_circles(int* count) const {
    return orbit_circles(*this, [&](int s) {
        int a = vertex_arc(*this, s);
        return sigma[a] == s ? sig2(*this, a) : sigma[a];
    }, count);
}

std::vector<int> Configuration::end_circles(int* count) const {
    return orbit_circles(*this, [&](int s) {
        int a = vertex_arc(*this, s);
        int b = alpha[a];
        return sigma[a] == s ? sig2(*this, b) : sigma[b];
    }, count);
}

std::vector<std::pair<int, int>> Configuration::arc_circles(const std::vector<int>& circ) const {
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d < darts(); ++d)
        if (kind[d] == Tail) out.emplace_back(circ[sigma[d]], circ[sigma[alpha[d]]]);
    return out;
}

int Configuration::arc_dart(int arc, DartKind k) const {
    int a = 6 * arc;
    return kind[a] == k ? a : a + 3;
}

bool Configuration::is_disconnected() const {
    if (darts() == 0) return false;
    std::vector<char> seen(darts(), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int d = st.back();
        st.pop_back();
        for (int nb : {alpha[d], sigma[d]})
            if (!seen[nb]) {
                seen[nb] = 1;
                ++cnt;
                st.push_back(nb);
            }
    }
    return cnt != darts();
}

int Configuration::euler_characteristic() const {
    auto orbits = [&](auto step) {
        std::vector<char> seen(darts(), 0);
        int k = 0;
        for (int d0 = 0; d0 < darts(); ++d0) {
            if (seen[d0]) continue;
            ++k;
            for (int d = d0; !seen[d]; d = step(d)) seen[d] = 1;
        }
        return k;
    };
    int V = orbits([&](int d) { return sigma[d]; });
    int E = darts() / 2;
    int F = orbits([&](int d) { return sigma[alpha[d]]; });
    return V - E + F;
}

std::string Configuration::canonical_code() const {
    std::vector<int> best;
    for (int r = 0; r < darts(); ++r) {
        if (kind[r] != Tail) continue;
        std::vector<int> num(darts(), -1), order{r}, code;
        num[r] = 0;
        for (size_t i = 0; i < order.size(); ++i) {
            int d = order[i];
            for (int nb : {alpha[d], sigma[d]})
                if (num[nb] == -1) {
                    num[nb] = static_cast<int>(order.size());
                    order.push_back(nb);
                }
            code.push_back(kind[d]);
            code.push_back(num[alpha[d]]);
            code.push_back(num[sigma[d]]);
        }
        if (static_cast<int>(order.size()) != darts()) return "disconnected";
        if (best.empty() || code < best) best = code;
    }
    std::ostringstream os;
    os << "p" << passive << ':';
    for (size_t i = 0; i < best.size(); ++i) os << (i ? "," : "") << best[i];
    return os.str();
}

Configuration face_configuration(const Diagram& d, const ResolutionTable& res, Resolution I, Resolution J,
                                 const Decoration& t) {
    if ((I & ~J) != 0 || I == J) throw std::invalid_argument("not a face");
    Face f{I, J};
    auto S = f.changed();
    const int k = static_cast<int>(S.size());
    Configuration c;
    c.kind.assign(6 * k, Seg);
    c.sigma.assign(6 * k, 0);
    c.alpha.assign(6 * k, -1);
    c.slot.assign(6 * k, -1);
    c.arc_crossing = S;
    std::vector<int> dart_of_slot(4 * k);
    for (int i = 0; i < k; ++i) {
        int b = 6 * i;
        bool flip = t[S[i]] != 0;
        c.kind[b] = flip ? Head : Tail;
        c.kind[b + 3] = flip ? Tail : Head;
        c.alpha[b] = b + 3;
        c.alpha[b + 3] = b;
        // counterclockwise: arc, first slot, second slot
        c.sigma[b] = b + 1;
        c.sigma[b + 1] = b + 2;
        c.sigma[b + 2] = b;
        c.sigma[b + 3] = b + 4;
        c.sigma[b + 4] = b + 5;
        c.sigma[b + 5] = b + 3;
        c.slot[b + 1] = 0;
        c.slot[b + 2] = 1;
        c.slot[b + 4] = 2;
        c.slot[b + 5] = 3;
        for (int s = 0; s < 4; ++s) dart_of_slot[4 * i + s] = b + 1 + s + (s >= 2);
    }
    // Pair segment darts: walk each active circle of I in passage order and
    // connect the leaving slot of one endpoint to the entering slot of the
    // next one.
    struct End {
        int pos, arc, p, forward;
    };
    std::vector<std::vector<End>> on(res.circles(I));
    for (int i = 0; i < k; ++i)
        for (int p : {AB, CD}) {
            const auto& pi = res.passage(I, S[i], p);
            on[pi.circle].push_back({pi.pos, i, p, pi.forward});
        }
    for (auto& v : on) {
        if (v.empty()) continue;
        std::sort(v.begin(), v.end(), [](const End& a, const End& b) { return a.pos < b.pos; });
        for (size_t j = 0; j < v.size(); ++j) {
            const End& a = v[j];
            const End& b = v[(j + 1) % v.size()];
            int leave = kPassageSlots[a.p][a.forward ? 1 : 0];
            int enter = kPassageSlots[b.p][b.forward ? 0 : 1];
            int da = dart_of_slot[4 * a.arc + leave], db = dart_of_slot[4 * b.arc + enter];
            c.alpha[da] = db;
            c.alpha[db] = da;
        }
    }
    int active = 0;
    for (auto& v : on) active += !v.empty();
    c.passive = res.circles(I) - active;
    (void)d;
    return c;
}

Configuration active_part(const Configuration& c) {
    Configuration a = c;
    a.passive = 0;
    return a;
}

Configuration dual(const Configuration& c) {
    Configuration r = c;
    for (int d = 0; d < c.darts(); ++d) {
        if (c.kind[d] != Tail) continue;
        int e = c.alpha[d];
        int t1 = sig2(c, d), t2 = c.sigma[e];
        int h1 = sig2(c, e), h2 = c.sigma[d];
        r.sigma[d] = t1;
        r.sigma[t1] = t2;
        r.sigma[t2] = d;
        r.sigma[e] = h1;
        r.sigma[h1] = h2;
        r.sigma[h2] = e;
    }
    return r;
}

Configuration reverse(const Configuration& c) {
    Configuration r = c;
    for (auto& k : r.kind)
        if (k != Seg) k = k == Tail ? Head : Tail;
    return r;
}

Configuration mirror(const Configuration& c) {
    Configuration r = c;
    for (int d = 0; d < c.darts(); ++d) r.sigma[c.sigma[d]] = d;
    return r;
}

Configuration make_configuration(std::vector<std::uint8_t> kind, std::vector<int> sigma, std::vector<int> alpha,
                                 int passive) {
    Configuration c;
    c.kind = std::move(kind);
    c.sigma = std::move(sigma);
    c.alpha = std::move(alpha);
    c.passive = passive;
    return c;
}

}  // namespace szabo
