#include "szabo/spectral.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace szabo {

// ---- polynomials ----

std::int64_t PoincarePolynomial::rank() const {
    std::int64_t r = 0;
    for (auto& [k, c] : coeff) r += c;
    return r;
}

namespace {

void put_var(std::ostringstream& os, char v, int e) {
    if (e == 0) return;
    os << v;
    if (e == 1) return;
    if (e < 0)
        os << "^{" << e << '}';
    else
        os << '^' << e;
}

}  // namespace

std::string PoincarePolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [ij, c] : coeff) {
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        auto [i, j] = ij;
        if (i == 0 && j == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        put_var(os, 't', i);
        put_var(os, 'q', j);
    }
    return first ? "0" : os.str();
}

PoincarePolynomial PoincarePolynomial::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    PoincarePolynomial p;
    if (s == "0") return p;
    std::size_t i = 0;
    auto bad = [&] { throw std::invalid_argument("bad polynomial: " + text); };
    auto number = [&]() {
        bool neg = false;
        if (i < s.size() && s[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) bad();
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    };
    auto exponent = [&]() -> int {
        if (i >= s.size() || s[i] != '^') return 1;
        ++i;
        if (i < s.size() && s[i] == '{') {
            ++i;
            int e = static_cast<int>(number());
            if (i >= s.size() || s[i] != '}') bad();
            ++i;
            return e;
        }
        return static_cast<int>(number());
    };
    if (s.empty()) bad();
    while (i < s.size()) {
        long c = 1;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            c = number();
            any = true;
        }
        int ti = 0, qj = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            ti = exponent();
            any = true;
        }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            qj = exponent();
            any = true;
        }
        if (!any) bad();
        p.coeff[{ti, qj}] += c;
        if (i < s.size()) {
            if (s[i] != '+') bad();
            ++i;
            if (i == s.size()) bad();
        }
    }
    return p;
}

PoincarePolynomial PoincarePolynomial::mirrored(int qshift) const {
    PoincarePolynomial r;
    for (auto& [ij, c] : coeff) r.coeff[{-ij.first, -ij.second + qshift}] += c;
    return r;
}

PoincarePolynomial PoincarePolynomial::shifted(int dt, int dq) const {
    PoincarePolynomial r;
    for (auto& [ij, c] : coeff) r.coeff[{ij.first + dt, ij.second + dq}] += c;
    return r;
}

PoincarePolynomial PoincarePolynomial::operator+(const PoincarePolynomial& o) const {
    PoincarePolynomial r = *this;
    for (auto& [ij, c] : o.coeff) r.coeff[ij] += c;
    return r;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& o) const {
    PoincarePolynomial r;
    for (auto& [a, c] : coeff)
        for (auto& [b, e] : o.coeff) r.coeff[{a.first + b.first, a.second + b.second}] += c * e;
    return r;
}

std::uint64_t Page::total() const {
    std::uint64_t t = 0;
    for (auto& [k, r] : ranks) t += r;
    return t;
}

PoincarePolynomial Page::poly() const {
    PoincarePolynomial p;
    for (auto& [hq, r] : ranks)
        if (r) p.coeff[hq] = static_cast<std::int64_t>(r);
    return p;
}

PoincarePolynomial poincare_polynomial(const Page& p) { return p.poly(); }

const Page& SpectralResult::page(int k) const {
    for (auto& p : pages)
        if (p.k == k) return p;
    if (k > pages.back().k) return pages.back();
    throw std::out_of_range("page index");
}

// ---- cancellation ----

namespace {

void erase_sorted(std::vector<std::uint32_t>& v, std::uint32_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

void toggle_into(std::vector<std::uint32_t>& acc, const std::vector<std::uint32_t>& v,
                 std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(acc.begin(), acc.end(), v.begin(), v.end(), std::back_inserter(scratch));
    acc.swap(scratch);
}

}  // namespace

WorkComplex::WorkComplex(const ChainComplex& c)
    : out_(c.d), in_(c.size()), h_(c.size()), q_(c.size()), alive_(c.size(), 1), nalive_(c.size()) {
    for (std::size_t g = 0; g < c.size(); ++g) {
        h_[g] = c.gens[g].h;
        q_[g] = c.gens[g].q;
        std::sort(out_[g].begin(), out_[g].end());
    }
    for (std::size_t g = 0; g < c.size(); ++g)
        for (auto y : out_[g]) in_[y].push_back(static_cast<std::uint32_t>(g));
}

bool WorkComplex::has(std::uint32_t k, std::uint32_t l) const {
    return std::binary_search(out_[k].begin(), out_[k].end(), l);
}

std::uint64_t WorkComplex::terms() const {
    std::uint64_t t = 0;
    for (auto& v : out_) t += v.size();
    return t;
}

std::vector<std::uint32_t> WorkComplex::cancel(std::uint32_t k, std::uint32_t l) {
    std::vector<std::uint32_t> A, B, scratch;
    for (auto r : in_[l])
        if (r != k) A.push_back(r);
    for (auto j : out_[k])
        if (j != l) B.push_back(j);
    if (!B.empty()) {
        for (auto r : A) toggle_into(out_[r], B, scratch);
        for (auto j : B) toggle_into(in_[j], A, scratch);
    }
    for (auto x : {k, l}) {
        for (auto j : out_[x]) erase_sorted(in_[j], x);
        for (auto r : in_[x]) erase_sorted(out_[r], x);
        std::vector<std::uint32_t>().swap(out_[x]);
        std::vector<std::uint32_t>().swap(in_[x]);
        alive_[x] = 0;
    }
    nalive_ -= 2;
    return A;
}

Page WorkComplex::snapshot(int k) const {
    Page p;
    p.k = k;
    for (std::size_t g = 0; g < size(); ++g)
        if (alive_[g]) ++p.ranks[{h_[g], q_[g]}];
    return p;
}

void cancel(WorkComplex& w, std::uint32_t k, std::uint32_t l) {
    if (k >= w.size() || l >= w.size() || !w.alive(k) || !w.alive(l) || !w.has(k, l))
        throw std::invalid_argument("cancel: not a differential term");
    w.cancel(k, l);
}

namespace {

std::uint64_t fill_cost(const WorkComplex& w, std::uint32_t k, std::uint32_t l) {
    return static_cast<std::uint64_t>(w.in(l).size() - 1) * (w.out(k).size() - 1);
}

void cancel_min_fill(WorkComplex& w, int deg, CancellationLog& log) {
    using Item = std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (std::uint32_t k = 0; k < w.size(); ++k)
        for (auto l : w.out(k))
            if (w.h(l) - w.h(k) == deg) heap.emplace(fill_cost(w, k, l), k, l);
    std::vector<std::uint32_t> Ai, Bi;
    while (!heap.empty()) {
        auto [cost, k, l] = heap.top();
        heap.pop();
        if (!w.alive(k) || !w.alive(l) || !w.has(k, l)) continue;
        auto now = fill_cost(w, k, l);
        if (now > cost) {
            heap.emplace(now, k, l);
            continue;
        }
        // only products of two degree-deg terms create new degree-deg terms
        Ai.clear();
        Bi.clear();
        for (auto r : w.in(l))
            if (r != k && w.h(l) - w.h(r) == deg) Ai.push_back(r);
        for (auto j : w.out(k))
            if (j != l && w.h(j) - w.h(k) == deg) Bi.push_back(j);
        w.cancel(k, l);
        log.pairs.push_back({k, l, deg});
        for (auto r : Ai)
            for (auto j : Bi)
                if (w.has(r, j)) heap.emplace(fill_cost(w, r, j), r, j);
    }
}

void cancel_index_order(WorkComplex& w, int deg, CancellationLog& log) {
    bool again = true;
    while (again) {
        again = false;
        for (std::uint32_t k = 0; k < w.size(); ++k) {
            while (w.alive(k)) {
                std::int64_t pick = -1;
                for (auto l : w.out(k))
                    if (w.h(l) - w.h(k) == deg) {
                        pick = l;
                        break;
                    }
                if (pick < 0) break;
                w.cancel(k, static_cast<std::uint32_t>(pick));
                log.pairs.push_back({k, static_cast<std::uint32_t>(pick), deg});
                again = true;
            }
        }
    }
}

}  // namespace

SpectralResult compute_pages(const ChainComplex& c, PivotStrategy s) {
    WorkComplex w(c);
    SpectralResult r;
    int i = 1;
    while (w.terms() > 0) {
        r.pages.push_back(w.snapshot(i));
        if (s == PivotStrategy::MinFill)
            cancel_min_fill(w, i, r.log);
        else
            cancel_index_order(w, i, r.log);
        ++i;
    }
    r.pages.push_back(w.snapshot(i));
    return r;
}

// ---- Khovanov oracle ----

std::size_t f2_rank(std::vector<std::vector<std::uint32_t>> rows) {
    // pivot column -> reduced row with that leading column
    std::map<std::uint32_t, std::vector<std::uint32_t>> piv;
    std::vector<std::uint32_t> scratch;
    std::size_t rank = 0;
    for (auto& row : rows) {
        std::sort(row.begin(), row.end());
        while (!row.empty()) {
            auto it = piv.find(row.front());
            if (it == piv.end()) {
                piv.emplace(row.front(), std::move(row));
                ++rank;
                break;
            }
            toggle_into(row, it->second, scratch);
        }
    }
    return rank;
}

Page khovanov_oracle(const ChainComplex& c) {
    // local column index per bigrading block
    std::map<std::pair<int, int>, std::uint64_t> dim;
    std::vector<std::uint32_t> local(c.size());
    for (std::size_t g = 0; g < c.size(); ++g) local[g] = static_cast<std::uint32_t>(dim[{c.gens[g].h, c.gens[g].q}]++);
    // rank of d1 out of each block (h, q) into (h + 1, q)
    std::map<std::pair<int, int>, std::vector<std::vector<std::uint32_t>>> rows;
    for (std::size_t g = 0; g < c.size(); ++g) {
        std::vector<std::uint32_t> row;
        for (auto y : c.d[g])
            if (c.gens[y].h == c.gens[g].h + 1) row.push_back(local[y]);
        rows[{c.gens[g].h, c.gens[g].q}].push_back(std::move(row));
    }
    std::map<std::pair<int, int>, std::size_t> rk;
    for (auto& [b, r] : rows) rk[b] = f2_rank(std::move(r));
    Page p;
    p.k = 2;
    for (auto& [b, n] : dim) {
        std::size_t out = rk[b];
        auto it = rk.find({b.first - 1, b.second});
        std::size_t inc = it == rk.end() ? 0 : it->second;
        std::uint64_t h = n - out - inc;
        if (h) p.ranks[b] = h;
    }
    return p;
}

ChainComplex khovanov_complex(const Diagram& d, Part part, int basepoint, int qshift) {
    const int n = d.n();
    if (n > 24) throw std::length_error("khovanov_complex: too many crossings");
    const int edge = basepoint < 0 ? d.default_basepoint() : basepoint;
    const std::size_t N = std::size_t{1} << n;
    std::vector<CircleSet> cs(N);
    for (std::size_t I = 0; I < N; ++I) cs[I] = resolve(d, I);
    auto marked = [&](std::size_t I) { return edge < 0 ? 0 : static_cast<int>(cs[I].edge_circle[edge]); };
    // generator (I, m) kept iff the marked circle's label fits the part
    auto keep = [&](std::size_t I, Mask m) {
        if (part == Part::Full) return true;
        bool x = (m >> marked(I)) & 1;
        return part == Part::Reduced ? x : !x;
    };
    std::vector<std::map<Mask, std::uint32_t>> id(N);
    ChainComplex c;
    for (std::size_t I = 0; I < N; ++I)
        for (Mask m = 0; m < (Mask{1} << cs[I].count); ++m) {
            if (!keep(I, m)) continue;
            id[I][m] = static_cast<std::uint32_t>(c.gens.size());
            Generator g;
            g.I = I;
            g.m = m;
            g.h = weight(I) - d.n_minus();
            g.q = cs[I].count - 2 * __builtin_popcountll(m) + weight(I) + d.n_plus() - 2 * d.n_minus() +
                  (part == Part::Full ? 0 : qshift);
            c.gens.push_back(g);
        }
    c.d.resize(c.gens.size());
    for (std::size_t I = 0; I < N; ++I)
        for (int e = 0; e < n; ++e) {
            if ((I >> e) & 1) continue;
            const std::size_t J = I | (std::size_t{1} << e);
            const CircleSet &a = cs[I], &b = cs[J];
            // circles of J through their edges; untouched circles keep all edges
            std::vector<int> img(a.count);
            for (int i = 0; i < a.count; ++i)
                img[i] = a.rep_edge[i] >= 0 ? b.edge_circle[a.rep_edge[i]]
                                            : b.count - d.free_loops() + (i - (a.count - d.free_loops()));
            const int u = a.at(e, AB).circle, v = a.at(e, CD).circle;
            for (auto [m, src] : id[I]) {
                Mask rest = 0;
                for (int i = 0; i < a.count; ++i)
                    if (i != u && i != v && ((m >> i) & 1)) rest |= Mask{1} << img[i];
                std::vector<Mask> outs;
                if (u != v) {  // merge
                    int w = b.at(e, AD).circle;
                    int xs = ((m >> u) & 1) + ((m >> v) & 1);
                    if (xs == 0) outs.push_back(rest);
                    if (xs == 1) outs.push_back(rest | Mask{1} << w);
                } else {  // split
                    int w1 = b.at(e, AD).circle, w2 = b.at(e, BC).circle;
                    if ((m >> u) & 1)
                        outs.push_back(rest | Mask{1} << w1 | Mask{1} << w2);
                    else {
                        outs.push_back(rest | Mask{1} << w1);
                        outs.push_back(rest | Mask{1} << w2);
                    }
                }
                for (Mask o : outs) {
                    auto it = id[J].find(o);
                    if (it != id[J].end()) c.d[src].push_back(it->second);
                }
            }
        }
    for (auto& v : c.d) std::sort(v.begin(), v.end());
    return c;
}

// ---- torus conjecture ----

PoincarePolynomial torus_p_table(int k, int l) {
    static const char* p2[6] = {
        "1+tq^2",
        "1+tq^2+t^2q^2+2t^2q^4",
        "1+tq^2+t^2q^2+t^3q^6",
        "1+tq^2+t^2q^2+t^3q^6+t^4q^6+t^5q^8",
        "1+tq^2+t^2q^2+t^3q^6+t^4q^6+t^5q^8+t^6q^8+2t^6q^10",
        "1+tq^2+t^2q^2+t^3q^6+t^4q^6+t^5q^8+t^6q^8+t^7q^12",
    };
    static const char* p3[6] = {
        "1+tq^2", "tq^2+2t^2q^4", "tq^2+t^3q^6", "tq^2+t^4q^6", "tq^2+t^4q^6+t^6q^8+2t^6q^10",
        "tq^2+t^4q^6+t^6q^8+t^7q^12",
    };
    static const char* p4[6] = {
        "1+tq^2", "tq^2+2t^2q^4", "tq^2+t^3q^6", "0", "t^6q^8+2t^6q^10", "t^6q^8+t^7q^12",
    };
    if (l < 0 || l > 5) throw std::invalid_argument("torus_p_table: l out of range");
    switch (k) {
        case 2: return PoincarePolynomial::parse(p2[l]);
        case 3: return PoincarePolynomial::parse(p3[l]);
        case 4: return PoincarePolynomial::parse(p4[l]);
    }
    throw std::invalid_argument("torus_p_table: k out of range");
}

namespace {

PoincarePolynomial swap_vars(const PoincarePolynomial& p) {
    PoincarePolynomial r;
    for (auto& [ij, c] : p.coeff) r.coeff[{ij.second, ij.first}] += c;
    return r;
}

PoincarePolynomial mono(int i, int j) {
    PoincarePolynomial r;
    r.coeff[{i, j}] = 1;
    return r;
}

}  // namespace

PoincarePolynomial conjectured_torus_poly(int n, int k, bool literal) {
    if (n <= 1) throw std::invalid_argument("conjectured_torus_poly: n must exceed 1");
    if (k < 2 || k > 4) throw std::invalid_argument("conjectured_torus_poly: k must be 2, 3 or 4");
    const int j = (n - 2) / 6, l = (n - 2) % 6;
    PoincarePolynomial f;
    for (int i = 0; i < j; ++i) f = f + mono(8 * i, 12 * i);
    PoincarePolynomial pk = torus_p_table(k, 5), pl = torus_p_table(k, l);
    if (literal) {
        auto inner = f * swap_vars(pk) + mono(7 * j, 12 * j) * swap_vars(pl);
        return mono(0, 2 * j - 3) * (mono(0, 0) + mono(2, 4) * inner);
    }
    auto inner = f * pk + mono(8 * j, 12 * j) * pl;
    return mono(0, 2 * n - 3) * (mono(0, 0) + mono(2, 4) * inner);
}

}  // namespace szabo
