#include "szabo/complex.hpp"

#include <algorithm>
#include <string>

namespace szabo {

std::size_t ChainComplex::terms() const {
    std::size_t n = 0;
    for (auto& v : d) n += v.size();
    return n;
}

GeneratorIndex::GeneratorIndex(const Diagram& d, const ResolutionTable& res, Part part, int basepoint)
    : res_(res), part_(part), edge_(basepoint < 0 ? d.default_basepoint() : basepoint) {
    if (part != Part::Full && edge_ < 0 && d.free_loops() == 0)
        throw std::invalid_argument("reduced complex needs a base point");
    off_.resize(res.size() + 1);
    std::uint64_t o = 0;
    for (std::size_t I = 0; I < res.size(); ++I) {
        off_[I] = o;
        int c = res.circles(I);
        o += std::uint64_t{1} << (part == Part::Full ? c : c - 1);
    }
    off_[res.size()] = o;
    total_ = o;
}

int GeneratorIndex::base_circle(Resolution I) const {
    // a crossingless diagram marks its first circle
    return edge_ < 0 ? 0 : res_.edge_circle(I, edge_);
}

std::int64_t GeneratorIndex::index(Resolution I, Mask m) const {
    if (part_ == Part::Full) return static_cast<std::int64_t>(off_[I] + m);
    int x = base_circle(I);
    bool marked = (m >> x) & 1;
    if (marked != (part_ == Part::Reduced)) return -1;
    Mask low = m & ((Mask{1} << x) - 1);
    Mask high = (m >> (x + 1)) << x;
    return static_cast<std::int64_t>(off_[I] + (low | high));
}

std::uint64_t estimate_generators(const Diagram& d, Part part) {
    // each resolution has at least one circle
    if (d.n() >= 40) return std::uint64_t{1} << 62;
    ResolutionTable res(d);
    std::uint64_t tot = 0;
    for (std::size_t I = 0; I < res.size(); ++I) tot += std::uint64_t{1} << res.circles(I);
    return part == Part::Full ? tot : tot / 2;
}

namespace {

void guard(const Diagram& d, Part part, std::uint64_t cap) {
    int extra = part == Part::Full ? 1 : 0;
    if (d.n() + extra >= 63 || (std::uint64_t{1} << (d.n() + extra)) > cap)
        throw ResourceLimit("estimated generator count at least 2^" + std::to_string(d.n() + extra) +
                                " exceeds the cap of " + std::to_string(cap),
                            d.n() + extra >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << (d.n() + extra));
}

std::shared_ptr<const ResolutionTable> make_table(const Diagram& d, Part part, std::uint64_t cap) {
    guard(d, part, cap);
    auto res = std::make_shared<const ResolutionTable>(d);
    std::uint64_t tot = 0;
    for (std::size_t I = 0; I < res->size(); ++I) tot += std::uint64_t{1} << res->circles(I);
    if (part != Part::Full) tot /= 2;
    if (tot > cap)
        throw ResourceLimit("generator count " + std::to_string(tot) + " exceeds the cap of " + std::to_string(cap),
                            tot);
    return res;
}

// Circle bookkeeping for one face: local active circles of the
// configuration versus circle indices of I and J.
struct FaceMaps {
    int t = 0, s = 0;
    int start[64], end[64];
    Mask passive = 0;
    int pmap[64];

    void build(const ResolutionTable& res, const Configuration& cf, const ConfigView& w, Resolution I,
               Resolution J) {
        t = w.t;
        s = w.s;
        Mask active = 0;
        for (int dd = 0; dd < cf.darts(); ++dd) {
            if (cf.kind[dd] != Seg) continue;
            int c = cf.arc_crossing[dd / 6];
            start[w.start[dd]] = res.circle_of_slot(I, c, cf.slot[dd]);
            end[w.end[dd]] = res.circle_of_slot(J, c, cf.slot[dd]);
        }
        for (int i = 0; i < t; ++i) active |= Mask{1} << start[i];
        const int ci = res.circles(I), cj = res.circles(J), fl = res.free_loops();
        passive = ((ci == 64 ? ~Mask{0} : (Mask{1} << ci) - 1)) & ~active;
        for (Mask p = passive; p; p &= p - 1) {
            int i = __builtin_ctzll(p);
            int e = res.rep_edge(I, i);
            pmap[i] = e >= 0 ? res.edge_circle(J, e) : cj - fl + (i - (ci - fl));
        }
    }
    Mask to_start(Mask a) const {
        Mask r = 0;
        for (; a; a &= a - 1) r |= Mask{1} << start[__builtin_ctzll(a)];
        return r;
    }
    Mask to_end(Mask b) const {
        Mask r = 0;
        for (; b; b &= b - 1) r |= Mask{1} << end[__builtin_ctzll(b)];
        return r;
    }
    Mask map_passive(Mask p) const {
        Mask r = 0;
        for (; p; p &= p - 1) r |= Mask{1} << pmap[__builtin_ctzll(p)];
        return r;
    }
    int local_start(int actual) const {
        for (int i = 0; i < t; ++i)
            if (start[i] == actual) return i;
        return -1;
    }
    int local_end(int actual) const {
        for (int i = 0; i < s; ++i)
            if (end[i] == actual) return i;
        return -1;
    }
};

template <class Emit>
void emit_terms(const GeneratorIndex& idx, const FaceMaps& fm, Resolution I, Resolution J,
                const std::vector<Term>& terms, Emit&& emit) {
    for (auto& term : terms) {
        Mask A = fm.to_start(term.a), B = fm.to_end(term.b);
        Mask p = 0;
        do {
            std::int64_t si = idx.index(I, A | p);
            if (si >= 0) {
                std::int64_t di = idx.index(J, B | fm.map_passive(p));
                if (di >= 0) emit(static_cast<std::uint32_t>(si), static_cast<std::uint32_t>(di));
            }
            p = (p - fm.passive) & fm.passive;
        } while (p);
    }
}

// Arc data read straight from the resolution table.
struct QuickFace {
    int k = 0, t = 0, s = 0;
    Mask U = 0, V = 0;
    int au[64], av[64], du[64], dv[64];
};

bool connected_arcs(const ResolutionTable& res, Resolution I, Resolution S, QuickFace& q) {
    q.k = 0;
    for (Resolution m = S; m; m &= m - 1) {
        int c = __builtin_ctzll(m);
        q.au[q.k] = res.passage(I, c, AB).circle;
        q.av[q.k] = res.passage(I, c, CD).circle;
        ++q.k;
    }
    Mask U = (Mask{1} << q.au[0]) | (Mask{1} << q.av[0]);
    std::uint64_t left = (q.k == 64 ? ~0ull : (1ull << q.k) - 1) & ~1ull;
    bool grew = true;
    while (left && grew) {
        grew = false;
        for (std::uint64_t l = left; l; l &= l - 1) {
            int i = __builtin_ctzll(l);
            Mask am = (Mask{1} << q.au[i]) | (Mask{1} << q.av[i]);
            if (am & U) {
                U |= am;
                left &= ~(1ull << i);
                grew = true;
            }
        }
    }
    if (left) return false;
    q.U = U;
    q.t = __builtin_popcountll(U);
    return true;
}

void dual_arcs(const ResolutionTable& res, Resolution J, Resolution S, QuickFace& q) {
    int i = 0;
    Mask V = 0;
    for (Resolution m = S; m; m &= m - 1, ++i) {
        int c = __builtin_ctzll(m);
        q.du[i] = res.passage(J, c, AD).circle;
        q.dv[i] = res.passage(J, c, BC).circle;
        V |= (Mask{1} << q.du[i]) | (Mask{1} << q.dv[i]);
    }
    q.V = V;
    q.s = __builtin_popcountll(V);
}

bool has_star(const int* u, const int* v, int k, Mask circles) {
    int cnt[64] = {0};
    for (int i = 0; i < k; ++i) {
        ++cnt[u[i]];
        ++cnt[v[i]];
    }
    for (Mask m = circles; m; m &= m - 1) {
        int x = __builtin_ctzll(m);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            if (u[i] != x && v[i] != x) ok = false;
        for (Mask r = circles & ~(Mask{1} << x); r && ok; r &= r - 1)
            if (cnt[__builtin_ctzll(r)] != 1) ok = false;
        if (ok) return true;
    }
    return false;
}

bool all_joins(const int* u, const int* v, int k) {
    for (int i = 0; i < k; ++i)
        if (u[i] == v[i]) return false;
    return true;
}

bool maybe_nonzero(const QuickFace& q) {
    const int k = q.k, t = q.t, s = q.s;
    if (t + s != k + 2 && t + s != k) return false;
    if (t == 2 && all_joins(q.au, q.av, k)) return true;
    if (s == 2 && all_joins(q.du, q.dv, k)) return true;
    if (t == 1 && s == k - 1) return true;
    if (s == 1 && t == k - 1) return true;
    return t + s == k + 2 && has_star(q.au, q.av, k, q.U) && has_star(q.du, q.dv, k, q.V);
}

void assemble_resolution(const CubeContext& ctx, Variant variant, Resolution I, SparseOp& d) {
    const ResolutionTable& res = *ctx.res;
    const Resolution full = (Resolution{1} << res.n()) - 1;
    const Resolution zeros = full & ~I;
    QuickFace q;
    FaceMaps fm;
    for (Resolution S = zeros; S; S = (S - 1) & zeros) {
        if (!connected_arcs(res, I, S, q)) continue;
        const Resolution J = I | S;
        dual_arcs(res, J, S, q);
        if (!maybe_nonzero(q)) continue;
        Configuration cf = face_configuration(ctx.diagram, res, I, J, ctx.t);
        ConfigView w(cf);
        auto cl = classify(cf, w, variant);
        if (cl.terms.empty()) continue;
        fm.build(res, cf, w, I, J);
        emit_terms(ctx.index, fm, I, J, cl.terms, [&](std::uint32_t s, std::uint32_t t) { d[s].push_back(t); });
    }
}

ChainComplex allocate(const CubeContext& ctx, int qshift) {
    const Diagram& dg = ctx.diagram;
    const ResolutionTable& res = *ctx.res;
    ChainComplex c;
    c.gens.resize(ctx.index.size());
    c.d.resize(ctx.index.size());
    const int nm = dg.n_minus(), np = dg.n_plus();
    for (std::size_t I = 0; I < res.size(); ++I) {
        const int nc = res.circles(I), w = weight(I);
        for (Mask m = 0; m < (Mask{1} << nc); ++m) {
            auto g = ctx.index.index(I, m);
            if (g < 0) continue;
            auto& gen = c.gens[g];
            gen.I = I;
            gen.m = m;
            gen.h = w - nm;
            gen.q = (nc - 2 * __builtin_popcountll(m)) + w + np - 2 * nm +
                    (ctx.index.part() == Part::Full ? 0 : qshift);
        }
    }
    return c;
}

}  // namespace

CubeContext::CubeContext(const Diagram& d, const Decoration& tt, Part part, int basepoint, std::uint64_t cap)
    : diagram(d), res(make_table(d, part, cap)), t(tt), index(d, *res, part, basepoint) {
    if (static_cast<int>(t.size()) != d.n()) throw std::invalid_argument("decoration length mismatch");
}

ChainComplex build_complex(const CubeContext& ctx, const BuildOptions& opt) {
    ChainComplex c = allocate(ctx, opt.reduced_qshift);
    const std::int64_t N = static_cast<std::int64_t>(ctx.res->size());
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t I = 0; I < N; ++I) assemble_resolution(ctx, opt.variant, static_cast<Resolution>(I), c.d);
    } else {
        for (std::int64_t I = 0; I < N; ++I) assemble_resolution(ctx, opt.variant, static_cast<Resolution>(I), c.d);
    }
    for (auto& v : c.d) std::sort(v.begin(), v.end());
    return c;
}

ChainComplex build_complex(const Diagram& d, const Decoration& t, const BuildOptions& opt) {
    CubeContext ctx(d, t, opt.part, opt.basepoint, opt.max_generators);
    return build_complex(ctx, opt);
}

ChainComplex build_complex_reference(const Diagram& d, const Decoration& t, const BuildOptions& opt) {
    CubeContext ctx(d, t, opt.part, opt.basepoint, opt.max_generators);
    const ResolutionTable& res = *ctx.res;
    ChainComplex c = allocate(ctx, opt.reduced_qshift);
    const Resolution full = (Resolution{1} << d.n()) - 1;
    for (Resolution I = 0; I <= full && d.n() > 0; ++I) {
        const Resolution zeros = full & ~I;
        for (Resolution S = zeros; S; S = (S - 1) & zeros) {
            const Resolution J = I | S;
            Configuration cf = face_configuration(d, res, I, J, t);
            ConfigView w(cf);
            FaceMaps fm;
            fm.build(res, cf, w, I, J);
            // local monomial layout: active circles, then passive in index order
            std::vector<int> pas;
            for (Mask p = fm.passive; p; p &= p - 1) pas.push_back(__builtin_ctzll(p));
            const int nc = res.circles(I);
            for (Mask m = 0; m < (Mask{1} << nc); ++m) {
                auto si = ctx.index.index(I, m);
                if (si < 0) continue;
                Mask a = 0;
                for (int i = 0; i < w.t; ++i)
                    if ((m >> fm.start[i]) & 1) a |= Mask{1} << i;
                for (size_t j = 0; j < pas.size(); ++j)
                    if ((m >> pas[j]) & 1) a |= Mask{1} << (w.t + j);
                for (Mask b : d_map(cf, a, opt.variant)) {
                    Mask out = 0;
                    for (int i = 0; i < w.s; ++i)
                        if ((b >> i) & 1) out |= Mask{1} << fm.end[i];
                    for (size_t j = 0; j < pas.size(); ++j)
                        if ((b >> (w.s + j)) & 1) out |= Mask{1} << fm.pmap[pas[j]];
                    auto di = ctx.index.index(J, out);
                    if (di >= 0) c.d[si].push_back(static_cast<std::uint32_t>(di));
                }
            }
        }
    }
    for (auto& v : c.d) std::sort(v.begin(), v.end());
    return c;
}

namespace {

ChainComplex select_part(const ChainComplex& c, const Diagram& d, int basepoint, bool marked, int qshift) {
    ResolutionTable res(d);
    GeneratorIndex idx(d, res, marked ? Part::Reduced : Part::Quotient, basepoint);
    std::vector<std::int64_t> remap(c.size(), -1);
    ChainComplex r;
    for (std::size_t g = 0; g < c.size(); ++g) {
        auto& gen = c.gens[g];
        if (idx.index(gen.I, gen.m) < 0) continue;
        remap[g] = static_cast<std::int64_t>(r.gens.size());
        r.gens.push_back(gen);
        r.gens.back().q += qshift;
    }
    r.d.resize(r.gens.size());
    for (std::size_t g = 0; g < c.size(); ++g) {
        if (remap[g] < 0) continue;
        for (auto y : c.d[g])
            if (remap[y] >= 0) r.d[remap[g]].push_back(static_cast<std::uint32_t>(remap[y]));
        std::sort(r.d[remap[g]].begin(), r.d[remap[g]].end());
    }
    return r;
}

}  // namespace

ChainComplex reduced_subcomplex(const ChainComplex& c, const Diagram& d, int basepoint, int qshift) {
    return select_part(c, d, basepoint, true, qshift);
}

ChainComplex quotient_complex(const ChainComplex& c, const Diagram& d, int basepoint, int qshift) {
    return select_part(c, d, basepoint, false, qshift);
}

SparseOp build_point_map(const CubeContext& ctx, int basepoint, Variant v) {
    const ResolutionTable& res = *ctx.res;
    const Diagram& dg = ctx.diagram;
    const int edge = basepoint < 0 ? dg.default_basepoint() : basepoint;
    auto xcirc = [&](Resolution I) { return edge < 0 ? 0 : res.edge_circle(I, edge); };
    SparseOp P(ctx.index.size());
    const std::int64_t N = static_cast<std::int64_t>(res.size());
    const Resolution full = (Resolution{1} << res.n()) - 1;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t Ii = 0; Ii < N; ++Ii) {
        const Resolution I = static_cast<Resolution>(Ii);
        const int xc = xcirc(I);
        for (Mask m = 0; m < (Mask{1} << res.circles(I)); ++m) {
            if ((m >> xc) & 1) continue;
            auto si = ctx.index.index(I, m), di = ctx.index.index(I, m | (Mask{1} << xc));
            if (si >= 0 && di >= 0) P[si].push_back(static_cast<std::uint32_t>(di));
        }
        if (edge < 0) continue;
        const Resolution zeros = full & ~I;
        QuickFace q;
        FaceMaps fm;
        for (Resolution S = zeros; S; S = (S - 1) & zeros) {
            if (!connected_arcs(res, I, S, q)) continue;
            if (!((q.U >> xc) & 1)) continue;
            const Resolution J = I | S;
            dual_arcs(res, J, S, q);
            if (q.t + q.s != q.k + 2) continue;
            Configuration cf = face_configuration(dg, res, I, J, ctx.t);
            ConfigView w(cf);
            fm.build(res, cf, w, I, J);
            int xp = fm.local_start(xc), yp = fm.local_end(res.edge_circle(J, edge));
            std::vector<Term> terms;
            if (v == Variant::Mirror) {
                Configuration m = mirror(cf);
                terms = point_terms(m, ConfigView(m), xp, yp);
            } else
                terms = point_terms(cf, w, xp, yp);
            if (terms.empty()) continue;
            emit_terms(ctx.index, fm, I, J, terms, [&](std::uint32_t s, std::uint32_t t) { P[s].push_back(t); });
        }
    }
    for (auto& v : P) std::sort(v.begin(), v.end());
    return P;
}

SparseOp edge_homotopy(const CubeContext& ctx, int m) {
    const ResolutionTable& res = *ctx.res;
    SparseOp H(ctx.index.size());
    FaceMaps fm;
    for (Resolution I = 0; I < res.size(); ++I) {
        if ((I >> m) & 1) continue;
        const Resolution J = I | (Resolution{1} << m);
        Configuration cf = face_configuration(ctx.diagram, res, I, J, ctx.t);
        ConfigView w(cf);
        fm.build(res, cf, w, I, J);
        emit_terms(ctx.index, fm, I, J, homotopy_terms(w), [&](std::uint32_t s, std::uint32_t t) { H[s].push_back(t); });
    }
    for (auto& v : H) std::sort(v.begin(), v.end());
    return H;
}

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b, int qshift) {
    ChainComplex r;
    const std::size_t na = a.size(), nb = b.size();
    r.gens.resize(na * nb);
    r.d.resize(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            auto& g = r.gens[i * nb + j];
            g.h = a.gens[i].h + b.gens[j].h;
            g.q = a.gens[i].q + b.gens[j].q + qshift;
            auto& out = r.d[i * nb + j];
            for (auto y : a.d[i]) out.push_back(static_cast<std::uint32_t>(y * nb + j));
            for (auto y : b.d[j]) out.push_back(static_cast<std::uint32_t>(i * nb + y));
            std::sort(out.begin(), out.end());
        }
    return r;
}

namespace {

void xor_into(std::vector<std::uint32_t>& acc, const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> out;
    out.reserve(acc.size() + v.size());
    std::set_symmetric_difference(acc.begin(), acc.end(), v.begin(), v.end(), std::back_inserter(out));
    acc.swap(out);
}

}  // namespace

SparseOp compose(const SparseOp& outer, const SparseOp& inner) {
    SparseOp r(inner.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t g = 0; g < static_cast<std::int64_t>(inner.size()); ++g)
        for (auto y : inner[g]) xor_into(r[g], outer[y]);
    return r;
}

SparseOp add(const SparseOp& a, const SparseOp& b) {
    SparseOp r = a;
    for (std::size_t g = 0; g < b.size(); ++g) xor_into(r[g], b[g]);
    return r;
}

bool is_zero(const SparseOp& a) {
    for (auto& v : a)
        if (!v.empty()) return false;
    return true;
}

bool check_degrees(const ChainComplex& c) {
    for (std::size_t g = 0; g < c.size(); ++g)
        for (auto y : c.d[g]) {
            int k = c.gens[y].h - c.gens[g].h;
            if (k < 1 || c.gens[y].q - c.gens[g].q != 2 * k - 2) return false;
        }
    return true;
}

}  // namespace szabo
