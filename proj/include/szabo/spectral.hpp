#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "szabo/complex.hpp"

namespace szabo {

// Sparse Laurent polynomial in t, q with nonnegative coefficients.
struct PoincarePolynomial {
    std::map<std::pair<int, int>, std::int64_t> coeff;  // (i, j) -> coefficient of t^i q^j

    std::int64_t rank() const;
    bool operator==(const PoincarePolynomial&) const = default;
    // terms ordered by t-exponent, then q-exponent; "0" when empty
    std::string str() const;
    static PoincarePolynomial parse(const std::string& s);
    // t^i q^j -> t^-i q^(-j + shift)
    PoincarePolynomial mirrored(int qshift = 0) const;
    PoincarePolynomial shifted(int dt, int dq) const;
    PoincarePolynomial operator+(const PoincarePolynomial& o) const;
    PoincarePolynomial operator*(const PoincarePolynomial& o) const;
};

struct Page {
    int k = 0;
    std::map<std::pair<int, int>, std::uint64_t> ranks;  // (h, q) -> rank
    std::uint64_t total() const;
    PoincarePolynomial poly() const;
    bool operator==(const Page& o) const { return ranks == o.ranks; }
};

PoincarePolynomial poincare_polynomial(const Page& p);

struct CancellationLog {
    struct Pair {
        std::uint32_t k, l;
        int degree;
    };
    std::vector<Pair> pairs;
};

enum class PivotStrategy { MinFill, IndexOrder };

struct SpectralResult {
    // pages[i].k == i + 1; the last page is E^inf
    std::vector<Page> pages;
    CancellationLog log;
    const Page& page(int k) const;  // k beyond the last page gives E^inf
    int collapse() const { return pages.back().k; }
};

// Mutable differential with in/out adjacency, for cancellation.
class WorkComplex {
public:
    explicit WorkComplex(const ChainComplex& c);
    std::size_t size() const { return h_.size(); }
    bool alive(std::uint32_t g) const { return alive_[g]; }
    bool has(std::uint32_t k, std::uint32_t l) const;
    const std::vector<std::uint32_t>& out(std::uint32_t g) const { return out_[g]; }
    const std::vector<std::uint32_t>& in(std::uint32_t g) const { return in_[g]; }
    int h(std::uint32_t g) const { return h_[g]; }
    int q(std::uint32_t g) const { return q_[g]; }
    std::uint64_t terms() const;
    std::size_t alive_count() const { return nalive_; }
    // Removes k and l after toggling every (pred(l), succ(k)) term.  Returns
    // the source generators whose rows changed.
    std::vector<std::uint32_t> cancel(std::uint32_t k, std::uint32_t l);
    Page snapshot(int k) const;

private:
    std::vector<std::vector<std::uint32_t>> out_, in_;
    std::vector<int> h_, q_;
    std::vector<char> alive_;
    std::size_t nalive_ = 0;
};

// Throws std::invalid_argument unless (k, l) is a differential term.
void cancel(WorkComplex& w, std::uint32_t k, std::uint32_t l);

SpectralResult compute_pages(const ChainComplex& c, PivotStrategy s = PivotStrategy::MinFill);

// Homology of the h-degree-1 part alone, by rank computations per
// bigrading; independent of the cancellation code.
Page khovanov_oracle(const ChainComplex& c);

// Standard Khovanov complex (merge / split maps only), built straight from
// circle walks without the configuration machinery.
ChainComplex khovanov_complex(const Diagram& d, Part part = Part::Full, int basepoint = -1, int qshift = 0);

// Rank of an F2 matrix given by sparse rows (column indices).
std::size_t f2_rank(std::vector<std::vector<std::uint32_t>> rows);

// Conjectured reduced pages of T(3, n), k in {2, 3, 4}.  `literal`
// evaluates the printed formula; otherwise the reading consistent with the
// tabulated T(3, n) rows.
PoincarePolynomial conjectured_torus_poly(int n, int k, bool literal = false);
PoincarePolynomial torus_p_table(int k, int l);  // p^k_l(t, q)

}  // namespace szabo
