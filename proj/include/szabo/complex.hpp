#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "szabo/cube.hpp"
#include "szabo/szabo_maps.hpp"

namespace szabo {

struct ResourceLimit : std::runtime_error {
    std::uint64_t estimate;
    ResourceLimit(const std::string& what, std::uint64_t est) : std::runtime_error(what), estimate(est) {}
};

struct Generator {
    Resolution I = 0;
    Mask m = 0;
    int h = 0, q = 0;
    int delta() const { return q - 2 * h; }
};

using SparseOp = std::vector<std::vector<std::uint32_t>>;

// Filtered complex over F2; d[g] is the sorted list of targets of g.
struct ChainComplex {
    std::vector<Generator> gens;
    SparseOp d;
    std::size_t size() const { return gens.size(); }
    std::size_t terms() const;
};

enum class Part { Full, Reduced, Quotient };

struct BuildOptions {
    Variant variant = Variant::Standard;
    Part part = Part::Full;
    int basepoint = -1;  // dense edge id, -1 = diagram default
    int reduced_qshift = 0;
    std::uint64_t max_generators = std::uint64_t{1} << 28;
    bool parallel = true;
};

// Index space of a (possibly reduced) complex: dense per resolution.
class GeneratorIndex {
public:
    GeneratorIndex(const Diagram& d, const ResolutionTable& res, Part part, int basepoint);
    std::uint64_t size() const { return total_; }
    // -1 if (I, m) is not a generator of this part
    std::int64_t index(Resolution I, Mask m) const;
    std::uint64_t offset(Resolution I) const { return off_[I]; }
    int base_circle(Resolution I) const;
    Part part() const { return part_; }
    int basepoint() const { return edge_; }

private:
    const ResolutionTable& res_;
    Part part_;
    int edge_;
    std::vector<std::uint64_t> off_;
    std::uint64_t total_ = 0;
};

std::uint64_t estimate_generators(const Diagram& d, Part part);

// Whole-cube context shared by the assembly routines.
struct CubeContext {
    const Diagram& diagram;
    std::shared_ptr<const ResolutionTable> res;
    Decoration t;
    GeneratorIndex index;

    CubeContext(const Diagram& d, const Decoration& t, Part part, int basepoint,
                std::uint64_t max_generators = std::uint64_t{1} << 28);
};

ChainComplex build_complex(const Diagram& d, const Decoration& t, const BuildOptions& opt = {});
ChainComplex build_complex(const CubeContext& ctx, const BuildOptions& opt);
// Every face through face_configuration and d_map; slow, used as a check.
ChainComplex build_complex_reference(const Diagram& d, const Decoration& t, const BuildOptions& opt = {});

ChainComplex reduced_subcomplex(const ChainComplex& c, const Diagram& d, int basepoint, int qshift = 0);
ChainComplex quotient_complex(const ChainComplex& c, const Diagram& d, int basepoint, int qshift = 0);

// P(t) on the full complex, including P^0 = X.  The mirror variant is the
// point map of the reflected configurations, a chain map for d'.
SparseOp build_point_map(const CubeContext& ctx, int basepoint, Variant v = Variant::Standard);
// H_m on the full complex.
SparseOp edge_homotopy(const CubeContext& ctx, int m);

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b, int qshift);

SparseOp compose(const SparseOp& outer, const SparseOp& inner);
SparseOp add(const SparseOp& a, const SparseOp& b);
bool is_zero(const SparseOp& a);
// Every term raises h by k >= 1 and q by 2k-2.
bool check_degrees(const ChainComplex& c);

}  // namespace szabo
