#pragma once

#include <functional>
#include <string>
#include <vector>

#include "szabo/cube.hpp"

namespace szabo {

enum class Variant { Standard, Mirror };

enum class Family { A, B, C, D, E };

struct ConfigType {
    Family family;
    int p = 0, q = 0;
    bool mirror = false;
    std::string str() const;
};

// A map term on the active part: starting circles in `a` carry x, the rest
// carry 1; likewise `b` over the ending circles.
struct Term {
    Mask a = 0, b = 0;
    bool operator==(const Term&) const = default;
    auto operator<=>(const Term&) const = default;
};

// Circles and arcs of a configuration, both before and after surgery.
struct ConfigView {
    int t = 0, s = 0, k = 0;
    std::vector<int> start, end;  // dart -> circle
    std::vector<std::pair<int, int>> arcs, duals;  // (tail, head) circles

    explicit ConfigView(const Configuration& c);
};

struct Classification {
    std::vector<ConfigType> types;
    std::vector<Term> terms;
};

// Families are tested on the active part; an empty result means d_C = 0.
Classification classify(const Configuration& c, Variant v = Variant::Standard);
Classification classify(const Configuration& c, const ConfigView& view, Variant v);

// Chirality of the four-block pattern of a one-circle configuration:
// +1, -1, or 0 if the configuration does not have that shape.  `right`
// receives the number of arcs on the right of the walk.
int c_pattern(const Configuration& c, int* right = nullptr);

// Monomials on a full configuration: bits 0..t-1 are the active starting
// circles, bits t..t+passive-1 the passive ones (same layout on the ending
// side with s active circles).
std::vector<Mask> d_map(const Configuration& c, Mask a, Variant v = Variant::Standard);
std::vector<Mask> homotopy_map(const Configuration& c, Mask a);
// Point map terms; xp / yp are the starting / ending circle containing the
// base point (-1 if passive).
std::vector<Term> point_terms(const Configuration& c, const ConfigView& view, int xp, int yp);
std::vector<Mask> point_map(const Configuration& c, Mask a, int xp, int yp);

std::vector<Term> homotopy_terms(const ConfigView& view);

// Rule checks, exhaustive over the monomial basis of c.
using ConfigMap = std::function<std::vector<Mask>(const Configuration&, Mask)>;
bool check_extension(const ConfigMap& f, const Configuration& c);
bool check_disconnected(const ConfigMap& f, const Configuration& c);
bool check_grading(const ConfigMap& f, const Configuration& c, int degree_shift = -2);
// x(P) divides a implies y(P) divides every output, for every marked circle
bool check_filtration(const ConfigMap& f, const Configuration& c);

// Apply per-term rules through the extension formula.
std::vector<Mask> extend_terms(const std::vector<Term>& terms, int t, int s, int passive, Mask a);

}  // namespace szabo
