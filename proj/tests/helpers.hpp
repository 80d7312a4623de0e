#pragma once

#include <functional>
#include <vector>

#include "szabo/fixtures.hpp"

namespace testing {

using namespace szabo;

inline const char* kTrefoilPD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

inline std::vector<Diagram> small_diagrams() {
    return {parse_pd(kTrefoilPD), fixture("4_1").diagram(), fixture("5_2").diagram(),
            fixture("6_1").diagram(), torus_link(3, 3)};
}

// Calls f(I, J, configuration) for every face of the cube.
inline void for_each_face(const Diagram& d, const Decoration& t,
                          const std::function<void(Resolution, Resolution, const Configuration&)>& f) {
    ResolutionTable res(d);
    const Resolution full = (Resolution{1} << d.n()) - 1;
    for (Resolution I = 0; I <= full; ++I) {
        const Resolution zeros = full & ~I;
        for (Resolution S = zeros; S; S = (S - 1) & zeros) f(I, I | S, face_configuration(d, res, I, I | S, t));
    }
}

}  // namespace testing
