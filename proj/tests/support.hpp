#pragma once

#include <random>

#include "reflat/classifier.hpp"
#include "reflat/faces.hpp"
#include "reflat/matrix.hpp"

namespace testsupport {

// product of elementary matrices, optionally with a sign flip
inline reflat::IntMatrix random_unimodular(int d, std::mt19937_64 &rng, int steps = 6) {
    using reflat::Int;
    reflat::IntMatrix U = reflat::IntMatrix::identity(d);
    for (int s = 0; s < steps; ++s) {
        reflat::IntMatrix E = reflat::IntMatrix::identity(d);
        int i = static_cast<int>(rng() % d), j = static_cast<int>(rng() % d);
        if (i == j)
            E(i, i) = -1;
        else
            E(i, j) = static_cast<Int>(rng() % 5) - 2;
        U = E * U;
    }
    return U;
}

inline const reflat::ClassRun &run2() {
    static const reflat::ClassRun r = reflat::classify_reflexive(2);
    return r;
}

inline const std::vector<reflat::Polytope> &reflexive_polygons() {
    static const std::vector<reflat::Polytope> v = reflat::polytopes_of(run2().found);
    return v;
}

} // namespace testsupport
