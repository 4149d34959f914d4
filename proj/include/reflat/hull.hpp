#pragma once

#include <span>
#include <vector>

#include "reflat/matrix.hpp"

namespace reflat {

/// Closed halfspace {x : normal . x >= -offset}. For a facet the normal is
/// primitive and points into the polytope.
struct HalfSpace {
    IntPoint normal;
    Int offset = 0;

    Int eval(const IntPoint &x) const { return checked::add(dot(normal, x), offset); }
    friend bool operator==(const HalfSpace &, const HalfSpace &) = default;
    friend auto operator<=>(const HalfSpace &a, const HalfSpace &b) {
        if (auto c = a.normal <=> b.normal; c != 0)
            return c;
        return a.offset <=> b.offset;
    }
};

/// Facets and vertices of the convex hull of a full-dimensional point set.
struct HullResult {
    std::vector<HalfSpace> facets;
    /// Indices (into the input) of the points that are vertices, ascending.
    std::vector<int> vertices;
    /// For every facet, the indices (into the input) of the vertices on it.
    std::vector<std::vector<int>> facet_vertices;
};

/// Exact double-description hull. `points` must be pairwise distinct and of
/// dimension `dim`. Throws DegenerateInput if they do not affinely span Z^dim.
HullResult convex_hull(std::span<const IntPoint> points, int dim);

/// Affine rank of a point set (-1 for the empty set).
int affine_rank(std::span<const IntPoint> points, int dim);

} // namespace reflat
