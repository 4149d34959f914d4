#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "reflat/hull.hpp"
#include "reflat/matrix.hpp"

namespace reflat {

/// Lattice coordinates on the affine hull of a point set: a point x of the
/// hull maps to the first k entries of U (x - origin), and the remaining
/// entries vanish exactly on the hull. U is unimodular, so the chart is a
/// lattice isomorphism aff(P) ∩ Z^d -> Z^k.
struct AffineChart {
    IntPoint origin;
    IntMatrix U;
    IntMatrix U_inv;
    int k = 0;

    static AffineChart of(std::span<const IntPoint> points, int dim);
    std::optional<IntPoint> to_local(const IntPoint &x) const;
    IntPoint to_global(const IntPoint &y) const;
};

/// A lattice polytope in vertex representation. Vertices are irredundant and
/// sorted lexicographically; for full-dimensional polytopes the facet
/// inequalities are computed once at construction.
class Polytope {
  public:
    Polytope() = default;

    /// Convex hull of an arbitrary non-empty point set (duplicates allowed).
    static Polytope hull(std::span<const IntPoint> points, int dim);
    static Polytope hull(std::span<const IntPoint> points) { return hull(points, points.empty() ? 0 : points[0].size()); }

    int dim() const { return dim_; }
    int affine_dim() const { return affine_dim_; }
    bool full_dimensional() const { return affine_dim_ == dim_; }

    const std::vector<IntPoint> &vertices() const { return vertices_; }
    /// Facets (full-dimensional polytopes only; empty otherwise).
    const std::vector<HalfSpace> &facets() const { return facets_; }
    /// Indices into vertices() of the vertices on each facet.
    const std::vector<std::vector<int>> &facet_vertices() const { return facet_vertices_; }

    bool contains(const IntPoint &x) const;
    bool strictly_interior(const IntPoint &x) const;

    /// Chart onto the affine hull; for lower-dimensional polytopes also the
    /// full-dimensional image in Z^k.
    const AffineChart &chart() const { return *chart_; }
    bool has_chart() const { return chart_.has_value(); }
    const Polytope &local() const { return *local_; }

    friend bool operator==(const Polytope &a, const Polytope &b) {
        return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
    }

  private:
    int dim_ = 0;
    int affine_dim_ = -1;
    std::vector<IntPoint> vertices_;
    std::vector<HalfSpace> facets_;
    std::vector<std::vector<int>> facet_vertices_;
    std::optional<AffineChart> chart_;
    std::shared_ptr<const Polytope> local_;
};

/// Rational point numerator / denominator with positive denominator, in
/// lowest terms.
struct RationalPoint {
    IntPoint numerator;
    Int denominator = 1;

    bool integral() const { return denominator == 1; }
    friend bool operator==(const RationalPoint &, const RationalPoint &) = default;
    friend auto operator<=>(const RationalPoint &, const RationalPoint &) = default;
};

/// Minimal H-representation. Throws DegenerateInput if P is not
/// full-dimensional.
std::vector<HalfSpace> facet_inequalities(const Polytope &P);

/// Lattice points of P (or of its relative interior when `interior_only`),
/// in lexicographic order.
std::vector<IntPoint> lattice_points(const Polytope &P, bool interior_only = false);

/// Lattice points of {x : h.normal . x >= -h.offset for all h} inside the
/// given box, lexicographic.
std::vector<IntPoint> lattice_points_in(std::span<const HalfSpace> halfspaces, const IntPoint &lo,
                                        const IntPoint &hi);

struct IpInfo {
    bool ip = false;
    std::optional<IntPoint> interior_point;
};

/// IP test: full-dimensional with exactly one interior lattice point.
IpInfo ip_info(const Polytope &P);
inline bool is_ip(const Polytope &P) { return ip_info(P).ip; }

/// Translate P by -t.
Polytope translated(const Polytope &P, const IntPoint &t);

/// Image of P under x -> M x.
Polytope transformed(const Polytope &P, const IntMatrix &M);

/// Vertices of the polar dual {y : y.x >= -1 for x in P}. Requires 0 strictly
/// interior; throws OriginNotInterior otherwise.
std::vector<RationalPoint> polar_dual(const Polytope &P);

/// Polar dual as a lattice polytope; throws NotReflexive if some polar vertex
/// is fractional.
Polytope polar_dual_lattice(const Polytope &P);

/// Number of lattice hyperplanes from 0 to the facet (its offset).
Int lattice_distance(const HalfSpace &f);

/// IP with the interior point translated to 0 and every facet at distance 1.
bool is_reflexive(const Polytope &P);

/// Normalized volume (d! times the Euclidean volume) relative to the lattice
/// of the affine hull; 1 for a point.
Int normalized_volume(const Polytope &P);

/// Whether all facets of P (with 0 interior) are at lattice distance 1.
bool all_facets_distance_one(const Polytope &P);

} // namespace reflat
