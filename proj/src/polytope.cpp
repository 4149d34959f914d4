#include "reflat/polytope.hpp"

#include <algorithm>
#include <functional>

namespace reflat {

AffineChart AffineChart::of(std::span<const IntPoint> points, int dim) {
    AffineChart ch;
    ch.origin = points[0];
    IntMatrix A(dim, static_cast<int>(points.size()));
    for (size_t j = 0; j < points.size(); ++j)
        for (int r = 0; r < dim; ++r)
            A(r, static_cast<int>(j)) = checked::sub(points[j][r], ch.origin[r]);
    auto h = hermite_normal_form(A, true);
    ch.U = h.U;
    ch.U_inv = unimodular_inverse(h.U);
    ch.k = h.rank;
    return ch;
}

std::optional<IntPoint> AffineChart::to_local(const IntPoint &x) const {
    IntPoint y = U * (x - origin);
    for (int r = k; r < y.size(); ++r)
        if (y[r] != 0)
            return std::nullopt;
    IntPoint out(k);
    for (int r = 0; r < k; ++r)
        out[r] = y[r];
    return out;
}

IntPoint AffineChart::to_global(const IntPoint &y) const {
    IntPoint full(origin.size());
    for (int r = 0; r < k; ++r)
        full[r] = y[r];
    return origin + U_inv * full;
}

Polytope Polytope::hull(std::span<const IntPoint> points, int dim) {
    if (points.empty())
        throw DegenerateInput("empty point set");
    if (dim < 1 || dim > kMaxDim)
        throw UnsupportedDimension("dimension " + std::to_string(dim));
    std::vector<IntPoint> pts(points.begin(), points.end());
    for (const auto &p : pts)
        if (p.size() != dim)
            throw DegenerateInput("point of wrong dimension");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope P;
    P.dim_ = dim;
    const int k = affine_rank(pts, dim);
    P.affine_dim_ = k;
    if (k == dim) {
        HullResult h = convex_hull(pts, dim);
        std::vector<int> remap(pts.size(), -1);
        for (int v : h.vertices) {
            remap[v] = static_cast<int>(P.vertices_.size());
            P.vertices_.push_back(pts[v]);
        }
        // sort facets for determinism
        std::vector<int> order(h.facets.size());
        for (size_t i = 0; i < order.size(); ++i)
            order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return h.facets[a] < h.facets[b]; });
        for (int f : order) {
            P.facets_.push_back(h.facets[f]);
            std::vector<int> fv;
            for (int v : h.facet_vertices[f])
                fv.push_back(remap[v]);
            P.facet_vertices_.push_back(std::move(fv));
        }
        return P;
    }
    if (k == 0) {
        P.vertices_ = {pts[0]};
        return P;
    }
    AffineChart ch = AffineChart::of(pts, dim);
    std::vector<IntPoint> loc;
    loc.reserve(pts.size());
    for (const auto &p : pts)
        loc.push_back(*ch.to_local(p));
    auto L = std::make_shared<Polytope>(hull(loc, k));
    for (const auto &v : L->vertices())
        P.vertices_.push_back(ch.to_global(v));
    std::sort(P.vertices_.begin(), P.vertices_.end());
    P.chart_ = std::move(ch);
    P.local_ = std::move(L);
    return P;
}

bool Polytope::contains(const IntPoint &x) const {
    if (full_dimensional()) {
        for (const auto &f : facets_)
            if (f.eval(x) < 0)
                return false;
        return true;
    }
    if (affine_dim_ == 0)
        return x == vertices_[0];
    auto y = chart_->to_local(x);
    return y && local_->contains(*y);
}

bool Polytope::strictly_interior(const IntPoint &x) const {
    if (!full_dimensional())
        return false;
    for (const auto &f : facets_)
        if (f.eval(x) <= 0)
            return false;
    return true;
}

std::vector<HalfSpace> facet_inequalities(const Polytope &P) {
    if (!P.full_dimensional())
        throw DegenerateInput("polytope is not full-dimensional");
    return P.facets();
}

namespace {

// Visits the lattice points of the halfspace system inside [lo, hi] in lex
// order. The last coordinate range is solved directly from the inequalities.
// The visitor returns false to stop early.
void scan(std::span<const HalfSpace> hs, const IntPoint &lo, const IntPoint &hi, int strict,
          const std::function<bool(const IntPoint &)> &visit) {
    const int d = lo.size();
    IntPoint x = lo;
    // partial[i] = normal . x restricted to the first coordinates fixed so far
    std::vector<Int> partial(hs.size());
    std::function<bool(int)> rec = [&](int level) -> bool {
        if (level == d - 1) {
            Int a = lo[level], b = hi[level];
            for (size_t f = 0; f < hs.size(); ++f) {
                const Int n = hs[f].normal[level];
                // n * t + partial + offset >= strict
                const Int rhs = checked::sub(strict, checked::add(partial[f], hs[f].offset));
                if (n > 0)
                    a = std::max(a, ceil_div(rhs, n));
                else if (n < 0)
                    b = std::min(b, floor_div(rhs, n));
                else if (rhs > 0)
                    return true;
                if (a > b)
                    return true;
            }
            for (Int t = a; t <= b; ++t) {
                x[level] = t;
                if (!visit(x))
                    return false;
            }
            return true;
        }
        std::vector<Int> saved(partial);
        for (Int t = lo[level]; t <= hi[level]; ++t) {
            x[level] = t;
            for (size_t f = 0; f < hs.size(); ++f)
                partial[f] = checked::add(saved[f], checked::mul(hs[f].normal[level], t));
            if (!rec(level + 1))
                return false;
        }
        partial = saved;
        return true;
    };
    rec(0);
}

void bounding_box(const std::vector<IntPoint> &verts, IntPoint &lo, IntPoint &hi) {
    lo = verts[0];
    hi = verts[0];
    for (const auto &v : verts)
        for (int k = 0; k < v.size(); ++k) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
}

} // namespace

std::vector<IntPoint> lattice_points_in(std::span<const HalfSpace> halfspaces, const IntPoint &lo,
                                        const IntPoint &hi) {
    std::vector<IntPoint> out;
    scan(halfspaces, lo, hi, 0, [&](const IntPoint &x) {
        out.push_back(x);
        return true;
    });
    return out;
}

std::vector<IntPoint> lattice_points(const Polytope &P, bool interior_only) {
    if (P.full_dimensional()) {
        IntPoint lo, hi;
        bounding_box(P.vertices(), lo, hi);
        std::vector<IntPoint> out;
        scan(P.facets(), lo, hi, interior_only ? 1 : 0, [&](const IntPoint &x) {
            out.push_back(x);
            return true;
        });
        return out;
    }
    if (interior_only)
        return {};
    if (P.affine_dim() == 0)
        return P.vertices();
    std::vector<IntPoint> out;
    for (const auto &y : lattice_points(P.local(), false))
        out.push_back(P.chart().to_global(y));
    std::sort(out.begin(), out.end());
    return out;
}

IpInfo ip_info(const Polytope &P) {
    IpInfo info;
    if (!P.full_dimensional())
        return info;
    IntPoint lo, hi;
    bounding_box(P.vertices(), lo, hi);
    int count = 0;
    scan(P.facets(), lo, hi, 1, [&](const IntPoint &x) {
        if (++count == 1)
            info.interior_point = x;
        return count < 2;
    });
    info.ip = count == 1;
    if (!info.ip)
        info.interior_point.reset();
    return info;
}

Polytope translated(const Polytope &P, const IntPoint &t) {
    std::vector<IntPoint> v;
    v.reserve(P.vertices().size());
    for (const auto &x : P.vertices())
        v.push_back(x - t);
    return Polytope::hull(v, P.dim());
}

Polytope transformed(const Polytope &P, const IntMatrix &M) {
    std::vector<IntPoint> v;
    v.reserve(P.vertices().size());
    for (const auto &x : P.vertices())
        v.push_back(M * x);
    return Polytope::hull(v, M.rows());
}

std::vector<RationalPoint> polar_dual(const Polytope &P) {
    const IntPoint zero(P.dim());
    if (!P.strictly_interior(zero))
        throw OriginNotInterior("0 is not an interior point");
    std::vector<RationalPoint> out;
    for (const auto &f : P.facets())
        out.push_back({f.normal, f.offset});
    std::sort(out.begin(), out.end());
    return out;
}

Polytope polar_dual_lattice(const Polytope &P) {
    std::vector<IntPoint> v;
    for (const auto &r : polar_dual(P)) {
        if (!r.integral())
            throw NotReflexive("polar vertex with denominator " + std::to_string(r.denominator));
        v.push_back(r.numerator);
    }
    return Polytope::hull(v, P.dim());
}

Int lattice_distance(const HalfSpace &f) { return f.offset; }

bool all_facets_distance_one(const Polytope &P) {
    return std::all_of(P.facets().begin(), P.facets().end(), [](const HalfSpace &f) { return f.offset == 1; });
}

bool is_reflexive(const Polytope &P) {
    auto info = ip_info(P);
    if (!info.ip)
        return false;
    for (const auto &f : P.facets())
        if (f.eval(*info.interior_point) != 1)
            return false;
    return true;
}

} // namespace reflat

namespace reflat {

Int normalized_volume(const Polytope &P) {
    if (P.affine_dim() == 0)
        return 1;
    if (!P.full_dimensional())
        return normalized_volume(P.local());
    if (P.dim() == 1)
        return P.vertices().back()[0] - P.vertices().front()[0];
    // pyramids from the first vertex over the facets not containing it
    const IntPoint &apex = P.vertices()[0];
    Int vol = 0;
    for (size_t f = 0; f < P.facets().size(); ++f) {
        const Int h = P.facets()[f].eval(apex);
        if (h == 0)
            continue;
        std::vector<IntPoint> fv;
        for (int v : P.facet_vertices()[f])
            fv.push_back(P.vertices()[v]);
        vol = checked::add(vol, checked::mul(h, normalized_volume(Polytope::hull(fv, P.dim()))));
    }
    return vol;
}

} // namespace reflat
