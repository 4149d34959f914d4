#include "reflat/hull.hpp"

#include <bit>

namespace reflat {

namespace {

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    int count() const {
        int c = 0;
        for (auto x : w)
            c += std::popcount(x);
        return c;
    }
    Bits operator&(const Bits &o) const {
        Bits r;
        for (int k = 0; k < W; ++k)
            r.w[k] = w[k] & o.w[k];
        return r;
    }
    bool subset_of(const Bits &o) const {
        for (int k = 0; k < W; ++k)
            if (w[k] & ~o.w[k])
                return false;
        return true;
    }
};

constexpr int kMaxHom = kMaxDim + 1;

template <int W>
struct Ray {
    std::array<Int, kMaxHom> h{};
    Bits<W> zero;
};

void normalize(std::array<Int, kMaxHom> &h, int n) {
    Int g = 0;
    for (int k = 0; k < n; ++k)
        g = std::gcd(g, h[k]);
    if (g > 1)
        for (int k = 0; k < n; ++k)
            h[k] /= g;
}

Int eval_row(const IntPoint &p, const std::array<Int, kMaxHom> &h, int dim) {
    __int128 s = h[0];
    for (int k = 0; k < dim; ++k)
        s += static_cast<__int128>(p[k]) * h[k + 1];
    return checked::narrow(s);
}

// Picks dim+1 affinely independent points greedily (fraction-free elimination
// on homogenized rows). Returns fewer indices if the set is degenerate.
std::vector<int> independent_subset(std::span<const IntPoint> pts, int dim) {
    const int n1 = dim + 1;
    std::vector<std::array<__int128, kMaxHom>> basis;
    std::vector<int> pivots, chosen;
    for (int i = 0; i < static_cast<int>(pts.size()) && static_cast<int>(chosen.size()) < n1; ++i) {
        std::array<__int128, kMaxHom> row{};
        row[0] = 1;
        for (int k = 0; k < dim; ++k)
            row[k + 1] = pts[i][k];
        for (size_t b = 0; b < basis.size(); ++b) {
            int pc = pivots[b];
            if (row[pc] == 0)
                continue;
            __int128 f = row[pc], g = basis[b][pc];
            for (int k = 0; k < n1; ++k)
                row[k] = row[k] * g - basis[b][k] * f;
            __int128 c = 0;
            for (int k = 0; k < n1; ++k) {
                __int128 a = row[k] < 0 ? -row[k] : row[k];
                while (a) {
                    __int128 t = c % a;
                    c = a;
                    a = t;
                }
            }
            if (c > 1)
                for (int k = 0; k < n1; ++k)
                    row[k] /= c;
        }
        int pc = -1;
        for (int k = 0; k < n1; ++k)
            if (row[k] != 0) {
                pc = k;
                break;
            }
        if (pc < 0)
            continue;
        basis.push_back(row);
        pivots.push_back(pc);
        chosen.push_back(i);
    }
    return chosen;
}

template <int W>
HullResult hull_impl(std::span<const IntPoint> pts, int dim) {
    const int n = static_cast<int>(pts.size());
    const int n1 = dim + 1;
    std::vector<int> basis = independent_subset(pts, dim);
    if (static_cast<int>(basis.size()) < n1)
        throw DegenerateInput("points do not span the ambient space");

    // Initial simplicial cone: the rays are the columns of adj(A0) scaled by
    // sign(det A0), so that row j of A0 vanishes on every ray except ray j.
    IntMatrix A0(n1, n1);
    for (int j = 0; j < n1; ++j) {
        A0(j, 0) = 1;
        for (int k = 0; k < dim; ++k)
            A0(j, k + 1) = pts[basis[j]][k];
    }
    const Int det = determinant(A0);
    std::vector<Ray<W>> rays(n1);
    IntMatrix minor(n1 - 1, n1 - 1);
    for (int j = 0; j < n1; ++j) {
        for (int k = 0; k < n1; ++k) {
            // cofactor C_{jk}: delete row j, column k
            for (int r = 0, rr = 0; r < n1; ++r) {
                if (r == j)
                    continue;
                for (int c = 0, cc = 0; c < n1; ++c) {
                    if (c == k)
                        continue;
                    minor(rr, cc++) = A0(r, c);
                }
                ++rr;
            }
            Int cof = determinant(minor);
            if ((j + k) % 2)
                cof = -cof;
            rays[j].h[k] = det > 0 ? cof : -cof;
        }
        normalize(rays[j].h, n1);
        for (int r = 0; r < n1; ++r)
            if (r != j)
                rays[j].zero.set(basis[r]);
    }

    std::vector<char> in_basis(n, 0);
    for (int b : basis)
        in_basis[b] = 1;

    std::vector<Int> s;
    std::vector<Ray<W>> next;
    std::vector<int> pos, negs;
    for (int i = 0; i < n; ++i) {
        if (in_basis[i])
            continue;
        const int nr = static_cast<int>(rays.size());
        s.resize(nr);
        pos.clear();
        negs.clear();
        for (int k = 0; k < nr; ++k) {
            s[k] = eval_row(pts[i], rays[k].h, dim);
            if (s[k] > 0)
                pos.push_back(k);
            else if (s[k] < 0)
                negs.push_back(k);
        }
        if (negs.empty()) {
            for (int k = 0; k < nr; ++k)
                if (s[k] == 0)
                    rays[k].zero.set(i);
            continue;
        }
        next.clear();
        for (int k = 0; k < nr; ++k)
            if (s[k] >= 0) {
                next.push_back(rays[k]);
                if (s[k] == 0)
                    next.back().zero.set(i);
            }
        for (int p : pos)
            for (int q : negs) {
                Bits<W> common = rays[p].zero & rays[q].zero;
                if (common.count() < n1 - 2)
                    continue;
                bool adjacent = true;
                for (int t = 0; t < nr && adjacent; ++t)
                    if (t != p && t != q && common.subset_of(rays[t].zero))
                        adjacent = false;
                if (!adjacent)
                    continue;
                Ray<W> r;
                for (int k = 0; k < n1; ++k)
                    r.h[k] = checked::mul_add(s[p], rays[q].h[k], -s[q], rays[p].h[k]);
                normalize(r.h, n1);
                r.zero = common;
                r.zero.set(i);
                next.push_back(r);
            }
        rays.swap(next);
    }

    HullResult res;
    const int nf = static_cast<int>(rays.size());
    res.facets.reserve(nf);
    for (const auto &r : rays) {
        HalfSpace f;
        f.normal = IntPoint(dim);
        for (int k = 0; k < dim; ++k)
            f.normal[k] = r.h[k + 1];
        f.offset = r.h[0];
        res.facets.push_back(f);
    }

    // A point is a vertex iff no other point lies on every facet through it.
    const int fw = (nf + 63) / 64;
    std::vector<std::uint64_t> inc(static_cast<size_t>(n) * fw, 0);
    for (int f = 0; f < nf; ++f)
        for (int i = 0; i < n; ++i)
            if (rays[f].zero.test(i))
                inc[static_cast<size_t>(i) * fw + (f >> 6)] |= std::uint64_t{1} << (f & 63);
    auto contains = [&](int a, int b) { // inc(a) ⊇ inc(b)
        for (int k = 0; k < fw; ++k)
            if (inc[static_cast<size_t>(b) * fw + k] & ~inc[static_cast<size_t>(a) * fw + k])
                return false;
        return true;
    };
    std::vector<char> is_vertex(n, 0);
    for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int k = 0; k < fw; ++k)
            any |= inc[static_cast<size_t>(i) * fw + k] != 0;
        if (!any)
            continue;
        bool v = true;
        for (int j = 0; j < n && v; ++j)
            if (j != i && contains(j, i))
                v = false;
        is_vertex[i] = v;
        if (v)
            res.vertices.push_back(i);
    }
    res.facet_vertices.resize(nf);
    for (int f = 0; f < nf; ++f)
        for (int v : res.vertices)
            if (rays[f].zero.test(v))
                res.facet_vertices[f].push_back(v);
    return res;
}

} // namespace

HullResult convex_hull(std::span<const IntPoint> points, int dim) {
    if (dim < 1 || dim > kMaxDim)
        throw UnsupportedDimension("hull dimension " + std::to_string(dim));
    const size_t n = points.size();
    if (n <= 64)
        return hull_impl<1>(points, dim);
    if (n <= 128)
        return hull_impl<2>(points, dim);
    if (n <= 512)
        return hull_impl<8>(points, dim);
    if (n <= 4096)
        return hull_impl<64>(points, dim);
    throw UnsupportedDimension("hull input exceeds 4096 points");
}

int affine_rank(std::span<const IntPoint> points, int dim) {
    if (points.empty())
        return -1;
    return static_cast<int>(independent_subset(points, dim).size()) - 1;
}

} // namespace reflat
