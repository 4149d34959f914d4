#include "reflat/faces.hpp"

namespace reflat {

namespace {

// Vertex sets of the k-faces of a full-dimensional polytope, in its own
// coordinates.
std::set<std::vector<IntPoint>> face_vertex_sets(const Polytope &F, int k) {
    std::set<std::vector<IntPoint>> out;
    const int n = F.dim();
    if (k == n) {
        out.insert(F.vertices());
        return out;
    }
    if (k == 0) {
        for (const auto &v : F.vertices())
            out.insert({v});
        return out;
    }
    for (const auto &fv : F.facet_vertices()) {
        std::vector<IntPoint> verts;
        for (int v : fv)
            verts.push_back(F.vertices()[v]);
        if (k == n - 1) {
            out.insert(verts);
            continue;
        }
        Polytope facet = Polytope::hull(verts, n);
        for (const auto &sub : face_vertex_sets(facet.local(), k)) {
            std::vector<IntPoint> g;
            for (const auto &y : sub)
                g.push_back(facet.chart().to_global(y));
            std::sort(g.begin(), g.end());
            out.insert(std::move(g));
        }
    }
    return out;
}

} // namespace

std::vector<Polytope> faces_of_dimension(const Polytope &P, int k) {
    if (k < 0 || k > P.affine_dim())
        return {};
    if (k == P.affine_dim())
        return {P};
    const bool full = P.full_dimensional();
    std::vector<Polytope> out;
    for (const auto &verts : face_vertex_sets(full ? P : P.local(), k)) {
        if (full) {
            out.push_back(Polytope::hull(verts, P.dim()));
            continue;
        }
        std::vector<IntPoint> g;
        for (const auto &y : verts)
            g.push_back(P.chart().to_global(y));
        out.push_back(Polytope::hull(g, P.dim()));
    }
    return out;
}

std::set<NormalFormKey> face_classes(const std::vector<Polytope> &polytopes, int k) {
    std::set<NormalFormKey> out;
    for (const auto &P : polytopes)
        for (const auto &F : faces_of_dimension(P, k))
            out.insert(affine_normal_form(F));
    return out;
}

RdTable rd_table(const std::vector<std::vector<Polytope>> &reflexives) {
    RdTable t;
    t.max_rd = static_cast<int>(reflexives.size());
    t.raw.assign(t.max_rd + 1, std::vector<size_t>(t.max_rd + 1, 0));
    t.exact = t.raw;
    // classes[r][d]
    std::vector<std::vector<std::set<NormalFormKey>>> classes(t.max_rd + 1, std::vector<std::set<NormalFormKey>>(t.max_rd + 1));
    for (int r = 1; r <= t.max_rd; ++r)
        for (int d = 1; d <= r; ++d) {
            classes[r][d] = face_classes(reflexives[r - 1], d);
            t.raw[r][d] = classes[r][d].size();
            size_t n = 0;
            for (const auto &key : classes[r][d]) {
                bool lower = false;
                for (int q = d; q < r && !lower; ++q)
                    lower = classes[q][d].count(key) > 0;
                n += !lower;
            }
            t.exact[r][d] = n;
        }
    return t;
}

std::vector<Polytope> polytopes_of(const std::set<NormalFormKey> &keys) {
    std::vector<Polytope> out;
    out.reserve(keys.size());
    for (const auto &k : keys)
        out.push_back(Polytope::hull(k.vertices(), k.dim()));
    return out;
}

RdTable classify_by_reflexive_dimension(int max_rd, const ClassifyOptions &opts) {
    if (max_rd < 1 || max_rd > 3)
        throw UnsupportedDimension("reflexive dimension table supports max_rd in {1, 2, 3}");
    std::vector<std::vector<Polytope>> refl;
    for (int r = 1; r <= max_rd; ++r)
        refl.push_back(polytopes_of(classify_reflexive(r, opts).found));
    return rd_table(refl);
}

} // namespace reflat
