#include "reflat/ipc.hpp"

namespace reflat {

namespace {

void require_ip_at_origin(const Polytope &P) {
    auto info = ip_info(P);
    if (!info.ip || !info.interior_point->is_zero())
        throw NotIP("expected an IP polytope with interior point 0");
}

Polytope tilde_unchecked(const Polytope &P) {
    const int d = P.dim();
    auto dual = polar_dual(P);
    IntPoint lo(d), hi(d);
    for (int k = 0; k < d; ++k) {
        lo[k] = floor_div(dual[0].numerator[k], dual[0].denominator);
        hi[k] = lo[k];
    }
    for (const auto &r : dual)
        for (int k = 0; k < d; ++k) {
            lo[k] = std::min(lo[k], floor_div(r.numerator[k], r.denominator));
            hi[k] = std::max(hi[k], ceil_div(r.numerator[k], r.denominator));
        }
    std::vector<HalfSpace> hs;
    for (const auto &v : P.vertices())
        hs.push_back({v, 1});
    return Polytope::hull(lattice_points_in(hs, lo, hi), d);
}

bool confined(const Polytope &T) { return T.full_dimensional() && T.strictly_interior(IntPoint(T.dim())); }

} // namespace

Polytope tilde(const Polytope &P) {
    require_ip_at_origin(P);
    return tilde_unchecked(P);
}

bool is_ip_confined(const Polytope &P) { return confined(tilde(P)); }

Polytope ipc_closure(const Polytope &P) {
    Polytope T = tilde(P);
    if (!confined(T))
        throw NotIPConfined("tilde is not an IP polytope");
    return tilde_unchecked(T);
}

IpcReport ipc_report(const Polytope &P) {
    IpcReport r;
    r.input = P;
    r.tilde = tilde(P);
    r.ip_confined = confined(r.tilde);
    if (r.ip_confined) {
        r.closure = tilde_unchecked(r.tilde);
        r.ipc_closed = *r.closure == P;
    }
    return r;
}

} // namespace reflat
