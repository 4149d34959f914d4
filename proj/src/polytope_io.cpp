#include "reflat/polytope_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace reflat {

namespace {

Int read_int(std::istream &in, const char *what) {
    std::string tok;
    if (!(in >> tok))
        throw ParseError(std::string("unexpected end of input reading ") + what);
    size_t pos = 0;
    long long v;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception &) {
        throw ParseError("not an integer: '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError("not an integer: '" + tok + "'");
    return v;
}

} // namespace

std::vector<IntPoint> read_points(std::istream &in) {
    const Int v = read_int(in, "vertex count");
    const Int d = read_int(in, "dimension");
    if (v < 1)
        throw ParseError("vertex count must be positive");
    if (d < 1 || d > kMaxDim)
        throw UnsupportedDimension("dimension " + std::to_string(d));
    std::vector<IntPoint> pts;
    pts.reserve(v);
    for (Int i = 0; i < v; ++i) {
        IntPoint p(static_cast<int>(d));
        for (int k = 0; k < d; ++k)
            p[k] = read_int(in, "coordinate");
        pts.push_back(p);
    }
    return pts;
}

Polytope read_polytope(std::istream &in) {
    auto pts = read_points(in);
    return Polytope::hull(pts, pts[0].size());
}

Polytope parse_polytope(const std::string &text) {
    std::istringstream in(text);
    return read_polytope(in);
}

void write_points(std::ostream &out, const std::vector<IntPoint> &pts, int dim) {
    out << pts.size() << ' ' << dim << '\n';
    for (const auto &p : pts) {
        for (int k = 0; k < p.size(); ++k)
            out << (k ? " " : "") << p[k];
        out << '\n';
    }
}

void write_polytope(std::ostream &out, const Polytope &P) { write_points(out, P.vertices(), P.dim()); }

} // namespace reflat
