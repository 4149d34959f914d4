#include "reflat/normal_form.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace reflat {

namespace {

void put_entry(std::string &out, Int x) {
    if (x >= -127 && x <= 127) {
        out.push_back(static_cast<char>(static_cast<std::int8_t>(x)));
        return;
    }
    if (x < INT32_MIN || x > INT32_MAX)
        throw OverflowError("normal form entry exceeds int32");
    const auto u = static_cast<std::uint32_t>(static_cast<std::int32_t>(x));
    out.push_back(static_cast<char>(0x80));
    for (int s = 24; s >= 0; s -= 8)
        out.push_back(static_cast<char>((u >> s) & 0xff));
}

} // namespace

NormalFormKey::NormalFormKey(int dim, int nv, const std::vector<Int> &coords) {
    if (dim < 0 || dim > 255 || nv < 0 || nv > 255)
        throw OverflowError("normal form header out of range");
    bytes_.push_back(static_cast<char>(dim));
    bytes_.push_back(static_cast<char>(nv));
    for (Int x : coords)
        put_entry(bytes_, x);
}

size_t NormalFormKey::decode_prefix(std::string_view data, NormalFormKey &out) {
    if (data.size() < 2)
        throw CorruptDatabase("truncated normal form header");
    const size_t n = static_cast<size_t>(static_cast<unsigned char>(data[0])) *
                     static_cast<unsigned char>(data[1]);
    size_t pos = 2;
    for (size_t i = 0; i < n; ++i) {
        if (pos >= data.size())
            throw CorruptDatabase("truncated normal form");
        if (static_cast<unsigned char>(data[pos]) == 0x80) {
            if (pos + 5 > data.size())
                throw CorruptDatabase("truncated normal form escape");
            pos += 5;
        } else {
            ++pos;
        }
    }
    out.bytes_ = std::string(data.substr(0, pos));
    return pos;
}

NormalFormKey NormalFormKey::from_bytes(std::string bytes) {
    NormalFormKey k;
    if (decode_prefix(bytes, k) != bytes.size())
        throw CorruptDatabase("trailing bytes after normal form");
    return k;
}

std::vector<Int> NormalFormKey::coords() const {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(dim()) * nv());
    for (size_t pos = 2; pos < bytes_.size();) {
        const auto b = static_cast<unsigned char>(bytes_[pos]);
        if (b == 0x80) {
            std::uint32_t u = 0;
            for (int i = 1; i <= 4; ++i)
                u = (u << 8) | static_cast<unsigned char>(bytes_[pos + i]);
            out.push_back(static_cast<std::int32_t>(u));
            pos += 5;
        } else {
            out.push_back(static_cast<std::int8_t>(b));
            ++pos;
        }
    }
    return out;
}

std::vector<IntPoint> NormalFormKey::vertices() const {
    const int d = dim();
    auto c = coords();
    std::vector<IntPoint> out;
    for (int j = 0; j < nv(); ++j)
        out.emplace_back(std::span<const Int>(c.data() + static_cast<size_t>(j) * d, d));
    return out;
}

std::string NormalFormKey::text() const {
    std::ostringstream os;
    os << "NF " << dim() << ' ' << nv() << ':';
    for (Int x : coords())
        os << ' ' << x;
    return os.str();
}

NormalFormKey NormalFormKey::parse_text(const std::string &line) {
    std::istringstream in(line);
    std::string tag, v;
    int d = 0;
    if (!(in >> tag >> d >> v) || tag != "NF" || v.empty() || v.back() != ':')
        throw ParseError("bad normal form line: " + line);
    const int nv = std::stoi(v.substr(0, v.size() - 1));
    std::vector<Int> c;
    Int x;
    while (in >> x)
        c.push_back(x);
    if (!in.eof() || c.size() != static_cast<size_t>(d) * nv)
        throw ParseError("bad normal form coordinates: " + line);
    return NormalFormKey(d, nv, c);
}

std::vector<std::vector<Int>> pairing_matrix(const Polytope &P) {
    std::vector<std::vector<Int>> pm;
    for (const auto &f : P.facets()) {
        std::vector<Int> row;
        for (const auto &v : P.vertices())
            row.push_back(f.eval(v));
        pm.push_back(std::move(row));
    }
    return pm;
}

namespace {

struct State {
    std::vector<std::uint8_t> used;
    std::vector<int> perm;
    std::vector<int> starts; // block boundaries, last entry == nv
};

// All column orders under which the pairing matrix, after a suitable row
// order, is lexicographically maximal (row-major flattening).
std::vector<std::vector<int>> optimal_column_orders(const Polytope &P) {
    const int nf = static_cast<int>(P.facets().size());
    const int nv = static_cast<int>(P.vertices().size());
    std::vector<Int> pm(static_cast<size_t>(nf) * nv);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nv; ++j)
            pm[static_cast<size_t>(i) * nv + j] = P.facets()[i].eval(P.vertices()[j]);

    State init;
    init.used.assign(nf, 0);
    init.perm.resize(nv);
    for (int j = 0; j < nv; ++j)
        init.perm[j] = j;
    init.starts = {0, nv};
    std::vector<State> states{init}, next;

    std::vector<Int> best(nv), cand(nv);
    std::vector<std::pair<Int, int>> buf;
    for (int level = 0; level < nf; ++level) {
        next.clear();
        bool have_best = false;
        for (const State &s : states) {
            for (int r = 0; r < nf; ++r) {
                if (s.used[r])
                    continue;
                const Int *row = &pm[static_cast<size_t>(r) * nv];
                // build candidate block by block, aborting once it is smaller
                int cmp = have_best ? 0 : 1;
                bool worse = false;
                for (size_t b = 0; b + 1 < s.starts.size() && !worse; ++b) {
                    const int a = s.starts[b], e = s.starts[b + 1];
                    for (int p = a; p < e; ++p)
                        cand[p] = row[s.perm[p]];
                    std::sort(cand.begin() + a, cand.begin() + e, std::greater<>());
                    if (cmp == 0)
                        for (int p = a; p < e; ++p) {
                            if (cand[p] != best[p]) {
                                cmp = cand[p] > best[p] ? 1 : -1;
                                break;
                            }
                        }
                    worse = cmp < 0;
                }
                if (worse)
                    continue;
                if (cmp > 0) {
                    best = cand;
                    have_best = true;
                    next.clear();
                }
                State t;
                t.used = s.used;
                t.used[r] = 1;
                t.perm.resize(nv);
                t.starts.clear();
                for (size_t b = 0; b + 1 < s.starts.size(); ++b) {
                    const int a = s.starts[b], e = s.starts[b + 1];
                    buf.clear();
                    for (int p = a; p < e; ++p)
                        buf.emplace_back(-row[s.perm[p]], s.perm[p]);
                    std::sort(buf.begin(), buf.end());
                    for (int p = a; p < e; ++p) {
                        t.perm[p] = buf[p - a].second;
                        if (p == a || buf[p - a].first != buf[p - a - 1].first)
                            t.starts.push_back(p);
                    }
                }
                t.starts.push_back(nv);
                next.push_back(std::move(t));
            }
        }
        // identical (used rows, ordered column partition) states are redundant
        std::sort(next.begin(), next.end(), [](const State &x, const State &y) {
            return std::tie(x.used, x.perm) < std::tie(y.used, y.perm);
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const State &x, const State &y) { return x.used == y.used && x.perm == y.perm; }),
                   next.end());
        states.swap(next);
    }

    std::vector<std::vector<int>> out;
    out.reserve(states.size());
    for (auto &s : states)
        out.push_back(std::move(s.perm));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Lexicographically smallest vertex-major HNF over the optimal orders. With
// `affine`, coordinates are taken relative to the first vertex of the order.
NormalFormKey canonical_key(const Polytope &P, bool affine) {
    const int d = P.dim();
    const int nv = static_cast<int>(P.vertices().size());
    std::vector<Int> best, flat(static_cast<size_t>(d) * nv);
    for (const auto &perm : optimal_column_orders(P)) {
        IntMatrix M(d, nv);
        const IntPoint &anchor = P.vertices()[perm[0]];
        for (int j = 0; j < nv; ++j) {
            IntPoint v = affine ? P.vertices()[perm[j]] - anchor : P.vertices()[perm[j]];
            for (int r = 0; r < d; ++r)
                M(r, j) = v[r];
        }
        IntMatrix H = hermite_normal_form(M, false).H;
        for (int j = 0; j < nv; ++j)
            for (int r = 0; r < d; ++r)
                flat[static_cast<size_t>(j) * d + r] = H(r, j);
        if (best.empty() || flat < best)
            best = flat;
    }
    return NormalFormKey(d, nv, best);
}

} // namespace

NormalFormKey linear_normal_form_unchecked(const Polytope &P) {
    if (!P.strictly_interior(IntPoint(P.dim())))
        throw OriginNotInterior("normal form needs 0 in the interior");
    return canonical_key(P, false);
}

NormalFormKey linear_normal_form(const Polytope &P) {
    auto info = ip_info(P);
    if (!info.ip || !info.interior_point->is_zero())
        throw NotIP("linear normal form needs an IP polytope with interior point 0");
    return canonical_key(P, false);
}

NormalFormKey affine_normal_form(const Polytope &P) {
    if (P.affine_dim() == 0)
        return NormalFormKey(0, 1, {});
    if (P.full_dimensional())
        return canonical_key(P, true);
    return canonical_key(P.local(), true);
}

bool is_self_dual(const Polytope &P) {
    auto info = ip_info(P);
    if (!info.ip)
        throw NotReflexive("not an IP polytope");
    Polytope Q = info.interior_point->is_zero() ? P : translated(P, *info.interior_point);
    if (!all_facets_distance_one(Q))
        throw NotReflexive("facet at lattice distance > 1");
    return canonical_key(Q, false) == canonical_key(polar_dual_lattice(Q), false);
}

} // namespace reflat
