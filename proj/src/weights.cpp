#include "reflat/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace reflat {

WeightSystem WeightSystem::of(std::vector<Int> w) {
    WeightSystem ws;
    Int g = 0;
    for (Int x : w) {
        if (x <= 0)
            throw ParseError("weights must be positive");
        g = gcd(g, x);
    }
    if (g > 1)
        for (Int &x : w)
            x /= g;
    for (Int x : w)
        ws.degree = checked::add(ws.degree, x);
    ws.weights = std::move(w);
    return ws;
}

WeightMatrix::WeightMatrix(std::vector<std::vector<Int>> r) : rows(std::move(r)) {
    for (const auto &row : rows) {
        Int s = 0;
        for (Int x : row)
            s = checked::add(s, x);
        degrees.push_back(s);
    }
}

WeightMatrix parse_weight_line(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;)
        tok.push_back(t);
    auto to_int = [](const std::string &t) {
        size_t pos = 0;
        Int v = 0;
        try {
            v = std::stoll(t, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos == 0 || pos != t.size())
            throw ParseError("not an integer: '" + t + "'");
        return v;
    };
    size_t q0 = tok.size();
    for (size_t i = 0; i < tok.size(); ++i)
        if (tok[i].rfind("/Z", 0) == 0) {
            q0 = i;
            break;
        }
    std::vector<Int> nums;
    for (size_t i = 0; i < q0; ++i)
        nums.push_back(to_int(tok[i]));
    if (nums.size() < 2)
        throw ParseError("weight line needs a degree and at least one weight");

    // smallest J for which the line splits into groups "D_i W_i1 .. W_iJ"
    // with D_i equal to the row sum
    WeightMatrix W;
    for (size_t J = 1; J < nums.size(); ++J) {
        if (nums.size() % (J + 1))
            continue;
        std::vector<std::vector<Int>> rows;
        bool ok = true;
        for (size_t g = 0; g < nums.size() && ok; g += J + 1) {
            std::vector<Int> row(nums.begin() + g + 1, nums.begin() + g + 1 + J);
            Int s = 0;
            for (Int x : row) {
                if (x < 0)
                    ok = false;
                s += x;
            }
            ok = ok && s == nums[g] && s > 0;
            rows.push_back(std::move(row));
        }
        if (ok) {
            W = WeightMatrix(std::move(rows));
            break;
        }
    }
    if (W.rows.empty())
        throw ParseError("degrees do not match weight sums: " + line);
    const int J = W.num_cols();
    for (int j = 0; j < J; ++j) {
        bool any = false;
        for (const auto &r : W.rows)
            any |= r[j] > 0;
        if (!any)
            throw ParseError("weight column " + std::to_string(j) + " is zero");
    }

    for (size_t i = q0; i < tok.size();) {
        const std::string &t = tok[i];
        if (t.size() < 4 || t.rfind("/Z", 0) != 0 || t.back() != ':')
            throw ParseError("bad quotient tag: '" + t + "'");
        Quotient q;
        q.order = to_int(t.substr(2, t.size() - 3));
        if (q.order < 1)
            throw ParseError("quotient order must be positive");
        ++i;
        for (int j = 0; j < J; ++j, ++i) {
            if (i >= tok.size())
                throw ParseError("quotient needs " + std::to_string(J) + " phases");
            q.phases.push_back(to_int(tok[i]));
        }
        W.quotients.push_back(std::move(q));
    }
    return W;
}

std::string format_weight_line(const WeightMatrix &W) {
    std::ostringstream os;
    for (size_t i = 0; i < W.rows.size(); ++i) {
        os << (i ? "  " : "") << W.degrees[i];
        for (Int x : W.rows[i])
            os << ' ' << x;
    }
    for (const auto &q : W.quotients) {
        os << " /Z" << q.order << ':';
        for (Int a : q.phases)
            os << ' ' << a;
    }
    return os.str();
}

std::string format_weight_line(const WeightSystem &w) { return format_weight_line(WeightMatrix(w)); }

WeightSystem relation_from_simplex(std::span<const IntPoint> vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 2)
        throw NotSimplex("need at least two vertices");
    const int d = vertices[0].size();
    if (n != d + 1 || affine_rank(vertices, d) != d)
        throw NotSimplex("vertices are not an affinely independent set of d+1 points");
    IntMatrix V = IntMatrix::from_columns(vertices, d);
    IntMatrix K = integer_kernel(V);
    std::vector<Int> w(n);
    Int s = 0;
    for (int j = 0; j < n; ++j) {
        w[j] = K(j, 0);
        s += w[j];
    }
    if (s < 0)
        for (Int &x : w)
            x = -x;
    for (Int x : w)
        if (x <= 0)
            throw OriginNotInterior("0 is not interior to the simplex");
    return WeightSystem::of(std::move(w));
}

std::vector<IntPoint> witness_simplex(const WeightSystem &w) {
    const int n = static_cast<int>(w.weights.size());
    if (n - 1 > kMaxDim || n < 2)
        throw UnsupportedDimension("simplex dimension " + std::to_string(n - 1));
    IntMatrix col(n, 1);
    for (int j = 0; j < n; ++j)
        col(j, 0) = w.weights[j];
    auto h = hermite_normal_form(col, true);
    std::vector<IntPoint> out;
    for (int j = 0; j < n; ++j) {
        IntPoint v(n - 1);
        for (int r = 1; r < n; ++r)
            v[r - 1] = h.U(r, j);
        out.push_back(v);
    }
    return out;
}

namespace {

void enumerate_monomials(const WeightMatrix &W, std::vector<std::vector<Int>> &out) {
    const int I = W.num_rows(), J = W.num_cols();
    std::vector<Int> m(J, 0), res(W.degrees);
    std::function<void(int)> rec = [&](int j) {
        if (j == J) {
            for (Int r : res)
                if (r != 0)
                    return;
            for (const auto &q : W.quotients) {
                Int s = 0;
                for (int t = 0; t < J; ++t)
                    s = checked::add(s, checked::mul(q.phases[t], m[t] - 1));
                if (mod(s, q.order) != 0)
                    return;
            }
            out.push_back(m);
            return;
        }
        Int hi = -1;
        for (int i = 0; i < I; ++i)
            if (W.rows[i][j] > 0) {
                Int b = res[i] / W.rows[i][j];
                hi = hi < 0 ? b : std::min(hi, b);
            }
        if (hi < 0)
            throw ParseError("weight column without a positive entry");
        for (Int v = 0; v <= hi; ++v) {
            m[j] = v;
            for (int i = 0; i < I; ++i)
                res[i] -= W.rows[i][j] * v;
            rec(j + 1);
            for (int i = 0; i < I; ++i)
                res[i] += W.rows[i][j] * v;
        }
        m[j] = 0;
    };
    rec(0);
}

} // namespace

namespace {

NewtonData newton_points(const WeightMatrix &W) {
    const int I = W.num_rows(), J = W.num_cols();
    if (I == 0 || J == 0)
        throw EmptyNewton("empty weight matrix");
    IntMatrix A(I, J);
    for (int i = 0; i < I; ++i)
        for (int j = 0; j < J; ++j)
            A(i, j) = W.rows[i][j];
    IntMatrix K = integer_kernel(A);
    const int k = K.cols();
    if (k < 1 || k > kMaxDim)
        throw UnsupportedDimension("Newton polytope dimension " + std::to_string(k));
    IntMatrix L = saturated_left_inverse(K);

    NewtonData nd;
    nd.dim = k;
    enumerate_monomials(W, nd.monomials);
    if (nd.monomials.empty())
        throw EmptyNewton("no monomials of the given degrees");

    std::optional<IntMatrix> basis;
    if (!W.quotients.empty()) {
        // sublattice {y : sum_j a_j (K y)_j = 0 mod n for every quotient}
        const int nq = static_cast<int>(W.quotients.size());
        IntMatrix C(nq, k + nq);
        for (int q = 0; q < nq; ++q) {
            for (int c = 0; c < k; ++c) {
                Int s = 0;
                for (int j = 0; j < J; ++j)
                    s = checked::add(s, checked::mul(W.quotients[q].phases[j], K(j, c)));
                C(q, c) = s;
            }
            C(q, k + q) = W.quotients[q].order;
        }
        IntMatrix G = integer_kernel(C);
        IntMatrix Gt(G.cols(), k);
        for (int r = 0; r < G.cols(); ++r)
            for (int c = 0; c < k; ++c)
                Gt(r, c) = G(c, r);
        auto h = hermite_normal_form(Gt, false);
        IntMatrix B(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                B(r, c) = h.H(r, c);
        basis = B;
    }

    for (const auto &m : nd.monomials) {
        IntPoint x(J);
        for (int j = 0; j < J; ++j)
            x[j] = m[j] - 1;
        IntPoint y(k);
        for (int r = 0; r < k; ++r) {
            __int128 s = 0;
            for (int j = 0; j < J; ++j)
                s += static_cast<__int128>(L(r, j)) * x[j];
            y[r] = checked::narrow(s);
        }
        if (basis) {
            auto z = hnf_coordinates(*basis, y);
            if (!z)
                throw Error("monomial outside the quotient lattice");
            y = *z;
        }
        nd.points.push_back(y);
    }
    return nd;
}

} // namespace

NewtonData newton_data(const WeightMatrix &W) {
    NewtonData nd = newton_points(W);
    nd.polytope = Polytope::hull(nd.points, nd.dim);
    return nd;
}

bool is_ip_weight(const WeightMatrix &W) {
    NewtonData nd = newton_points(W);
    // settle degenerate cases before any hull or chart is built
    if (affine_rank(nd.points, nd.dim) < nd.dim)
        return false;
    Polytope P = Polytope::hull(nd.points, nd.dim);
    return P.strictly_interior(IntPoint(P.dim()));
}

bool is_ip_simplex_relation(const WeightSystem &w) {
    const Int D = w.degree;
    for (Int k = 2; k < D; ++k) {
        Int sum = 0;
        bool zero = false;
        for (Int x : w.weights) {
            Int r = (k * x) % D;
            if (r == 0) {
                zero = true;
                break;
            }
            sum += r;
        }
        if (!zero && sum == D)
            return false;
    }
    return true;
}

Int ip_simplex_degree_bound(int d) {
    Int s = 2;
    for (int i = 1; i < d; ++i)
        s = checked::add(checked::mul(s, s - 1), 1);
    return checked::mul(2, checked::mul(s - 1, s - 1));
}

std::vector<WeightSystem> enumerate_ip_simplex_relations(int d) {
    if (d < 1 || d > 3)
        throw UnsupportedDimension("relation enumeration supports 1 <= d <= 3");
    const int n = d + 1;
    const Int bound = ip_simplex_degree_bound(d);
    std::vector<WeightSystem> out;
    std::vector<Int> w(n);
    // nondecreasing w with every entry <= D/2
    std::function<void(int, Int, Int, Int)> rec = [&](int j, Int lo, Int rest, Int D) {
        if (j == n - 1) {
            if (rest < lo || 2 * rest > D)
                return;
            w[j] = rest;
            Int g = 0;
            for (Int x : w)
                g = gcd(g, x);
            if (g != 1)
                return;
            WeightSystem ws;
            ws.weights = w;
            ws.degree = D;
            if (is_ip_simplex_relation(ws)) {
                ws.ip_weight = is_ip_weight(WeightMatrix(ws));
                out.push_back(ws);
            }
            return;
        }
        for (Int x = lo; x * (n - j) <= rest; ++x) {
            w[j] = x;
            rec(j + 1, x, rest - x, D);
        }
    };
    for (Int D = n; D <= bound; ++D)
        rec(0, 1, D, D);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Rational point as integer numerators over a positive common denominator.
struct RatVec {
    std::vector<Int> num;
    Int den = 1;
    friend bool operator==(const RatVec &, const RatVec &) = default;
    friend auto operator<=>(const RatVec &, const RatVec &) = default;
};

__int128 det128(std::vector<__int128> a, int m) {
    // Bareiss elimination
    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (a[k * m + k] == 0) {
            int p = k + 1;
            while (p < m && a[p * m + k] == 0)
                ++p;
            if (p == m)
                return 0;
            for (int c = 0; c < m; ++c)
                std::swap(a[k * m + c], a[p * m + c]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                a[i * m + j] = (a[i * m + j] * a[k * m + k] - a[i * m + k] * a[k * m + j]) / prev;
        prev = a[k * m + k];
    }
    return sign * a[(m - 1) * m + (m - 1)];
}

class IpWeightSearch {
  public:
    explicit IpWeightSearch(int n) : n_(n), bound_(ip_simplex_degree_bound(n - 1)) {}

    std::vector<WeightSystem> run() {
        std::vector<std::vector<Int>> cons{std::vector<Int>(n_, 1)};
        visit(cons);
        std::vector<WeightSystem> out;
        for (const auto &[w, ip] : tested_)
            if (ip)
                out.push_back(WeightSystem::of(w));
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    int n_;
    Int bound_;
    std::set<std::vector<Int>> seen_;
    std::map<std::vector<Int>, bool> tested_;

    // Vertices of {q >= 0 : c . q = 1 for all constraints c}.
    std::vector<RatVec> vertices(const std::vector<std::vector<Int>> &cons) const {
        const int m = static_cast<int>(cons.size());
        std::vector<RatVec> out;
        std::vector<int> T;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(T.size()) == m) {
                std::vector<__int128> A(static_cast<size_t>(m) * m);
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c)
                        A[r * m + c] = cons[r][T[c]];
                __int128 det = det128(A, m);
                if (det == 0)
                    return;
                std::vector<__int128> num(m);
                for (int t = 0; t < m; ++t) {
                    auto B = A;
                    for (int r = 0; r < m; ++r)
                        B[r * m + t] = 1;
                    num[t] = det128(B, m);
                }
                if (det < 0) {
                    det = -det;
                    for (auto &x : num)
                        x = -x;
                }
                __int128 g = det;
                for (auto x : num) {
                    if (x < 0)
                        return;
                    __int128 a = x;
                    while (a) {
                        __int128 t = g % a;
                        g = a;
                        a = t;
                    }
                }
                RatVec v;
                v.num.assign(n_, 0);
                for (int t = 0; t < m; ++t)
                    v.num[T[t]] = checked::narrow(num[t] / g);
                v.den = checked::narrow(det / g);
                out.push_back(std::move(v));
                return;
            }
            for (int i = start; i < n_; ++i) {
                T.push_back(i);
                rec(i + 1);
                T.pop_back();
            }
        };
        rec(0);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Canonical form of a vertex set under coordinate permutations.
    std::vector<Int> canonical(const std::vector<RatVec> &verts) const {
        std::vector<int> perm(n_);
        for (int i = 0; i < n_; ++i)
            perm[i] = i;
        std::vector<Int> best;
        std::vector<std::vector<Int>> rows(verts.size());
        do {
            for (size_t k = 0; k < verts.size(); ++k) {
                rows[k].resize(n_ + 1);
                rows[k][0] = verts[k].den;
                for (int i = 0; i < n_; ++i)
                    rows[k][i + 1] = verts[k].num[perm[i]];
            }
            std::sort(rows.begin(), rows.end());
            std::vector<Int> flat;
            for (const auto &r : rows)
                flat.insert(flat.end(), r.begin(), r.end());
            if (best.empty() || flat < best)
                best = std::move(flat);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    void visit(std::vector<std::vector<Int>> &cons) {
        auto verts = vertices(cons);
        if (verts.empty())
            return;
        if (!seen_.insert(canonical(verts)).second)
            return;
        // barycenter, scaled to a primitive integer vector
        Int l = 1;
        for (const auto &v : verts)
            l = checked::mul(l / gcd(l, v.den), v.den);
        std::vector<Int> w(n_, 0);
        for (const auto &v : verts)
            for (int i = 0; i < n_; ++i)
                w[i] = checked::add(w[i], checked::mul(v.num[i], l / v.den));
        Int g = 0;
        for (Int x : w) {
            if (x == 0)
                return;
            g = gcd(g, x);
        }
        Int D = 0;
        for (Int &x : w) {
            x /= g;
            D = checked::add(D, x);
        }
        std::vector<Int> sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (!tested_.count(sorted)) {
            // every IP weight is the relation of an IP simplex in the dual,
            // so the cheap relation test and degree bound come first
            WeightSystem ws = WeightSystem::of(sorted);
            tested_[sorted] = ws.degree <= bound_ && is_ip_simplex_relation(ws) && is_ip_weight(WeightMatrix(ws));
        }
        if (static_cast<int>(cons.size()) == n_)
            return;
        // branch on every exponent vector x >= 0 with w . x < D
        std::vector<Int> x(n_, 0);
        std::function<void(int, Int)> rec = [&](int i, Int used) {
            if (i == n_) {
                if (used == 0)
                    return;
                cons.push_back(x);
                visit(cons);
                cons.pop_back();
                return;
            }
            for (Int v = 0; used + v * w[i] < D; ++v) {
                x[i] = v;
                rec(i + 1, used + v * w[i]);
            }
            x[i] = 0;
        };
        rec(0, 0);
    }
};

} // namespace

std::vector<WeightSystem> enumerate_ip_weights(int d) {
    if (d < 1 || d > 4)
        throw UnsupportedDimension("IP weight enumeration supports 1 <= d <= 4");
    return IpWeightSearch(d + 1).run();
}

} // namespace reflat
