#include "reflat/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <thread>

namespace reflat {

namespace {

std::vector<Int> pad(const std::vector<Int> &w, size_t at, size_t total) {
    std::vector<Int> row(total, 0);
    std::copy(w.begin(), w.end(), row.begin() + at);
    return row;
}

// Ordered factorizations of n into d positive factors.
void factorizations(Int n, int d, std::vector<Int> &cur, std::vector<std::vector<Int>> &out) {
    if (d == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (Int a = 1; a <= n; ++a)
        if (n % a == 0) {
            cur.push_back(a);
            factorizations(n / a, d - 1, cur, out);
            cur.pop_back();
        }
}

// All row-style HNF matrices of determinant n.
std::vector<IntMatrix> hnf_bases(Int n, int d) {
    std::vector<std::vector<Int>> diags;
    std::vector<Int> cur;
    factorizations(n, d, cur, diags);
    std::vector<IntMatrix> out;
    for (const auto &diag : diags) {
        IntMatrix B(d, d);
        for (int i = 0; i < d; ++i)
            B(i, i) = diag[i];
        // free entries B(r, c), r < c, range over [0, diag[c])
        std::vector<std::pair<int, int>> slots;
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < c; ++r)
                if (diag[c] > 1)
                    slots.emplace_back(r, c);
        std::function<void(size_t)> rec = [&](size_t s) {
            if (s == slots.size()) {
                out.push_back(B);
                return;
            }
            auto [r, c] = slots[s];
            for (Int v = 0; v < diag[c]; ++v) {
                B(r, c) = v;
                rec(s + 1);
            }
            B(r, c) = 0;
        };
        rec(0);
    }
    return out;
}

bool origin_interior(const Polytope &P) { return P.full_dimensional() && P.strictly_interior(IntPoint(P.dim())); }

using Mask = std::array<std::uint64_t, 2>;

struct MaskHash {
    size_t operator()(const Mask &m) const noexcept { return m[0] * 0x9e3779b97f4a7c15ull ^ (m[1] + 0x632be59bd9b4e019ull); }
};

void clear_bit(Mask &m, int i) { m[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
bool test_bit(const Mask &m, int i) { return (m[i >> 6] >> (i & 63)) & 1u; }

// Visits the IP subpolytopes of conv(pts) reachable by vertex deletion.
// `visit` decides whether to expand a polytope further.
void walk_subpolytopes(const std::vector<IntPoint> &pts, int d,
                       const std::function<bool(const Polytope &, bool is_root)> &visit) {
    const int n = static_cast<int>(pts.size());
    if (n > 128)
        throw UnsupportedDimension("subpolytope walk supports at most 128 lattice points");
    Mask full{0, 0};
    for (int i = 0; i < n; ++i)
        full[i >> 6] |= std::uint64_t{1} << (i & 63);
    std::unordered_set<Mask, MaskHash> seen{full};
    std::deque<Mask> queue{full};
    std::vector<IntPoint> sub;
    bool root = true;
    while (!queue.empty()) {
        Mask mask = queue.front();
        queue.pop_front();
        sub.clear();
        for (int i = 0; i < n; ++i)
            if (test_bit(mask, i))
                sub.push_back(pts[i]);
        if (static_cast<int>(sub.size()) <= d)
            continue;
        Polytope Q = Polytope::hull(sub, d);
        if (!origin_interior(Q))
            continue;
        const bool expand = visit(Q, root);
        root = false;
        if (!expand)
            continue;
        for (const auto &v : Q.vertices()) {
            const int idx = static_cast<int>(std::lower_bound(pts.begin(), pts.end(), v) - pts.begin());
            Mask child = mask;
            clear_bit(child, idx);
            if (seen.insert(child).second)
                queue.push_back(child);
        }
    }
}

struct SharedRun {
    ClassRun &run;
    std::mutex mu;
    RunProgress prog;
    std::function<void(const RunProgress &)> progress;
    size_t last_report = 0;

    bool first_visit(const NormalFormKey &k) {
        std::lock_guard lock(mu);
        return run.visited.insert(k).second;
    }

    void add_pair(const NormalFormKey &k, const NormalFormKey &dk) {
        std::lock_guard lock(mu);
        const bool was_k = run.found.count(k) > 0;
        const bool was_dk = run.found.count(dk) > 0;
        run.found.insert(k);
        run.found.insert(dk);
        run.dual_links[k] = dk;
        run.dual_links[dk] = k;
        if (k == dk) {
            if (!was_k)
                ++prog.s;
        } else if (!was_k || !was_dk) {
            ++prog.m;
        }
        prog.p = run.found.size();
    }

    void tick(bool ancestor_done) {
        std::lock_guard lock(mu);
        prog.ip_classes = run.visited.size();
        if (ancestor_done)
            ++prog.ancestors_done;
        if (progress && (ancestor_done || prog.ip_classes >= last_report + 20000)) {
            last_report = prog.ip_classes;
            progress(prog);
        }
    }
};

void explore(const MaximalAncestor &A, SharedRun &sh) {
    const int d = A.polytope.dim();
    const auto pts = lattice_points(A.polytope);
    size_t count = 0;
    walk_subpolytopes(pts, d, [&](const Polytope &Q, bool) {
        NormalFormKey key = linear_normal_form_unchecked(Q);
        if (!sh.first_visit(key))
            return false;
        if (all_facets_distance_one(Q)) {
            NormalFormKey dkey = linear_normal_form_unchecked(polar_dual_lattice(Q));
            sh.add_pair(key, dkey);
        }
        if (++count % 4096 == 0)
            sh.tick(false);
        return true;
    });
    sh.tick(true);
}

bool has_proper_reflexive_subpolytope(const Polytope &Q) {
    bool found = false;
    walk_subpolytopes(lattice_points(Q), Q.dim(), [&](const Polytope &S, bool root) {
        if (!root && all_facets_distance_one(S))
            found = true;
        return !found;
    });
    return found;
}

} // namespace

std::vector<WeightMatrix> minimal_weight_matrices(int d) {
    if (d < 1 || d > 3)
        throw UnsupportedDimension("minimal polytopes are listed for 1 <= d <= 3");
    std::vector<WeightMatrix> out;
    for (const auto &w : enumerate_ip_weights(d))
        out.emplace_back(w);
    if (d == 2)
        out.push_back(WeightMatrix({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    if (d == 3) {
        // segment through 0 plus a triangle around 0 in a complementary plane
        for (const auto &t : enumerate_ip_weights(2))
            out.push_back(WeightMatrix({pad({1, 1}, 0, 5), pad(t.weights, 2, 5)}));
        // two triangles sharing one vertex (coordinate 0)
        std::vector<std::vector<Int>> pointed;
        for (const auto &t : enumerate_ip_weights(2))
            for (size_t i = 0; i < 3; ++i) {
                std::vector<Int> others;
                for (size_t j = 0; j < 3; ++j)
                    if (j != i)
                        others.push_back(t.weights[j]);
                std::vector<Int> p{t.weights[i], others[0], others[1]};
                if (std::find(pointed.begin(), pointed.end(), p) == pointed.end())
                    pointed.push_back(p);
            }
        for (size_t a = 0; a < pointed.size(); ++a)
            for (size_t b = a; b < pointed.size(); ++b) {
                const auto &s = pointed[a], &t = pointed[b];
                out.push_back(WeightMatrix({{s[0], s[1], s[2], 0, 0}, {t[0], 0, 0, t[1], t[2]}}));
            }
        // three segments
        out.push_back(WeightMatrix({pad({1, 1}, 0, 6), pad({1, 1}, 2, 6), pad({1, 1}, 4, 6)}));
    }
    return out;
}

std::vector<std::pair<Sublattice, Polytope>> ip_sublattice_restrictions(const Polytope &P) {
    const int d = P.dim();
    const auto pts = lattice_points(P);
    const Int max_index = normalized_volume(P) / (d + 1);
    std::vector<std::pair<Sublattice, Polytope>> out;
    std::vector<IntPoint> sub;
    for (Int n = 1; n <= max_index; ++n)
        for (const IntMatrix &B : hnf_bases(n, d)) {
            sub.clear();
            for (const auto &p : pts)
                if (auto z = hnf_coordinates(B, p))
                    sub.push_back(*z);
            if (static_cast<int>(sub.size()) <= d)
                continue;
            Polytope Q = Polytope::hull(sub, d);
            if (origin_interior(Q))
                out.push_back({Sublattice{n, B}, std::move(Q)});
        }
    return out;
}

std::vector<MaximalAncestor> ancestor_candidates(int d) {
    if (d < 1 || d > 3)
        throw UnsupportedDimension("classification supports 1 <= d <= 3");
    std::vector<MaximalAncestor> out;
    std::set<NormalFormKey> keys;
    for (const auto &W : minimal_weight_matrices(d)) {
        if (!is_ip_weight(W))
            continue;
        Polytope N = newton_polytope(W);
        for (auto &[G, Q] : ip_sublattice_restrictions(N)) {
            NormalFormKey key = linear_normal_form_unchecked(Q);
            if (!keys.insert(key).second)
                continue;
            MaximalAncestor A;
            A.source = W;
            if (G.index > 1)
                A.quotient = G;
            A.polytope = std::move(Q);
            A.key = key;
            out.push_back(std::move(A));
        }
    }
    std::vector<std::pair<size_t, size_t>> order;
    for (size_t i = 0; i < out.size(); ++i)
        order.emplace_back(lattice_points(out[i].polytope).size(), i);
    std::sort(order.begin(), order.end(), [&](const auto &a, const auto &b) {
        if (a.first != b.first)
            return a.first > b.first;
        return out[a.second].key < out[b.second].key;
    });
    std::vector<MaximalAncestor> sorted;
    for (auto [_, i] : order)
        sorted.push_back(std::move(out[i]));
    return sorted;
}

std::vector<MaximalAncestor> maximal_polytopes(int d) {
    std::vector<MaximalAncestor> out;
    for (auto &A : ancestor_candidates(d)) {
        if (!all_facets_distance_one(A.polytope))
            continue;
        if (!has_proper_reflexive_subpolytope(polar_dual_lattice(A.polytope)))
            out.push_back(std::move(A));
    }
    return out;
}

void ClassRun::recount() {
    p = found.size();
    s = 0;
    for (const auto &[k, dk] : dual_links)
        s += k == dk;
    m = (p - s) / 2;
}

int default_thread_count() {
    if (const char *env = std::getenv("REFLAT_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0)
            return t;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void enumerate_subpolytopes(const MaximalAncestor &A, ClassRun &run) {
    SharedRun sh{run, {}, {}, {}, 0};
    explore(A, sh);
    run.recount();
}

ClassRun classify_reflexive(int d, const ClassifyOptions &opts) {
    if (d < 1 || d > 3)
        throw UnsupportedDimension("classification supports 1 <= d <= 3");
    auto all = ancestor_candidates(d);
    std::vector<const MaximalAncestor *> work;
    if (opts.ancestors) {
        for (size_t i : *opts.ancestors)
            if (i < all.size())
                work.push_back(&all[i]);
    } else {
        for (const auto &A : all)
            work.push_back(&A);
    }
    ClassRun run;
    run.dim = d;
    SharedRun sh{run, {}, {}, opts.progress, 0};
    sh.prog.ancestors_total = work.size();
    const int threads = std::min<int>(opts.threads > 0 ? opts.threads : default_thread_count(),
                                      static_cast<int>(std::max<size_t>(1, work.size())));
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex fail_mu;
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < work.size();) {
            try {
                explore(*work[i], sh);
            } catch (...) {
                std::lock_guard lock(fail_mu);
                if (!failure)
                    failure = std::current_exception();
                next = work.size();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    run.recount();
    return run;
}

std::set<NormalFormKey> brute_force_reflexive_2d(int box) {
    if (box < 1)
        throw DegenerateInput("box must be positive");
    std::vector<IntPoint> prim;
    for (Int x = -box; x <= box; ++x)
        for (Int y = -box; y <= box; ++y)
            if (gcd(x, y) == 1)
                prim.push_back({x, y});
    // exact angular order starting at the positive x axis
    auto half = [](const IntPoint &p) { return (p[1] < 0 || (p[1] == 0 && p[0] < 0)) ? 1 : 0; };
    std::sort(prim.begin(), prim.end(), [&](const IntPoint &a, const IntPoint &b) {
        if (half(a) != half(b))
            return half(a) < half(b);
        return a[0] * b[1] - a[1] * b[0] > 0;
    });
    auto det = [](const IntPoint &a, const IntPoint &b) { return a[0] * b[1] - a[1] * b[0]; };
    auto unit_edge = [&](const IntPoint &a, const IntPoint &b) {
        const Int dt = det(a, b);
        return dt > 0 && dt == gcd(b[0] - a[0], b[1] - a[1]);
    };
    auto left_turn = [&](const IntPoint &a, const IntPoint &b, const IntPoint &c) { return det(b - a, c - b) > 0; };

    std::set<NormalFormKey> keys;
    std::vector<int> cycle;
    const int n = static_cast<int>(prim.size());
    std::function<void(int)> extend = [&](int last) {
        const IntPoint &v0 = prim[cycle[0]];
        const IntPoint &cur = prim[last];
        // try to close the polygon
        if (cycle.size() >= 3 && unit_edge(cur, v0) && left_turn(prim[cycle[cycle.size() - 2]], cur, v0) &&
            left_turn(cur, v0, prim[cycle[1]])) {
            std::vector<IntPoint> verts;
            for (int i : cycle)
                verts.push_back(prim[i]);
            keys.insert(linear_normal_form_unchecked(Polytope::hull(verts, 2)));
        }
        for (int j = last + 1; j < n; ++j) {
            const IntPoint &nx = prim[j];
            if (!unit_edge(cur, nx))
                continue;
            if (cycle.size() >= 2 && !left_turn(prim[cycle[cycle.size() - 2]], cur, nx))
                continue;
            cycle.push_back(j);
            extend(j);
            cycle.pop_back();
        }
    };
    for (int i = 0; i < n; ++i) {
        cycle = {i};
        extend(i);
    }
    return keys;
}

} // namespace reflat
