#include <doctest.h>

#include <random>

#include "reflat/polytope.hpp"
#include "reflat/polytope_io.hpp"

using namespace reflat;

namespace {

Polytope poly(std::vector<IntPoint> pts) { return Polytope::hull(pts); }

Polytope square(Int r) { return poly({{r, r}, {r, -r}, {-r, r}, {-r, -r}}); }

// brute-force membership: x in conv(V) iff every facet from an independent
// source accepts it. Here we use the rational test against all pairs, valid
// in 2d only: x is inside iff for every directed edge candidate (a,b) with
// all vertices on one side, x is on that side too.
bool inside_2d(const std::vector<IntPoint> &V, const IntPoint &x, bool strict) {
    for (size_t i = 0; i < V.size(); ++i)
        for (size_t j = 0; j < V.size(); ++j) {
            if (i == j)
                continue;
            auto cross = [&](const IntPoint &p) {
                return (V[j][0] - V[i][0]) * (p[1] - V[i][1]) - (V[j][1] - V[i][1]) * (p[0] - V[i][0]);
            };
            bool supporting = true;
            for (const auto &v : V)
                if (cross(v) < 0)
                    supporting = false;
            if (!supporting)
                continue;
            Int c = cross(x);
            if (c < 0 || (strict && c == 0))
                return false;
        }
    return true;
}

} // namespace

TEST_SUITE("lattice-core") {

TEST_CASE("facets of the square") {
    auto P = square(1);
    auto F = facet_inequalities(P);
    REQUIRE(F.size() == 4);
    for (const auto &f : F) {
        CHECK(f.offset == 1);
        CHECK(std::abs(f.normal[0]) + std::abs(f.normal[1]) == 1);
    }
}

TEST_CASE("facets of the 4-point triangle") {
    auto P = poly({{1, 0}, {0, 1}, {-1, -1}});
    auto F = facet_inequalities(P);
    std::vector<IntPoint> normals;
    for (const auto &f : F) {
        CHECK(f.offset == 1);
        normals.push_back(f.normal);
    }
    std::sort(normals.begin(), normals.end());
    CHECK(normals == std::vector<IntPoint>{{-1, -1}, {-1, 2}, {2, -1}});
}

TEST_CASE("segment is degenerate") {
    auto P = poly({{0, 0}, {1, 0}});
    CHECK_FALSE(P.full_dimensional());
    CHECK_THROWS_AS(facet_inequalities(P), DegenerateInput);
    CHECK(lattice_points(P).size() == 2);
    CHECK_FALSE(is_ip(P));
}

TEST_CASE("redundant input points are dropped") {
    auto P = poly({{1, 1}, {0, 0}, {1, -1}, {-1, 1}, {-1, -1}, {1, 0}, {1, 1}});
    CHECK(P.vertices().size() == 4);
    CHECK(P.vertices().front() == IntPoint{-1, -1});
}

TEST_CASE("lattice points of squares") {
    CHECK(lattice_points(square(1)).size() == 9);
    CHECK(lattice_points(square(1), true) == std::vector<IntPoint>{{0, 0}});
    CHECK(lattice_points(square(2), true).size() == 9);
}

TEST_CASE("is_ip") {
    auto info = ip_info(square(1));
    CHECK(info.ip);
    CHECK(*info.interior_point == IntPoint{0, 0});
    CHECK_FALSE(is_ip(square(2)));
    CHECK(is_ip(poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-5, -6, -8}})));
}

TEST_CASE("polar duals") {
    auto d = polar_dual(square(1));
    std::vector<IntPoint> v;
    for (auto &r : d) {
        CHECK(r.denominator == 1);
        v.push_back(r.numerator);
    }
    CHECK(v == std::vector<IntPoint>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});

    auto t = polar_dual_lattice(poly({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK(t.vertices() == std::vector<IntPoint>{{-1, -1}, {-1, 2}, {2, -1}});

    CHECK_THROWS_AS(polar_dual(poly({{1, 0}, {0, 1}, {1, 1}})), OriginNotInterior);

    auto half = polar_dual(square(2));
    for (auto &r : half)
        CHECK(r.denominator == 2);
}

TEST_CASE("lattice distances and reflexivity") {
    for (auto &f : square(1).facets())
        CHECK(lattice_distance(f) == 1);
    for (auto &f : square(2).facets())
        CHECK(lattice_distance(f) == 2);
    CHECK(is_reflexive(square(1)));
    CHECK_FALSE(is_reflexive(square(2)));
    // translated reflexive polygon is still reflexive
    CHECK(is_reflexive(poly({{3, 3}, {3, 5}, {5, 3}, {5, 5}})));
}

TEST_CASE("double dual of reflexive polygons") {
    auto P = poly({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    auto Q = polar_dual_lattice(polar_dual_lattice(P));
    CHECK(Q.vertices() == P.vertices());
    CHECK(polar_dual_lattice(P).facets().size() == P.vertices().size());
}

TEST_CASE("unimodular equivariance") {
    std::mt19937_64 rng(7);
    auto P = poly({{2, 0}, {0, 1}, {-1, -1}, {1, 1}, {-1, 0}});
    const auto pts = lattice_points(P);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix U = IntMatrix::identity(2);
        for (int s = 0; s < 4; ++s) {
            IntMatrix E = IntMatrix::identity(2);
            int i = static_cast<int>(rng() % 2);
            E(i, 1 - i) = static_cast<Int>(rng() % 5) - 2;
            U = E * U;
        }
        auto Q = transformed(P, U);
        auto qp = lattice_points(Q);
        std::vector<IntPoint> mapped;
        for (auto &x : pts)
            mapped.push_back(U * x);
        std::sort(mapped.begin(), mapped.end());
        CHECK(qp == mapped);
        CHECK(is_ip(Q) == is_ip(P));
        CHECK(is_reflexive(Q) == is_reflexive(P));
        // normals transform by the inverse transpose: n'.(Ux) = n.x
        IntMatrix Uit = unimodular_inverse(U).transposed();
        std::vector<HalfSpace> expect;
        for (auto f : P.facets()) {
            f.normal = Uit * f.normal;
            expect.push_back(f);
        }
        std::sort(expect.begin(), expect.end());
        CHECK(Q.facets() == expect);
    }
}

TEST_CASE("point counts against a brute-force scan") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<IntPoint> pts;
        int n = 3 + static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i)
            pts.push_back({static_cast<Int>(rng() % 9) - 4, static_cast<Int>(rng() % 9) - 4});
        auto P = Polytope::hull(pts, 2);
        if (!P.full_dimensional())
            continue;
        const auto &V = P.vertices();
        int all = 0, inner = 0;
        for (Int x = -4; x <= 4; ++x)
            for (Int y = -4; y <= 4; ++y) {
                all += inside_2d(V, {x, y}, false);
                inner += inside_2d(V, {x, y}, true);
            }
        auto lp = lattice_points(P);
        auto ip = lattice_points(P, true);
        CHECK(static_cast<int>(lp.size()) == all);
        CHECK(static_cast<int>(ip.size()) == inner);
        CHECK(std::is_sorted(lp.begin(), lp.end()));
    }
}

TEST_CASE("lower-dimensional polytopes") {
    auto S = poly({{0, 0, 0}, {2, 4, 6}});
    CHECK(S.affine_dim() == 1);
    CHECK(lattice_points(S).size() == 3);
    auto T = poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(T.affine_dim() == 2);
    CHECK(T.vertices().size() == 3);
    CHECK(lattice_points(T).size() == 3);
    CHECK(T.contains({1, 0, 0}));
    CHECK_FALSE(T.contains({1, 1, 0}));
}

TEST_CASE("text format") {
    auto P = parse_polytope("4 2\n1 1\n1 -1\n-1 1\n-1 -1\n");
    CHECK(P.vertices().size() == 4);
    CHECK_THROWS_AS(parse_polytope("4 2\n1 1\n1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_polytope("3 2\n1 1\n"), ParseError);
}

}
