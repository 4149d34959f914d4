#include <doctest.h>

#include <random>

#include "reflat/ipc.hpp"
#include "reflat/polytope.hpp"
#include "reflat/weights.hpp"
#include "support.hpp"

using namespace reflat;

namespace {

Polytope poly(std::vector<IntPoint> pts) { return Polytope::hull(pts); }

bool subset(const Polytope &A, const Polytope &B) {
    for (const auto &v : A.vertices())
        if (!B.contains(v))
            return false;
    return true;
}

} // namespace

TEST_SUITE("ipc") {

TEST_CASE("tilde of reflexive polygons is the dual") {
    for (const auto &P : testsupport::reflexive_polygons()) {
        CHECK(tilde(P) == polar_dual_lattice(P));
        CHECK(is_ip_confined(P));
        CHECK(ipc_closure(P) == P);
    }
}

TEST_CASE("big square collapses") {
    auto P = poly({{2, 2}, {2, -2}, {-2, 2}, {-2, -2}});
    CHECK_THROWS_AS(tilde(P), NotIP);
    // an IP polygon with a non-lattice dual
    auto Q = poly({{1, 0}, {0, 1}, {-2, -1}});
    auto T = tilde(Q);
    CHECK(T.full_dimensional());
    CHECK(T.strictly_interior(IntPoint{0, 0}));
}

TEST_CASE("non-confined simplex") {
    auto S = witness_simplex(WeightSystem::of({1, 5, 6, 8}));
    auto P = Polytope::hull(S);
    REQUIRE(is_ip(P));
    auto T = tilde(P);
    const bool interior = T.full_dimensional() && T.strictly_interior(IntPoint(3));
    CHECK_FALSE(interior);
    CHECK_FALSE(is_ip_confined(P));
    CHECK_THROWS_AS(ipc_closure(P), NotIPConfined);
    auto r = ipc_report(P);
    CHECK_FALSE(r.ip_confined);
    CHECK_FALSE(r.closure.has_value());
}

TEST_CASE("every IP polygon is confined and closes to a reflexive one") {
    // random subsets of the lattice points of reflexive polygons
    std::mt19937_64 rng(17);
    int seen = 0;
    for (const auto &R : testsupport::reflexive_polygons()) {
        const auto pts = lattice_points(R);
        for (int t = 0; t < 30; ++t) {
            std::vector<IntPoint> sub;
            for (const auto &x : pts)
                if (rng() % 2)
                    sub.push_back(x);
            if (sub.size() < 3)
                continue;
            auto P = Polytope::hull(sub, 2);
            if (!P.full_dimensional() || !P.strictly_interior(IntPoint{0, 0}))
                continue;
            ++seen;
            REQUIRE(is_ip_confined(P));
            auto C = ipc_closure(P);
            CHECK(subset(C, P));
            CHECK(ipc_closure(C) == C);
            CHECK(is_reflexive(C));
        }
    }
    CHECK(seen >= 100);
}

TEST_CASE("tilde reverses inclusion") {
    auto big = poly({{1, 0}, {0, 1}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
    auto small = poly({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(subset(tilde(big), tilde(small)));
}

TEST_CASE("five-dimensional counterexample is IPC-closed") {
    auto P = newton_polytope(WeightSystem::of({1, 1, 1, 1, 1, 2}));
    REQUIRE(P.strictly_interior(IntPoint(5)));
    CHECK(is_ip_confined(P));
    CHECK(ipc_closure(P) == P);
    CHECK(tilde(tilde(P)) == P);
    CHECK_FALSE(is_reflexive(P));
}

}
