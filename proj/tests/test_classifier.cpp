#include <doctest.h>

#include "reflat/classifier.hpp"
#include "reflat/faces.hpp"
#include "reflat/ipc.hpp"
#include "reflat/normal_form.hpp"
#include "reflat/weights.hpp"
#include "support.hpp"

using namespace reflat;

TEST_SUITE("classifier") {

TEST_CASE("one and two dimensions") {
    auto r1 = classify_reflexive(1);
    CHECK(r1.p == 1);
    CHECK(r1.s == 1);
    const auto &r2 = testsupport::run2();
    CHECK(r2.p == 16);
    CHECK(r2.s == 4);
    CHECK(r2.m == 6);
    CHECK(r2.found.size() == 16);
}

TEST_CASE("maximal polygons") {
    auto M = maximal_polytopes(2);
    REQUIRE(M.size() == 3);
    std::set<NormalFormKey> got, want;
    for (const auto &a : M)
        got.insert(a.key);
    want.insert(linear_normal_form(newton_polytope(WeightSystem::of({1, 1, 1}))));
    want.insert(linear_normal_form(newton_polytope(WeightSystem::of({1, 1, 2}))));
    want.insert(linear_normal_form(Polytope::hull(std::vector<IntPoint>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})));
    CHECK(got == want);
    CHECK_THROWS_AS(maximal_polytopes(4), UnsupportedDimension);
    CHECK_THROWS_AS(classify_reflexive(4), UnsupportedDimension);
}

TEST_CASE("brute-force oracle") {
    const auto &found = testsupport::run2().found;
    auto b3 = brute_force_reflexive_2d(3);
    CHECK(b3 == found);
    CHECK(brute_force_reflexive_2d(4) == b3);
    auto b1 = brute_force_reflexive_2d(1);
    CHECK(b1.size() < 16);
    CHECK(std::includes(b3.begin(), b3.end(), b1.begin(), b1.end()));
}

TEST_CASE("duality closure") {
    const auto &r = testsupport::run2();
    size_t fixed = 0;
    for (const auto &k : r.found) {
        auto it = r.dual_links.find(k);
        REQUIRE(it != r.dual_links.end());
        REQUIRE(r.found.count(it->second));
        CHECK(r.dual_links.at(it->second) == k);
        fixed += it->second == k;
    }
    CHECK(fixed == r.s);
}

TEST_CASE("single ancestor runs") {
    auto cand = ancestor_candidates(2);
    std::set<NormalFormKey> all;
    for (size_t i = 0; i < cand.size(); ++i) {
        ClassifyOptions o;
        o.ancestors = std::vector<size_t>{i};
        auto r = classify_reflexive(2, o);
        all.insert(r.found.begin(), r.found.end());
        for (const auto &k : r.found) {
            auto P = Polytope::hull(k.vertices());
            CHECK(P.strictly_interior(IntPoint{0, 0}));
        }
    }
    CHECK(all == testsupport::run2().found);

    // the triangle alone: compare with every subset of its 10 lattice points
    auto tri = newton_polytope(WeightSystem::of({1, 1, 1}));
    auto pts = lattice_points(tri);
    REQUIRE(pts.size() == 10);
    std::set<NormalFormKey> expect;
    for (unsigned mask = 1; mask < (1u << pts.size()); ++mask) {
        std::vector<IntPoint> sub;
        for (size_t i = 0; i < pts.size(); ++i)
            if (mask >> i & 1)
                sub.push_back(pts[i]);
        auto Q = Polytope::hull(sub, 2);
        if (!Q.full_dimensional() || !Q.strictly_interior(IntPoint{0, 0}) || !is_reflexive(Q))
            continue;
        expect.insert(linear_normal_form(Q));
        expect.insert(linear_normal_form(polar_dual_lattice(Q)));
    }
    MaximalAncestor A{WeightMatrix(WeightSystem::of({1, 1, 1})), std::nullopt, tri, linear_normal_form(tri)};
    ClassRun run;
    run.dim = 2;
    enumerate_subpolytopes(A, run);
    run.recount();
    CHECK(run.found == expect);
    CHECK(run.found.count(linear_normal_form(polar_dual_lattice(tri))));
}

TEST_CASE("classes by lattice point count") {
    std::map<size_t, int> by;
    for (const auto &P : testsupport::reflexive_polygons())
        ++by[lattice_points(P).size()];
    int acc = 0, at10 = 0;
    for (auto [n, c] : by) {
        acc += c;
        if (n <= 10)
            at10 = acc;
    }
    CHECK(at10 == 16);
    CHECK(by.begin()->first == 4);
}

TEST_CASE("every reflexive polygon is IPC-closed") {
    for (const auto &P : testsupport::reflexive_polygons()) {
        CHECK(is_ip_confined(P));
        CHECK(ipc_closure(P) == P);
    }
}

TEST_CASE("faces and reflexive dimension up to two") {
    auto t = classify_by_reflexive_dimension(2);
    CHECK(t.exact[1][1] == 1);
    CHECK(t.exact[2][1] == 3);
    CHECK(t.exact[2][2] == 16);
    CHECK_THROWS_AS(classify_by_reflexive_dimension(4), UnsupportedDimension);

    auto sq = Polytope::hull(std::vector<IntPoint>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(faces_of_dimension(sq, 1).size() == 4);
    CHECK(faces_of_dimension(sq, 0).size() == 4);
    CHECK(faces_of_dimension(sq, 2).size() == 1);
    auto cube = Polytope::hull(std::vector<IntPoint>{{1, 1, 1},  {1, 1, -1},  {1, -1, 1},  {1, -1, -1},
                                {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
    CHECK(faces_of_dimension(cube, 2).size() == 6);
    CHECK(faces_of_dimension(cube, 1).size() == 12);
    CHECK(face_classes(std::vector<Polytope>{cube}, 1).size() == 1);
}

TEST_CASE("sublattice restrictions keep the origin interior") {
    auto P = newton_polytope(WeightSystem::of({1, 1, 1}));
    auto subs = ip_sublattice_restrictions(P);
    CHECK(subs.size() >= 2);
    for (const auto &[L, Q] : subs) {
        CHECK(Q.strictly_interior(IntPoint{0, 0}));
        CHECK(L.index >= 1);
    }
    // the Z3 quotient of the triangle is the 4-point triangle
    bool small = false;
    for (const auto &[L, Q] : subs)
        small |= L.index == 3 && lattice_points(Q).size() == 4;
    CHECK(small);
}

TEST_CASE("thread count") {
    CHECK(default_thread_count() >= 1);
}

}
