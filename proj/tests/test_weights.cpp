#include <doctest.h>

#include <numeric>
#include <set>

#include "reflat/polytope.hpp"
#include "reflat/weights.hpp"

using namespace reflat;

namespace {

std::vector<Int> sorted(std::vector<Int> w) {
    std::sort(w.begin(), w.end());
    return w;
}

// Relation oracle: walk every D and every sorted w with w_j <= D/2 and
// gcd 1, and keep those whose witness simplex has exactly one interior
// lattice point. Independent of the fractional-part criterion.
std::set<std::vector<Int>> oracle_relations(int d, Int max_degree) {
    std::set<std::vector<Int>> out;
    std::vector<Int> w(d + 1);
    for (Int D = d + 1; D <= max_degree; ++D) {
        auto rec = [&](auto &&self, int j, Int lo, Int left) -> void {
            if (j == d) {
                if (left < lo || 2 * left > D)
                    return;
                w[j] = left;
                Int g = 0;
                for (Int x : w)
                    g = std::gcd(g, x);
                if (g != 1)
                    return;
                auto S = witness_simplex(WeightSystem::of(w));
                auto P = Polytope::hull(S);
                if (lattice_points(P, true).size() == 1)
                    out.insert(w);
                return;
            }
            for (Int x = lo; x * (d + 1 - j) <= left; ++x) {
                w[j] = x;
                self(self, j + 1, x, left - x);
            }
        };
        rec(rec, 0, 1, D);
    }
    return out;
}

} // namespace

TEST_SUITE("weights") {

TEST_CASE("relations of simplices") {
    std::vector<IntPoint> t{{1, 0}, {0, 1}, {-1, -1}};
    auto w = relation_from_simplex(t);
    CHECK(w.weights == std::vector<Int>{1, 1, 1});
    CHECK(w.degree == 3);
    std::vector<IntPoint> u{{1, 0}, {-1, 2}, {-1, -2}};
    auto v = relation_from_simplex(u);
    CHECK(v.weights == std::vector<Int>{2, 1, 1});
    CHECK(v.degree == 4);
    std::vector<IntPoint> bad{{1, 0}, {0, 1}, {1, 1}};
    CHECK_THROWS_AS(relation_from_simplex(bad), OriginNotInterior);
    std::vector<IntPoint> flat{{1, 0}, {2, 0}, {3, 0}};
    CHECK_THROWS_AS(relation_from_simplex(flat), NotSimplex);
}

TEST_CASE("Newton polytopes") {
    auto a = newton_polytope(WeightSystem::of({1, 1, 1}));
    CHECK(lattice_points(a).size() == 10);
    CHECK(a.vertices().size() == 3);
    CHECK(lattice_points(newton_polytope(WeightSystem::of({1, 1, 2}))).size() == 9);
    auto b = newton_polytope(parse_weight_line("24 3 3 4 4 10"));
    CHECK(b.dim() == 4);
    CHECK(lattice_points(b).size() == 47);
    CHECK(b.vertices().size() == 6);
    auto sq = newton_polytope(parse_weight_line("2 1 0 1 0 2 0 1 0 1"));
    CHECK(sq.dim() == 2);
    CHECK(lattice_points(sq).size() == 9);
    CHECK(is_reflexive(sq));
    auto z2 = newton_polytope(parse_weight_line("4 1 1 1 1 /Z2: 0 1 0 1"));
    CHECK(is_reflexive(z2));
    CHECK(lattice_points(z2).size() == 19);
}

TEST_CASE("IP weights") {
    CHECK(is_ip_weight(WeightSystem::of({1, 1, 1})));
    CHECK_FALSE(is_ip_weight(WeightSystem::of({1, 5, 6, 8})));
    auto w = WeightSystem::of({1, 1, 1, 1, 1, 2});
    CHECK(is_ip_weight(w));
    auto P = newton_polytope(w);
    CHECK(is_ip(P));
    CHECK_FALSE(is_reflexive(P));
    Int maxd = 0;
    for (const auto &f : P.facets())
        maxd = std::max(maxd, lattice_distance(f));
    CHECK(maxd == 2);
}

TEST_CASE("weight line format") {
    auto W = parse_weight_line("4 1 1 1 1 /Z2: 0 1 0 1");
    CHECK(W.degrees == std::vector<Int>{4});
    REQUIRE(W.quotients.size() == 1);
    CHECK(W.quotients[0].order == 2);
    CHECK(format_weight_line(W) == "4 1 1 1 1 /Z2: 0 1 0 1");
    auto M = parse_weight_line("2 1 0 1 0 2 0 1 0 1");
    CHECK(M.num_rows() == 2);
    CHECK(M.num_cols() == 4);
    CHECK(format_weight_line(M) == "2 1 0 1 0  2 0 1 0 1");
    CHECK_THROWS_AS(parse_weight_line("5 1 1 1"), ParseError);
    CHECK_THROWS_AS(parse_weight_line("3 1 x 1"), ParseError);
    CHECK_THROWS_AS(parse_weight_line(""), ParseError);
}

TEST_CASE("counts in low dimension") {
    CHECK(enumerate_ip_weights(1).size() == 1);
    auto two = enumerate_ip_weights(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0].weights == std::vector<Int>{1, 1, 1});
    CHECK(two[1].weights == std::vector<Int>{1, 1, 2});
    CHECK(two[2].weights == std::vector<Int>{1, 2, 3});
    auto rel = enumerate_ip_simplex_relations(2);
    CHECK(rel.size() == 3);
    for (const auto &w : rel)
        CHECK(w.ip_weight);
}

TEST_CASE("degree bound") {
    CHECK(ip_simplex_degree_bound(1) == 2);
    CHECK(ip_simplex_degree_bound(2) == 8);
    CHECK(ip_simplex_degree_bound(3) == 72);
}

TEST_CASE("three-dimensional relations") {
    auto rel = enumerate_ip_simplex_relations(3);
    CHECK(rel.size() == 104);
    std::set<std::vector<Int>> non_ip;
    for (const auto &w : rel)
        if (!w.ip_weight)
            non_ip.insert(w.weights);
    std::set<std::vector<Int>> bold{{1, 5, 6, 8},  {1, 4, 7, 9},  {2, 5, 8, 9},  {1, 5, 8, 14}, {3, 7, 8, 10},
                                    {4, 7, 9, 10}, {5, 8, 9, 11}, {3, 7, 8, 18}, {5, 8, 9, 22}};
    CHECK(non_ip == bold);

    auto ipw = enumerate_ip_weights(3);
    CHECK(ipw.size() == 95);
    CHECK(std::is_sorted(ipw.begin(), ipw.end()));
    std::set<std::vector<Int>> a, b;
    for (const auto &w : ipw)
        a.insert(w.weights);
    for (const auto &w : rel)
        if (w.ip_weight)
            b.insert(w.weights);
    CHECK(a == b);

    Int maxD = 0;
    for (const auto &w : rel) {
        maxD = std::max(maxD, w.degree);
        CHECK(2 * w.weights.back() <= w.degree);
        auto S = witness_simplex(w);
        CHECK(sorted(relation_from_simplex(S).weights) == w.weights);
    }
    CHECK(maxD == 66);
}

TEST_CASE("relation oracle") {
    auto check = [](int d) {
        std::set<std::vector<Int>> fast;
        for (const auto &w : enumerate_ip_simplex_relations(d))
            fast.insert(w.weights);
        CHECK(oracle_relations(d, ip_simplex_degree_bound(d)) == fast);
    };
    check(1);
    check(2);
    check(3);
}

TEST_CASE("IP weights give reflexive Newton polytopes up to d=3") {
    for (int d = 1; d <= 3; ++d)
        for (const auto &w : enumerate_ip_weights(d))
            CHECK(is_reflexive(newton_polytope(w)));
}

}
