#pragma once

#include <string>
#include <vector>

#include "reflat/polytope.hpp"

namespace reflat {

/// Positive primitive relation sum_j w_j v_j = 0 with degree D = sum_j w_j.
struct WeightSystem {
    std::vector<Int> weights;
    Int degree = 0;
    /// Set by enumerate_ip_simplex_relations: whether the Newton polytope is IP.
    bool ip_weight = false;

    static WeightSystem of(std::vector<Int> w);
    friend bool operator==(const WeightSystem &a, const WeightSystem &b) {
        return a.degree == b.degree && a.weights == b.weights;
    }
    /// Sort key: degree first, then the weights lexicographically.
    friend auto operator<=>(const WeightSystem &a, const WeightSystem &b) {
        if (auto c = a.degree <=> b.degree; c != 0)
            return c;
        return a.weights <=> b.weights;
    }
};

/// Phases of a cyclic group action: monomial m survives iff
/// sum_j phase_j (m_j - 1) = 0 mod order.
struct Quotient {
    Int order = 1;
    std::vector<Int> phases;
    friend bool operator==(const Quotient &, const Quotient &) = default;
};

/// Stacked weight systems on J common coordinates (zero padded).
struct WeightMatrix {
    std::vector<Int> degrees;
    std::vector<std::vector<Int>> rows;
    std::vector<Quotient> quotients;

    WeightMatrix() = default;
    WeightMatrix(const WeightSystem &w) : degrees{w.degree}, rows{w.weights} {}
    WeightMatrix(std::vector<std::vector<Int>> r);

    int num_rows() const { return static_cast<int>(rows.size()); }
    int num_cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    friend bool operator==(const WeightMatrix &, const WeightMatrix &) = default;
};

/// Parses "D w1 .. wJ [D2 ...] [/Zn: a1 .. aJ]...". Throws ParseError.
WeightMatrix parse_weight_line(const std::string &line);
std::string format_weight_line(const WeightMatrix &W);
std::string format_weight_line(const WeightSystem &w);

/// Weight system of a simplex with 0 in its interior.
/// Throws NotSimplex, OriginNotInterior.
WeightSystem relation_from_simplex(std::span<const IntPoint> vertices);

/// Lattice simplex whose vertex relation is w: in the lattice generated by
/// its vertices (Z^{d+1} / Z w, with coordinates from a unimodular U with
/// U w = e_1), vertex j is rows 1..d of column j of U.
std::vector<IntPoint> witness_simplex(const WeightSystem &w);

/// Newton polytope data: exponent vectors m >= 0 with W m = D (satisfying
/// any quotient congruences), and their images y = L (m - 1) in Z^k, where k =
/// J - rank W (with quotients, coordinates in the sublattice basis).
struct NewtonData {
    std::vector<std::vector<Int>> monomials;
    std::vector<IntPoint> points;
    Polytope polytope;
    int dim = 0;
};

/// Throws EmptyNewton if there are no monomials; UnsupportedDimension if
/// J - rank exceeds kMaxDim.
NewtonData newton_data(const WeightMatrix &W);
inline Polytope newton_polytope(const WeightMatrix &W) { return newton_data(W).polytope; }

/// Newton polytope full-dimensional with the image of (1,..,1) interior.
/// This is equivalent to the IP property, since any interior lattice point
/// has all exponents >= 1 and must therefore be (1,..,1).
bool is_ip_weight(const WeightMatrix &W);

/// Whether w is the relation of some IP simplex: no k in 2..D-1 has all
/// k w_j / D non-integral with fractional parts summing to 1.
bool is_ip_simplex_relation(const WeightSystem &w);

/// Upper bound on the degree of IP simplex relations in dimension d:
/// 2 (s_d - 1)^2 with s the Sylvester sequence 2, 3, 7, 43, ...
Int ip_simplex_degree_bound(int d);

/// Every relation of a d-dimensional IP simplex (1 <= d <= 3), weights
/// ascending, sorted by (D, weights), with the ip_weight flag set.
std::vector<WeightSystem> enumerate_ip_simplex_relations(int d);

/// All IP weight systems for 1 <= d <= 4 via the recursive point search,
/// sorted by (D, weights).
std::vector<WeightSystem> enumerate_ip_weights(int d);

} // namespace reflat
