#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "reflat/normal_form.hpp"
#include "reflat/weights.hpp"

namespace reflat {

/// Sublattice of the Newton lattice, given by a square row-style HNF basis.
struct Sublattice {
    Int index = 1;
    IntMatrix basis;
};

struct MaximalAncestor {
    WeightMatrix source;
    std::optional<Sublattice> quotient;
    Polytope polytope;
    NormalFormKey key;
};

/// Minimal IP polytopes of dimension d as weight systems and weight
/// matrices: simplices from the IP weights, and for d >= 2 the non-simplicial
/// ones built from lower-dimensional simplices meeting only in 0 or in a
/// vertex.
std::vector<WeightMatrix> minimal_weight_matrices(int d);

/// Every lattice Γ of finite index in Z^d with index at most
/// vol(P) / (d+1) such that conv(P ∩ Γ) still has 0 in its interior, with
/// conv(P ∩ Γ) written in a basis of Γ. Includes Γ = Z^d.
std::vector<std::pair<Sublattice, Polytope>> ip_sublattice_restrictions(const Polytope &P);

/// IP ancestors of all reflexive d-polytopes: Newton polytopes of the minimal
/// weight matrices on every admissible sublattice, deduplicated by normal
/// form and sorted by decreasing number of lattice points. d in {1, 2, 3}.
std::vector<MaximalAncestor> ancestor_candidates(int d);

/// The reflexive ancestors that are not contained in another reflexive
/// polytope (equivalently, whose dual has no proper reflexive subpolytope).
/// d in {1, 2, 3}; UnsupportedDimension otherwise.
std::vector<MaximalAncestor> maximal_polytopes(int d);

struct RunProgress {
    size_t p = 0, m = 0, s = 0;
    size_t ip_classes = 0;
    size_t ancestors_done = 0, ancestors_total = 0;
};

/// State of a classification. `found` holds every reflexive class reached
/// together with its dual; `dual_links` maps each key to its dual's key.
struct ClassRun {
    int dim = 0;
    std::set<NormalFormKey> found;
    std::map<NormalFormKey, NormalFormKey> dual_links;
    /// Normal forms of every IP polytope already expanded.
    std::unordered_set<NormalFormKey, NormalFormKeyHash> visited;
    size_t p = 0, m = 0, s = 0;

    /// Recomputes p, m, s from found and dual_links.
    void recount();
};

struct ClassifyOptions {
    /// 0 = REFLAT_THREADS or the hardware concurrency.
    int threads = 0;
    /// Restrict to these indices of ancestor_candidates(d) (for partial runs).
    std::optional<std::vector<size_t>> ancestors;
    std::function<void(const RunProgress &)> progress;
};

/// Breadth-first traversal of the IP subpolytopes of A obtained by deleting
/// one vertex at a time; every reflexive class reached is added to `run`
/// together with its dual.
void enumerate_subpolytopes(const MaximalAncestor &A, ClassRun &run);

/// Complete classification for d in {1, 2, 3}.
ClassRun classify_reflexive(int d, const ClassifyOptions &opts = {});

/// Number of worker threads: REFLAT_THREADS if set, else hardware concurrency.
int default_thread_count();

/// Reflexive polygons with vertices in [-box, box]^2, found by a direct walk
/// around the origin (consecutive vertices u, v with det(u, v) equal to the
/// lattice length of v - u), as normal form keys.
std::set<NormalFormKey> brute_force_reflexive_2d(int box);

} // namespace reflat
