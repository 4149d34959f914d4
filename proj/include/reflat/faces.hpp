#pragma once

#include <set>
#include <vector>

#include "reflat/classifier.hpp"

namespace reflat {

/// All k-dimensional faces of P (each once), as lattice polytopes in the
/// coordinates of P's affine hull chart when P is not full-dimensional.
std::vector<Polytope> faces_of_dimension(const Polytope &P, int k);

/// Affine normal forms of the k-faces of all the given polytopes.
std::set<NormalFormKey> face_classes(const std::vector<Polytope> &polytopes, int k);

/// Counts of lattice polytopes by dimension and reflexive dimension.
/// raw[r][d]: affine classes of d-faces of reflexive r-polytopes.
/// exact[r][d]: those classes that are not faces of any reflexive polytope of
/// smaller dimension, i.e. reflexive dimension exactly r. Indices run from 1.
struct RdTable {
    int max_rd = 0;
    std::vector<std::vector<size_t>> raw;
    std::vector<std::vector<size_t>> exact;
};

/// Builds the table from the complete lists of reflexive r-polytopes,
/// r = 1..reflexives.size().
RdTable rd_table(const std::vector<std::vector<Polytope>> &reflexives);

/// Classifies reflexive polytopes of dimensions 1..max_rd and tabulates their
/// faces. max_rd in {1, 2, 3}.
RdTable classify_by_reflexive_dimension(int max_rd, const ClassifyOptions &opts = {});

/// Reflexive polytopes of a run, rebuilt from their normal forms.
std::vector<Polytope> polytopes_of(const std::set<NormalFormKey> &keys);

} // namespace reflat
