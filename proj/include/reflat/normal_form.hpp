#pragma once

#include <string>
#include <vector>

#include "reflat/polytope.hpp"

namespace reflat {

/// Canonical key of a (affine-)unimodular equivalence class. The binary form
/// is byte d, byte v, then the d*v coordinates of the canonical vertex matrix
/// (vertex-major), each as one signed byte, or 0x80 followed by a big-endian
/// int32 for entries outside [-127, 127]. Keys order by their bytes.
class NormalFormKey {
  public:
    NormalFormKey() = default;
    NormalFormKey(int dim, int nv, const std::vector<Int> &coords);

    static NormalFormKey from_bytes(std::string bytes);
    /// Decodes one key from the front of `data`; returns its length in bytes.
    static size_t decode_prefix(std::string_view data, NormalFormKey &out);

    int dim() const { return static_cast<unsigned char>(bytes_[0]); }
    int nv() const { return static_cast<unsigned char>(bytes_[1]); }
    std::vector<Int> coords() const;
    /// Canonical vertices as points of Z^dim.
    std::vector<IntPoint> vertices() const;
    const std::string &bytes() const { return bytes_; }
    /// "NF d v: c1 c2 ..."
    std::string text() const;
    static NormalFormKey parse_text(const std::string &line);

    friend bool operator==(const NormalFormKey &, const NormalFormKey &) = default;
    friend auto operator<=>(const NormalFormKey &a, const NormalFormKey &b) { return a.bytes_ <=> b.bytes_; }

  private:
    std::string bytes_;
};

struct NormalFormKeyHash {
    size_t operator()(const NormalFormKey &k) const noexcept { return std::hash<std::string>{}(k.bytes()); }
};

/// Vertex-facet pairing matrix: entry (i, j) = a_i . v_j + c_i.
std::vector<std::vector<Int>> pairing_matrix(const Polytope &P);

/// GL(d,Z)-invariant key of an IP polytope whose interior point is 0.
/// Throws NotIP otherwise.
NormalFormKey linear_normal_form(const Polytope &P);

/// Same key as linear_normal_form, requiring only that 0 is strictly
/// interior (no IP check). Throws OriginNotInterior.
NormalFormKey linear_normal_form_unchecked(const Polytope &P);

/// Key invariant under affine unimodular maps; any dimension.
NormalFormKey affine_normal_form(const Polytope &P);

/// NF(P) == NF(P*) for reflexive P. Throws NotReflexive.
bool is_self_dual(const Polytope &P);

} // namespace reflat
