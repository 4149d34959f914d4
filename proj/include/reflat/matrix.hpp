#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "reflat/arith.hpp"

namespace reflat {

/// Largest ambient dimension handled by the fixed-capacity point type. Newton
/// polytopes are built in up to J = 8 exponent coordinates.
inline constexpr int kMaxDim = 8;

/// A point of Z^d with small fixed capacity. Ordering is lexicographic on the
/// first `size()` coordinates.
class IntPoint {
  public:
    IntPoint() = default;
    explicit IntPoint(int dim) : dim_(dim) {
        assert(dim >= 0 && dim <= kMaxDim);
    }
    IntPoint(std::initializer_list<Int> coords) : dim_(static_cast<int>(coords.size())) {
        assert(dim_ <= kMaxDim);
        std::copy(coords.begin(), coords.end(), c_.begin());
    }
    explicit IntPoint(std::span<const Int> coords) : dim_(static_cast<int>(coords.size())) {
        if (dim_ > kMaxDim)
            throw UnsupportedDimension("point dimension exceeds " + std::to_string(kMaxDim));
        std::copy(coords.begin(), coords.end(), c_.begin());
    }

    int size() const { return dim_; }
    Int &operator[](int i) { return c_[i]; }
    Int operator[](int i) const { return c_[i]; }
    Int *begin() { return c_.data(); }
    Int *end() { return c_.data() + dim_; }
    const Int *begin() const { return c_.data(); }
    const Int *end() const { return c_.data() + dim_; }
    std::span<const Int> coords() const { return {c_.data(), static_cast<size_t>(dim_)}; }

    bool is_zero() const {
        return std::all_of(begin(), end(), [](Int x) { return x == 0; });
    }

    friend bool operator==(const IntPoint &a, const IntPoint &b) {
        return a.dim_ == b.dim_ && std::equal(a.begin(), a.end(), b.begin());
    }
    friend std::strong_ordering operator<=>(const IntPoint &a, const IntPoint &b) {
        if (a.dim_ != b.dim_)
            return a.dim_ <=> b.dim_;
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

  private:
    std::array<Int, kMaxDim> c_{};
    int dim_ = 0;
};

Int dot(const IntPoint &a, const IntPoint &b);
IntPoint operator+(const IntPoint &a, const IntPoint &b);
IntPoint operator-(const IntPoint &a, const IntPoint &b);
IntPoint operator-(const IntPoint &a);
IntPoint scaled(const IntPoint &a, Int k);
/// gcd of the absolute values of the coordinates (0 for the zero vector).
Int content(const IntPoint &a);
std::ostream &operator<<(std::ostream &os, const IntPoint &p);

struct PointHash {
    size_t operator()(const IntPoint &p) const noexcept {
        size_t h = static_cast<size_t>(p.size());
        for (Int x : p)
            h = h * 1000003u ^ static_cast<size_t>(x + 0x9e3779b9);
        return h;
    }
};

/// Dense row-major integer matrix.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(int n);
    /// Matrix whose columns are the given points.
    static IntMatrix from_columns(std::span<const IntPoint> cols, int dim);
    /// Matrix whose rows are the given points.
    static IntMatrix from_rows(std::span<const IntPoint> rows, int dim);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int &operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Int operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    IntPoint column(int c) const;
    IntPoint row(int r) const;
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix &o) const;
    IntPoint operator*(const IntPoint &p) const;

    void swap_rows(int i, int j);

    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

std::ostream &operator<<(std::ostream &os, const IntMatrix &m);

/// Row-style Hermite normal form: H = U * A with U unimodular, H in echelon
/// form with positive pivots and entries above each pivot reduced into
/// [0, pivot). H is the unique representative of the orbit GL(n,Z) * A.
struct HermiteResult {
    IntMatrix H;
    IntMatrix U;
    int rank = 0;
    std::vector<int> pivot_cols;
};

HermiteResult hermite_normal_form(const IntMatrix &A, bool want_transform = true);

/// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix &A);

int rank(const IntMatrix &A);

/// Inverse of a unimodular matrix (|det| = 1).
IntMatrix unimodular_inverse(const IntMatrix &U);

/// Basis (as columns) of the integer kernel {x in Z^n : A x = 0}, saturated.
IntMatrix integer_kernel(const IntMatrix &A);

/// Integer left inverse L (L K = I) of a matrix with saturated column span.
/// Throws DegenerateInput if the columns are dependent or not saturated.
IntMatrix saturated_left_inverse(const IntMatrix &K);

/// Coordinates z with y = sum_i z_i B.row(i), for B a square row-style HNF
/// of full rank. Empty if y is not in the row lattice of B.
std::optional<IntPoint> hnf_coordinates(const IntMatrix &B, const IntPoint &y);

} // namespace reflat
