#include "reflat/matrix.hpp"

#include <ostream>

namespace reflat {

Int dot(const IntPoint &a, const IntPoint &b) {
    __int128 s = 0;
    for (int i = 0; i < a.size(); ++i)
        s += static_cast<__int128>(a[i]) * b[i];
    return checked::narrow(s);
}

IntPoint operator+(const IntPoint &a, const IntPoint &b) {
    IntPoint r(a.size());
    for (int i = 0; i < a.size(); ++i)
        r[i] = checked::add(a[i], b[i]);
    return r;
}

IntPoint operator-(const IntPoint &a, const IntPoint &b) {
    IntPoint r(a.size());
    for (int i = 0; i < a.size(); ++i)
        r[i] = checked::sub(a[i], b[i]);
    return r;
}

IntPoint operator-(const IntPoint &a) {
    IntPoint r(a.size());
    for (int i = 0; i < a.size(); ++i)
        r[i] = checked::neg(a[i]);
    return r;
}

IntPoint scaled(const IntPoint &a, Int k) {
    IntPoint r(a.size());
    for (int i = 0; i < a.size(); ++i)
        r[i] = checked::mul(a[i], k);
    return r;
}

Int content(const IntPoint &a) {
    Int g = 0;
    for (Int x : a)
        g = std::gcd(g, x);
    return g;
}

std::ostream &operator<<(std::ostream &os, const IntPoint &p) {
    os << '(';
    for (int i = 0; i < p.size(); ++i)
        os << (i ? "," : "") << p[i];
    return os << ')';
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto &r : rows) {
        assert(static_cast<int>(r.size()) == cols_);
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntPoint> cols, int dim) {
    IntMatrix m(dim, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < dim; ++i)
            m(i, j) = cols[j][i];
    return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntPoint> rows, int dim) {
    IntMatrix m(static_cast<int>(rows.size()), dim);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < dim; ++j)
            m(i, j) = rows[i][j];
    return m;
}

IntPoint IntMatrix::column(int c) const {
    IntPoint p(rows_);
    for (int i = 0; i < rows_; ++i)
        p[i] = (*this)(i, c);
    return p;
}

IntPoint IntMatrix::row(int r) const {
    IntPoint p(cols_);
    for (int j = 0; j < cols_; ++j)
        p[j] = (*this)(r, j);
    return p;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
    assert(cols_ == o.rows_);
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            __int128 s = 0;
            for (int k = 0; k < cols_; ++k)
                s += static_cast<__int128>((*this)(i, k)) * o(k, j);
            r(i, j) = checked::narrow(s);
        }
    return r;
}

IntPoint IntMatrix::operator*(const IntPoint &p) const {
    assert(cols_ == p.size());
    IntPoint r(rows_);
    for (int i = 0; i < rows_; ++i) {
        __int128 s = 0;
        for (int k = 0; k < cols_; ++k)
            s += static_cast<__int128>((*this)(i, k)) * p[k];
        r[i] = checked::narrow(s);
    }
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j)
        return;
    for (int c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
    return os;
}

namespace {

// rows (r, i) <- [[x, y], [u, v]] * rows (r, i)
void combine_rows(IntMatrix &M, int r, int i, Int x, Int y, Int u, Int v) {
    for (int c = 0; c < M.cols(); ++c) {
        Int a = M(r, c), b = M(i, c);
        M(r, c) = checked::mul_add(x, a, y, b);
        M(i, c) = checked::mul_add(u, a, v, b);
    }
}

void axpy_row(IntMatrix &M, int dst, int src, Int q) {
    if (q == 0)
        return;
    for (int c = 0; c < M.cols(); ++c)
        M(dst, c) = checked::sub(M(dst, c), checked::mul(q, M(src, c)));
}

void negate_row(IntMatrix &M, int r) {
    for (int c = 0; c < M.cols(); ++c)
        M(r, c) = checked::neg(M(r, c));
}

} // namespace

HermiteResult hermite_normal_form(const IntMatrix &A, bool want_transform) {
    HermiteResult res;
    res.H = A;
    IntMatrix &H = res.H;
    const int m = A.rows();
    if (want_transform)
        res.U = IntMatrix::identity(m);
    int r = 0;
    for (int c = 0; c < A.cols() && r < m; ++c) {
        for (int i = r + 1; i < m; ++i) {
            Int b = H(i, c);
            if (b == 0)
                continue;
            Int a = H(r, c);
            Int x, y;
            Int g = ext_gcd(a, b, x, y);
            Int u = -b / g, v = a / g;
            combine_rows(H, r, i, x, y, u, v);
            if (want_transform)
                combine_rows(res.U, r, i, x, y, u, v);
        }
        if (H(r, c) == 0)
            continue;
        if (H(r, c) < 0) {
            negate_row(H, r);
            if (want_transform)
                negate_row(res.U, r);
        }
        const Int p = H(r, c);
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(H(i, c), p);
            axpy_row(H, i, r, q);
            if (want_transform)
                axpy_row(res.U, i, r, q);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

Int determinant(const IntMatrix &A) {
    assert(A.rows() == A.cols());
    const int n = A.rows();
    if (n == 0)
        return 1;
    std::vector<__int128> M(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M[i * n + j] = A(i, j);
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k * n + k] == 0) {
            int p = k + 1;
            while (p < n && M[p * n + k] == 0)
                ++p;
            if (p == n)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(M[k * n + j], M[p * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 v = M[i * n + j] * M[k * n + k] - M[i * n + k] * M[k * n + j];
                M[i * n + j] = v / prev;
                if (M[i * n + j] > INT64_MAX || M[i * n + j] < INT64_MIN)
                    throw OverflowError("determinant");
            }
        prev = M[k * n + k];
    }
    return checked::narrow(sign * M[(n - 1) * n + (n - 1)]);
}

int rank(const IntMatrix &A) { return hermite_normal_form(A, false).rank; }

IntMatrix unimodular_inverse(const IntMatrix &U) {
    auto h = hermite_normal_form(U, true);
    if (h.H != IntMatrix::identity(U.rows()))
        throw DegenerateInput("matrix is not unimodular");
    return h.U;
}

IntMatrix integer_kernel(const IntMatrix &A) {
    auto h = hermite_normal_form(A.transposed(), true);
    const int n = A.cols();
    IntMatrix K(n, n - h.rank);
    for (int k = h.rank; k < n; ++k)
        for (int i = 0; i < n; ++i)
            K(i, k - h.rank) = h.U(k, i);
    return K;
}

} // namespace reflat

namespace reflat {

IntMatrix saturated_left_inverse(const IntMatrix &K) {
    auto h = hermite_normal_form(K, true);
    const int k = K.cols();
    if (h.rank != k)
        throw DegenerateInput("columns are linearly dependent");
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            if (h.H(r, c) != (r == c ? 1 : 0))
                throw DegenerateInput("column span is not saturated");
    IntMatrix L(k, K.rows());
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < K.rows(); ++c)
            L(r, c) = h.U(r, c);
    return L;
}

std::optional<IntPoint> hnf_coordinates(const IntMatrix &B, const IntPoint &y) {
    const int n = B.rows();
    IntPoint rest = y, z(n);
    for (int i = 0; i < n; ++i) {
        const Int piv = B(i, i);
        if (rest[i] % piv != 0)
            return std::nullopt;
        z[i] = rest[i] / piv;
        for (int c = i; c < n; ++c)
            rest[c] = checked::sub(rest[c], checked::mul(z[i], B(i, c)));
    }
    return z;
}

} // namespace reflat
