#pragma once

// Dense exact linear algebra: unique reduced row-echelon form, nullspace,
// and canonical subspace arithmetic. Every "space of structures" computed by
// the solvers lives in a SubspaceBasis, whose rows are kept in RREF so equal
// subspaces have bit-identical representations.

#include <optional>
#include <utility>
#include <vector>

#include "liestruct/errors.hpp"
#include "liestruct/field.hpp"

namespace liestruct {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
struct Mat {
    using Elem = typename F::Elem;
    F fld;
    int rows = 0, cols = 0;
    std::vector<Vec<F>> a;

    Mat(F f, int r, int c) : fld(f), rows(r), cols(c), a(r, Vec<F>(c, f.zero())) {}

    static Mat identity(F f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.a[i][i] = f.one();
        return m;
    }
    static Mat from_rows(F f, int c, std::vector<Vec<F>> rows_in) {
        Mat m(f, static_cast<int>(rows_in.size()), c);
        m.a = std::move(rows_in);
        for (const auto& r : m.a)
            if (static_cast<int>(r.size()) != c) throw RowWidthMismatch("row width != cols");
        return m;
    }

    Elem& at(int r, int c) { return a[r][c]; }
    const Elem& at(int r, int c) const { return a[r][c]; }

    bool operator==(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!fld.eq(a[i][j], o.a[i][j])) return false;
        return true;
    }

    Mat mul(const Mat& o) const {
        if (cols != o.rows) throw AmbientMismatch("matrix product dimension mismatch");
        Mat r(fld, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                if (fld.is_zero(a[i][k])) continue;
                for (int j = 0; j < o.cols; ++j)
                    r.a[i][j] = fld.add(r.a[i][j], fld.mul(a[i][k], o.a[k][j]));
            }
        return r;
    }
    Vec<F> apply(const Vec<F>& v) const {
        if (static_cast<int>(v.size()) != cols) throw AmbientMismatch("matrix-vector mismatch");
        Vec<F> r(rows, fld.zero());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!fld.is_zero(a[i][j])) r[i] = fld.add(r[i], fld.mul(a[i][j], v[j]));
        return r;
    }
    Mat add(const Mat& o) const {
        Mat r(fld, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.a[i][j] = fld.add(a[i][j], o.a[i][j]);
        return r;
    }
    Mat sub(const Mat& o) const {
        Mat r(fld, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.a[i][j] = fld.sub(a[i][j], o.a[i][j]);
        return r;
    }
    Mat scale(const Elem& s) const {
        Mat r(fld, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.a[i][j] = fld.mul(a[i][j], s);
        return r;
    }
    Mat commutator(const Mat& o) const { return mul(o).sub(o.mul(*this)); }

    typename F::Elem trace() const {
        auto t = fld.zero();
        for (int i = 0; i < rows && i < cols; ++i) t = fld.add(t, a[i][i]);
        return t;
    }
    Vec<F> flatten() const {  // row-major
        Vec<F> v;
        v.reserve(std::size_t(rows) * cols);
        for (const auto& r : a) v.insert(v.end(), r.begin(), r.end());
        return v;
    }
    static Mat unflatten(F f, int r, int c, const Vec<F>& v) {
        Mat m(f, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.a[i][j] = v[std::size_t(i) * c + j];
        return m;
    }
};

// In-place Gauss-Jordan to the unique RREF; returns rank.
template <class F>
int rref_in_place(Mat<F>& m) {
    const F& f = m.fld;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.a[i][c])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m.a[r], m.a[piv]);
        const auto lead = m.a[r][c];
        if (!f.eq(lead, f.one())) {
            const auto il = f.inv(lead);
            for (int j = c; j < m.cols; ++j) m.a[r][j] = f.mul(m.a[r][j], il);
        }
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.a[i][c])) continue;
            const auto factor = m.a[i][c];
            for (int j = c; j < m.cols; ++j)
                m.a[i][j] = f.sub(m.a[i][j], f.mul(factor, m.a[r][j]));
        }
        ++r;
    }
    return r;
}

template <class F>
std::pair<Mat<F>, int> rref(const Mat<F>& m) {
    Mat<F> out = m;
    int rank = rref_in_place(out);
    return {std::move(out), rank};
}

template <class F>
int rank_of(const Mat<F>& m) {
    Mat<F> tmp = m;
    return rref_in_place(tmp);
}

template <class F>
struct SubspaceBasis {
    F fld;
    int ambient = 0;
    std::vector<Vec<F>> vectors;  // RREF rows: pivots 1, strictly increasing, zeros above/below

    SubspaceBasis(F f, int amb) : fld(f), ambient(amb) {}

    int dim() const { return static_cast<int>(vectors.size()); }

    static SubspaceBasis from_span(F f, int ambient, const std::vector<Vec<F>>& span) {
        for (const auto& v : span)
            if (static_cast<int>(v.size()) != ambient)
                throw AmbientMismatch("span vector has wrong length");
        Mat<F> m = Mat<F>::from_rows(f, ambient, span);
        int rank = rref_in_place(m);
        SubspaceBasis b(f, ambient);
        b.vectors.assign(m.a.begin(), m.a.begin() + rank);
        return b;
    }
    static SubspaceBasis full(F f, int ambient) {
        SubspaceBasis b(f, ambient);
        for (int i = 0; i < ambient; ++i) {
            Vec<F> v(ambient, f.zero());
            v[i] = f.one();
            b.vectors.push_back(std::move(v));
        }
        return b;
    }

    int pivot_of(int row) const {
        const auto& v = vectors[row];
        for (int j = 0; j < ambient; ++j)
            if (!fld.is_zero(v[j])) return j;
        return ambient;
    }

    // Reduces v against the basis rows; returns the (unique) remainder.
    Vec<F> reduce(Vec<F> v) const {
        if (static_cast<int>(v.size()) != ambient) throw AmbientMismatch("vector length != ambient");
        for (int r = 0; r < dim(); ++r) {
            const int p = pivot_of(r);
            if (p >= ambient || fld.is_zero(v[p])) continue;
            const auto coeff = v[p];
            for (int j = p; j < ambient; ++j)
                v[j] = fld.sub(v[j], fld.mul(coeff, vectors[r][j]));
        }
        return v;
    }
    bool contains(const Vec<F>& v) const {
        auto rem = reduce(v);
        for (const auto& x : rem)
            if (!fld.is_zero(x)) return false;
        return true;
    }
    bool contains(const SubspaceBasis& other) const {
        if (other.ambient != ambient) throw AmbientMismatch("subspace ambients differ");
        for (const auto& v : other.vectors)
            if (!contains(v)) return false;
        return true;
    }
    // Coordinates of v in this basis (basis rows are independent, so unique);
    // nullopt when v is outside the span.
    std::optional<Vec<F>> coordinates(Vec<F> v) const {
        Vec<F> coeffs(dim(), fld.zero());
        for (int r = 0; r < dim(); ++r) {
            const int p = pivot_of(r);
            if (p >= ambient || fld.is_zero(v[p])) continue;
            coeffs[r] = v[p];
            const auto coeff = v[p];
            for (int j = p; j < ambient; ++j)
                v[j] = fld.sub(v[j], fld.mul(coeff, vectors[r][j]));
        }
        for (const auto& x : v)
            if (!fld.is_zero(x)) return std::nullopt;
        return coeffs;
    }

    SubspaceBasis sum(const SubspaceBasis& other) const {
        if (other.ambient != ambient) throw AmbientMismatch("subspace ambients differ");
        std::vector<Vec<F>> all = vectors;
        all.insert(all.end(), other.vectors.begin(), other.vectors.end());
        return from_span(fld, ambient, all);
    }

    // Zassenhaus: RREF of [A|A; B|0] — rows whose left half vanished carry the
    // intersection in their right half.
    SubspaceBasis intersect(const SubspaceBasis& other) const {
        if (other.ambient != ambient) throw AmbientMismatch("subspace ambients differ");
        const int n = ambient;
        std::vector<Vec<F>> rows;
        rows.reserve(vectors.size() + other.vectors.size());
        for (const auto& v : vectors) {
            Vec<F> r(2 * n, fld.zero());
            for (int j = 0; j < n; ++j) r[j] = r[n + j] = v[j];
            rows.push_back(std::move(r));
        }
        for (const auto& v : other.vectors) {
            Vec<F> r(2 * n, fld.zero());
            for (int j = 0; j < n; ++j) r[j] = v[j];
            rows.push_back(std::move(r));
        }
        Mat<F> m = Mat<F>::from_rows(fld, 2 * n, rows);
        int rank = rref_in_place(m);
        std::vector<Vec<F>> inter;
        for (int i = 0; i < rank; ++i) {
            bool left_zero = true;
            for (int j = 0; j < n && left_zero; ++j)
                if (!fld.is_zero(m.a[i][j])) left_zero = false;
            if (left_zero) inter.emplace_back(m.a[i].begin() + n, m.a[i].end());
        }
        return from_span(fld, n, inter);
    }

    // dim(this) - dim(this ∩ sub): the dimension of this modulo sub.
    int quotient_dim(const SubspaceBasis& sub) const { return dim() - intersect(sub).dim(); }

    bool operator==(const SubspaceBasis& o) const {
        if (ambient != o.ambient || dim() != o.dim()) return false;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < ambient; ++j)
                if (!fld.eq(vectors[i][j], o.vectors[i][j])) return false;
        return true;
    }
};

// Nullspace of the linear map v -> m*v, as a canonical SubspaceBasis of F^cols.
template <class F>
SubspaceBasis<F> nullspace(const Mat<F>& m) {
    const F& f = m.fld;
    auto [red, rank] = rref(m);
    std::vector<int> pivot_col(rank);
    std::vector<bool> is_pivot(m.cols, false);
    for (int r = 0; r < rank; ++r) {
        int p = 0;
        while (p < m.cols && f.is_zero(red.a[r][p])) ++p;
        pivot_col[r] = p;
        is_pivot[p] = true;
    }
    std::vector<Vec<F>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec<F> v(m.cols, f.zero());
        v[c] = f.one();
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = f.neg(red.a[r][c]);
        basis.push_back(std::move(v));
    }
    return SubspaceBasis<F>::from_span(f, m.cols, basis);
}

// Particular solution of A x = b with free variables set to zero.
template <class F>
std::optional<Vec<F>> solve_linear(const Mat<F>& m, const Vec<F>& b) {
    const F& f = m.fld;
    if (static_cast<int>(b.size()) != m.rows) throw AmbientMismatch("rhs length != rows");
    Mat<F> aug(f, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.a[i][j] = m.a[i][j];
        aug.a[i][m.cols] = b[i];
    }
    int rank = rref_in_place(aug);
    Vec<F> x(m.cols, f.zero());
    for (int r = 0; r < rank; ++r) {
        int p = 0;
        while (p <= m.cols && f.is_zero(aug.a[r][p])) ++p;
        if (p == m.cols) return std::nullopt;  // row 0 = 1, inconsistent
        x[p] = aug.a[r][m.cols];
    }
    return x;
}

// Flat indices for packed coordinates on unordered pairs of basis indices.
inline int sym_pair_count(int n) { return n * (n + 1) / 2; }
inline int sym_pair_index(int n, int p, int q) {  // requires p <= q
    return p * n - p * (p - 1) / 2 + (q - p);
}
inline int skew_pair_count(int n) { return n * (n - 1) / 2; }
inline int skew_pair_index(int n, int p, int q) {  // requires p < q
    return p * (2 * n - p - 1) / 2 + (q - p - 1);
}

}  // namespace liestruct
