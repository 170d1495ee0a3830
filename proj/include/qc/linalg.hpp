#pragma once

#include <string>
#include <vector>

#include "qc/golden.hpp"

namespace qc {

using VecR = std::vector<GoldenRat>;
using MatR = std::vector<std::vector<GoldenRat>>;

inline GoldenRat dot(const VecR& a, const VecR& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    GoldenRat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline VecR vadd(const VecR& a, const VecR& b) {
    VecR r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline VecR vsub(const VecR& a, const VecR& b) {
    VecR r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline VecR vneg(const VecR& a) {
    VecR r(a);
    for (auto& x : r) x = -x;
    return r;
}

inline VecR vscale(const GoldenRat& c, const VecR& a) {
    VecR r(a);
    for (auto& x : r) x *= c;
    return r;
}

inline VecR vstar(const VecR& a) {
    VecR r(a);
    for (auto& x : r) x = x.star();
    return r;
}

inline bool vec_eq(const VecR& a, const VecR& b) { return a == b; }

inline bool vec_lex_less(const VecR& a, const VecR& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = golden_compare(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

inline std::string vec_str(const VecR& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].str();
    }
    return s + ")";
}

inline MatR mat_identity(int n) {
    MatR m(n, VecR(n));
    for (int i = 0; i < n; ++i) m[i][i] = GoldenRat::one();
    return m;
}

inline VecR mat_vec(const MatR& m, const VecR& v) {
    VecR r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline MatR mat_mul(const MatR& a, const MatR& b) {
    std::size_t n = a.size(), k = b.size(), c = b[0].size();
    MatR r(n, VecR(c));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            GoldenRat s;
            for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    return r;
}

inline MatR mat_transpose(const MatR& a) {
    MatR r(a[0].size(), VecR(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

inline MatR mat_star(const MatR& a) {
    MatR r(a);
    for (auto& row : r)
        for (auto& x : row) x = x.star();
    return r;
}

inline bool mat_eq(const MatR& a, const MatR& b) { return a == b; }

/// Row-reduces a copy of m, returning its rank.
inline int mat_rank(MatR m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        GoldenRat inv = m[rank][c].inverse();
        for (int j = c; j < cols; ++j) m[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            GoldenRat f = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Solves the homogeneous system rows * x = 0; returns a basis of the kernel.
inline std::vector<VecR> mat_kernel(MatR m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        GoldenRat inv = m[rank][c].inverse();
        for (int j = c; j < cols; ++j) m[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            GoldenRat f = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<VecR> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        VecR v(cols);
        v[free] = GoldenRat::one();
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline MatR mat_inverse(const MatR& a);

/// Solves a square system a * x = b; throws if singular.
inline VecR mat_solve(MatR a, VecR b) {
    int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!a[r][c].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::runtime_error("mat_solve: singular matrix");
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        GoldenRat inv = a[c][c].inverse();
        for (int j = c; j < n; ++j) a[c][j] *= inv;
        b[c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            GoldenRat f = a[r][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    return b;
}

inline MatR mat_inverse(const MatR& a) {
    int n = static_cast<int>(a.size());
    MatR inv(n, VecR(n));
    for (int j = 0; j < n; ++j) {
        VecR rhs(n);
        rhs[j] = GoldenRat::one();
        VecR col = mat_solve(a, rhs);
        for (int i = 0; i < n; ++i) inv[i][j] = col[i];
    }
    return inv;
}

}  // namespace qc
