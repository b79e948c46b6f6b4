#pragma once

// Exact dense linear algebra over Q and Z/p, plus fraction-free (Bareiss)
// elimination over integral domains.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "binres/arith.hpp"
#include "binres/errors.hpp"
#include "binres/modular.hpp"

namespace binres {

template <typename T>
using DenseMatrix = std::vector<std::vector<T>>;

template <typename F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational inverse(const Rational& x) { return Rational(1) / x; }
};

template <>
struct FieldOps<Zp> {
    static bool is_zero(Zp x) { return x.is_zero(); }
    static Zp inverse(Zp x) { return x.inverse(); }
};

/// Incrementally built row-echelon basis; answers span membership exactly.
template <typename F>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t width) : width_(width) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t width() const noexcept { return width_; }

    /// Inserts `v` if it is independent of the current rows; returns whether it was.
    bool add(std::vector<F> v) {
        reduce(v);
        std::size_t p = 0;
        while (p < width_ && FieldOps<F>::is_zero(v[p])) ++p;
        if (p == width_) return false;
        const F inv = FieldOps<F>::inverse(v[p]);
        for (std::size_t j = p; j < width_; ++j)
            if (!FieldOps<F>::is_zero(v[j])) v[j] = v[j] * inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        for (const auto& x : v)
            if (!FieldOps<F>::is_zero(x)) return false;
        return true;
    }

private:
    void reduce(std::vector<F>& v) const {
        if (v.size() != width_) throw DimensionMismatchError("row has the wrong width");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::size_t p = pivots_[k];
            if (FieldOps<F>::is_zero(v[p])) continue;
            const F f = v[p];
            const auto& row = rows_[k];
            for (std::size_t j = p; j < width_; ++j)
                if (!FieldOps<F>::is_zero(row[j])) v[j] = v[j] - f * row[j];
        }
    }

    std::size_t width_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivots_;
};

template <typename F>
std::size_t rank(const DenseMatrix<F>& m) {
    if (m.empty()) return 0;
    EchelonBasis<F> basis(m.front().size());
    for (const auto& row : m) basis.add(row);
    return basis.rank();
}

/// Reduced row echelon form in place; returns pivot columns.
template <typename F>
std::vector<std::size_t> rref(DenseMatrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && FieldOps<F>::is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const F inv = FieldOps<F>::inverse(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || FieldOps<F>::is_zero(m[i][c])) continue;
            const F f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!FieldOps<F>::is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of {x : m x = 0}.
template <typename F>
std::vector<std::vector<F>> kernel(DenseMatrix<F> m, std::size_t cols) {
    std::vector<std::vector<F>> out;
    if (m.empty()) {
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<F> e(cols, F(0));
            e[j] = F(1);
            out.push_back(std::move(e));
        }
        return out;
    }
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> x(cols, F(0));
        x[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = F(0) - m[r][free];
        out.push_back(std::move(x));
    }
    return out;
}

/// Determinant over a field by Gaussian elimination.
template <typename F>
F determinant(DenseMatrix<F> m) {
    const std::size_t n = m.size();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[c].size() != n) throw MatrixShapeError("determinant of a non-square matrix");
        std::size_t p = c;
        while (p < n && FieldOps<F>::is_zero(m[p][c])) ++p;
        if (p == n) return F(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = F(0) - det;
        }
        det = det * m[c][c];
        const F inv = FieldOps<F>::inverse(m[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (FieldOps<F>::is_zero(m[i][c])) continue;
            const F f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

/// Integral-domain operations needed by Bareiss elimination.
template <typename R>
struct DomainOps;

template <>
struct DomainOps<Integer> {
    static bool is_zero(const Integer& x) { return x == 0; }
    static Integer exact_div(const Integer& x, const Integer& y) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        return q;
    }
};

/// Fraction-free determinant; every intermediate division is exact.
template <typename R>
R bareiss_determinant(DenseMatrix<R> m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k].size() != n) throw MatrixShapeError("determinant of a non-square matrix");
        if (DomainOps<R>::is_zero(m[k][k])) {
            std::size_t p = k + 1;
            while (p < n && DomainOps<R>::is_zero(m[p][k])) ++p;
            if (p == n) return R(0);
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = DomainOps<R>::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? R(0) - det : det;
}

/// Solves A X = B over Q (A square) by fraction-free elimination with
/// nonzero-pivot row selection. Returns nullopt when A is singular.
inline std::optional<DenseMatrix<Rational>> solve_fraction_free(const DenseMatrix<Rational>& A,
                                                                const DenseMatrix<Rational>& B) {
    const std::size_t n = A.size();
    const std::size_t k = n ? B.at(0).size() : 0;
    if (B.size() != n) throw MatrixShapeError("right-hand side has the wrong height");
    // Clear denominators row by row.
    DenseMatrix<Integer> M(n, std::vector<Integer>(n + k));
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n) throw MatrixShapeError("solve with a non-square matrix");
        Integer l = 1;
        for (const auto& x : A[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (const auto& x : B[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j].get_num() * (l / A[i][j].get_den());
        for (std::size_t j = 0; j < k; ++j) M[i][n + j] = B[i][j].get_num() * (l / B[i][j].get_den());
    }
    Integer prev = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(M[p], M[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n + k; ++j)
                M[i][j] = DomainOps<Integer>::exact_div(M[i][j] * M[c][c] - M[i][c] * M[c][j], prev);
            M[i][c] = 0;
        }
        prev = M[c][c];
    }
    DenseMatrix<Rational> X(n, std::vector<Rational>(k));
    for (std::size_t col = 0; col < k; ++col) {
        for (std::size_t i = n; i-- > 0;) {
            Rational s = M[i][n + col];
            for (std::size_t j = i + 1; j < n; ++j)
                if (M[i][j] != 0) s -= Rational(M[i][j]) * X[j][col];
            X[i][col] = s / Rational(M[i][i]);
        }
    }
    return X;
}

}  // namespace binres
