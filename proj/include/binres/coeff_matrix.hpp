#pragma once

// Binomial systems f_i = a_i x_i^2 + b_i m_i and their coefficient matrices
// C'(lambda) (all degree-lambda columns) and C(lambda) (non-square-free block).

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "binres/arith.hpp"
#include "binres/frames.hpp"
#include "binres/linalg.hpp"
#include "binres/modular.hpp"
#include "binres/xpoly.hpp"

namespace binres {

struct SparseEntry {
    std::size_t col = 0;
    int sign = 1;
    ParamMonomial value;
};

/// Row-major sparse matrix whose entries are ±(parameter monomial).
class SparseParamMatrix {
public:
    SparseParamMatrix() = default;
    SparseParamMatrix(std::size_t rows, std::size_t cols, std::size_t nparams)
        : rows_(rows), cols_(cols), nparams_(nparams), entries_(rows) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nparams() const noexcept { return nparams_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const std::vector<SparseEntry>& row(std::size_t r) const { return entries_.at(r); }

    void add(std::size_t r, std::size_t c, ParamMonomial v, int sign = 1) {
        if (r >= rows_ || c >= cols_) throw MatrixShapeError("entry outside the matrix");
        if (v.nvars() != nparams_) throw DimensionMismatchError("entry over a different parameter count");
        for (const auto& e : entries_[r])
            if (e.col == c) throw MatrixShapeError("duplicate entry at one position");
        entries_[r].push_back({c, sign, std::move(v)});
    }
    void add(std::size_t r, std::size_t c, Param p, int sign = 1) { add(r, c, ParamMonomial::of(nparams_, p), sign); }

    std::size_t nonzeros() const {
        std::size_t k = 0;
        for (const auto& r : entries_) k += r.size();
        return k;
    }

    template <typename Eval, typename F = std::invoke_result_t<Eval, const ParamMonomial&>>
    DenseMatrix<F> to_dense(Eval eval) const {
        DenseMatrix<F> d(rows_, std::vector<F>(cols_, F(0)));
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& e : entries_[r]) {
                F v = eval(e.value);
                d[r][e.col] = e.sign < 0 ? F(0) - v : v;
            }
        return d;
    }
    DenseMatrix<Zp> to_dense_mod(const ModAssignment& s) const {
        return to_dense([&](const ParamMonomial& m) { return evaluate_mod(m, s); });
    }
    DenseMatrix<Rational> to_dense_rational(const Assignment& s) const {
        return to_dense([&](const ParamMonomial& m) { return specialize(m, s); });
    }

    /// Restriction to the leading rows x cols block.
    SparseParamMatrix leading_block(std::size_t rows, std::size_t cols) const {
        SparseParamMatrix out(rows, cols, nparams_);
        for (std::size_t r = 0; r < rows; ++r)
            for (const auto& e : entries_.at(r))
                if (e.col < cols) out.entries_[r].push_back(e);
        return out;
    }

    /// Block-diagonal assembly [x 0; 0 y].
    static SparseParamMatrix block_diagonal(const SparseParamMatrix& x, const SparseParamMatrix& y) {
        if (x.nparams_ != y.nparams_) throw DimensionMismatchError("blocks over different parameter counts");
        SparseParamMatrix out(x.rows_ + y.rows_, x.cols_ + y.cols_, x.nparams_);
        for (std::size_t r = 0; r < x.rows_; ++r) out.entries_[r] = x.entries_[r];
        for (std::size_t r = 0; r < y.rows_; ++r)
            for (auto e : y.entries_[r]) {
                e.col += x.cols_;
                out.entries_[x.rows_ + r].push_back(std::move(e));
            }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nparams_ = 0;
    std::vector<std::vector<SparseEntry>> entries_;
};

/// f_i = a_i x_i^2 + b_i * cofactor, square-free degree-2 cofactor.
struct Generator {
    unsigned square = 0;  // 0-based i
    XMonomial cofactor;
};

/// n binomial generators in normal form, one per square index. Symbolic unless
/// values for a and b are attached.
class BinomialSystem {
public:
    BinomialSystem() = default;

    /// `cofactors[i]` lists the two distinct 0-based variables of m_i.
    static BinomialSystem symbolic(std::size_t n, const std::vector<std::pair<unsigned, unsigned>>& cofactors) {
        if (n < 1) throw ValidationError("a binomial system needs n >= 1");
        if (cofactors.size() != n) throw ValidationError("need exactly one cofactor per generator");
        BinomialSystem s;
        s.n_ = n;
        for (unsigned i = 0; i < n; ++i) {
            auto [j, k] = cofactors[i];
            if (j >= n || k >= n) throw ValidationError("cofactor index out of range in f" + std::to_string(i + 1));
            if (j == k) throw ValidationError("cofactor of f" + std::to_string(i + 1) + " is not square-free");
            s.gens_.push_back({i, XMonomial::var(n, j) * XMonomial::var(n, k)});
        }
        return s;
    }

    BinomialSystem specialized(std::vector<Rational> a, std::vector<Rational> b) const {
        if (a.size() != n_ || b.size() != n_) throw DimensionMismatchError("value vectors must have length n");
        BinomialSystem s = *this;
        s.a_ = std::move(a);
        s.b_ = std::move(b);
        return s;
    }
    BinomialSystem pattern() const {
        BinomialSystem s = *this;
        s.a_.reset();
        s.b_.reset();
        return s;
    }

    std::size_t n() const noexcept { return n_; }
    const std::vector<Generator>& generators() const noexcept { return gens_; }
    const Generator& generator(std::size_t i) const { return gens_.at(i); }
    bool is_specialized() const noexcept { return a_.has_value(); }

    /// 0-based cofactor variables of f_i, ascending.
    std::pair<unsigned, unsigned> cofactor_indices(std::size_t i) const {
        const auto& m = gens_.at(i).cofactor;
        std::vector<unsigned> v;
        for (unsigned k = 0; k < n_; ++k)
            if (m[k]) v.push_back(k);
        return {v.at(0), v.at(1)};
    }

    const std::vector<Rational>& a_values() const {
        require_specialized();
        return *a_;
    }
    const std::vector<Rational>& b_values() const {
        require_specialized();
        return *b_;
    }
    Assignment assignment() const {
        require_specialized();
        return Assignment::from_vectors(*a_, *b_);
    }

    SymbolicXPoly symbolic_form(std::size_t i) const {
        const auto& g = gens_.at(i);
        SymbolicXPoly f(n_);
        f.add_term(XMonomial::var(n_, g.square, 2), ParamPoly::param(n_, Param::a(g.square)));
        f.add_term(g.cofactor, ParamPoly::param(n_, Param::b(g.square)));
        return f;
    }
    RationalXPoly form(std::size_t i) const {
        require_specialized();
        const auto& g = gens_.at(i);
        RationalXPoly f(n_);
        f.add_term(XMonomial::var(n_, g.square, 2), (*a_)[i]);
        f.add_term(g.cofactor, (*b_)[i]);
        return f;
    }

private:
    void require_specialized() const {
        if (!a_) throw ValidationError("operation needs a specialized system");
    }

    std::size_t n_ = 0;
    std::vector<Generator> gens_;
    std::optional<std::vector<Rational>> a_;
    std::optional<std::vector<Rational>> b_;
};

enum class MatrixKind { CPrime, C };

/// C'(lambda) or C(lambda) together with its row and column labels.
struct CoeffMatrix {
    MatrixKind kind = MatrixKind::C;
    RowFrame row_frame;
    ColumnFrame column_frame;
    SparseParamMatrix matrix;

    std::size_t rows() const noexcept { return matrix.rows(); }
    std::size_t cols() const noexcept { return matrix.cols(); }
};

/// Row k holds the coefficients of m * f_{j'}: a_{j'} at column m x_{j'}^2 and
/// b_{j'} at column m * m_{j'}.
inline CoeffMatrix build_cprime(const BinomialSystem& sys, unsigned lambda, const IndexOrder& order) {
    if (lambda < 2) throw ValidationError("coefficient matrices need lambda >= 2");
    const std::size_t n = sys.n();
    CoeffMatrix cm;
    cm.kind = MatrixKind::CPrime;
    cm.row_frame = build_row_frame(n, lambda, order);
    cm.column_frame = build_column_frame(cm.row_frame);
    const auto idx = column_index(cm.column_frame);
    cm.matrix = SparseParamMatrix(cm.row_frame.rows.size(), cm.column_frame.columns.size(), n);
    for (std::size_t r = 0; r < cm.row_frame.rows.size(); ++r) {
        const auto& [m, g] = cm.row_frame.rows[r];
        const auto& gen = sys.generator(g);
        cm.matrix.add(r, idx.at(m * XMonomial::var(n, g, 2)), Param::a(g));
        cm.matrix.add(r, idx.at(m * gen.cofactor), Param::b(g));
    }
    return cm;
}

inline CoeffMatrix build_c(const BinomialSystem& sys, unsigned lambda, const IndexOrder& order) {
    CoeffMatrix cm = build_cprime(sys, lambda, order);
    const std::size_t N = cm.column_frame.split;
    cm.kind = MatrixKind::C;
    cm.matrix = cm.matrix.leading_block(N, N);
    return cm;
}

/// Occupancy laws of C'(lambda) / C(lambda): one a-entry and at most one
/// b-entry per row (exactly one in C'), exactly one a-entry per column of C,
/// a_{j'} on the diagonal of C. Returns an empty string or a description.
inline std::string check_occupancy(const CoeffMatrix& cm) {
    const auto& M = cm.matrix;
    const std::size_t N = cm.column_frame.split;
    if (cm.row_frame.rows.size() != N) return "row count differs from non-square-free column count";
    std::vector<int> a_per_col(M.cols(), 0);
    for (std::size_t r = 0; r < M.rows(); ++r) {
        int a = 0, b = 0;
        for (const auto& e : M.row(r)) {
            if (e.value.degree() != 1 || e.sign != 1) return "entry is not a single parameter";
            if (e.value.b_only()) {
                ++b;
            } else {
                ++a;
                ++a_per_col[e.col];
                if (cm.kind == MatrixKind::C && e.col != r) return "a-entry off the diagonal in row " + std::to_string(r);
            }
        }
        if (a != 1) return "row " + std::to_string(r) + " has " + std::to_string(a) + " a-entries";
        if (cm.kind == MatrixKind::CPrime ? b != 1 : b > 1)
            return "row " + std::to_string(r) + " has " + std::to_string(b) + " b-entries";
    }
    if (cm.kind == MatrixKind::C)
        for (std::size_t c = 0; c < M.cols(); ++c)
            if (a_per_col[c] != 1) return "column " + std::to_string(c) + " has " + std::to_string(a_per_col[c]) + " a-entries";
    return {};
}

}  // namespace binres
