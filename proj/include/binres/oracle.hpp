#pragma once

// Brute-force reference computations: modular determinants, graded pieces of
// the ideal by plain row reduction, membership, quotient dimension, and the
// Sylvester resultant of two binary quadrics. Nothing here uses the frames or
// the circuit factorization.

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "binres/coeff_matrix.hpp"
#include "binres/linalg.hpp"
#include "binres/modular.hpp"
#include "binres/xpoly.hpp"

namespace binres {

struct ModularContext {
    std::uint64_t prime = kOraclePrime;
    std::uint64_t seed = 0;
    ModAssignment assignment;

    static ModularContext random(std::size_t n, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return {kOraclePrime, seed, ModAssignment::random(n, rng)};
    }
};

inline Zp det_mod(const SparseParamMatrix& m, const ModularContext& ctx) {
    if (!m.is_square()) throw MatrixShapeError("determinant of a non-square matrix");
    return determinant(m.to_dense_mod(ctx.assignment));
}
inline Zp det_mod(const CoeffMatrix& m, const ModularContext& ctx) { return det_mod(m.matrix, ctx); }

/// The span of {m * f_i : deg m = lambda - 2} inside R_lambda, kept as an
/// exact echelon basis over Q.
class IdealSlice {
public:
    IdealSlice(const std::vector<RationalXPoly>& forms, std::size_t n, unsigned lambda)
        : n_(n), lambda_(lambda), basis_(dim_homogeneous(n, lambda)) {
        const auto monos = monomials_of_degree(n, lambda);
        for (std::size_t i = 0; i < monos.size(); ++i) index_.emplace(monos[i], i);
        if (lambda < 2) return;
        for (const auto& m : monomials_of_degree(n, lambda - 2))
            for (const auto& f : forms) basis_.add(to_vector(f.shifted(m)));
    }

    unsigned lambda() const noexcept { return lambda_; }
    std::size_t dim() const noexcept { return basis_.rank(); }

    bool contains(const RationalXPoly& f) const {
        if (f.is_zero()) return true;
        if (!f.is_homogeneous() || f.degree() != static_cast<int>(lambda_)) return false;
        return basis_.contains(to_vector(f));
    }

private:
    std::vector<Rational> to_vector(const RationalXPoly& f) const {
        std::vector<Rational> v(index_.size(), Rational(0));
        for (const auto& [m, c] : f.terms()) v[index_.at(m)] = c;
        return v;
    }

    std::size_t n_;
    unsigned lambda_;
    std::map<XMonomial, std::size_t> index_;
    EchelonBasis<Rational> basis_;
};

namespace detail {

inline std::vector<RationalXPoly> forms_of(const BinomialSystem& sys) {
    std::vector<RationalXPoly> out;
    for (std::size_t i = 0; i < sys.n(); ++i) out.push_back(sys.form(i));
    return out;
}

/// Rank of the spanning set mod p, or nullopt if some value has a
/// denominator divisible by p.
inline std::optional<std::size_t> ideal_rank_mod(const std::vector<RationalXPoly>& forms, std::size_t n, unsigned lambda) {
    const auto monos = monomials_of_degree(n, lambda);
    std::map<XMonomial, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    EchelonBasis<Zp> basis(monos.size());
    try {
        for (const auto& m : monomials_of_degree(n, lambda - 2))
            for (const auto& f : forms) {
                std::vector<Zp> v(monos.size());
                for (const auto& [mono, c] : f.terms()) v[index.at(mono * m)] = Zp::from_rational(c);
                basis.add(std::move(v));
            }
    } catch (const ValidationError&) {
        return std::nullopt;
    }
    return basis.rank();
}

}  // namespace detail

/// dim_Q I_lambda. The rank mod p never exceeds the rational rank, and no
/// specialization exceeds the generic value dim R_lambda - C(n, lambda); so a
/// modular rank reaching that value is exact. Otherwise the rank is
/// recomputed over Q.
inline std::size_t ideal_dim(const BinomialSystem& sys, unsigned lambda) {
    const std::size_t n = sys.n();
    if (lambda < 2) return 0;
    const auto forms = detail::forms_of(sys);
    const std::size_t top = dim_homogeneous(n, lambda) - (lambda <= n ? binomial(n, lambda) : 0);
    if (auto r = detail::ideal_rank_mod(forms, n, lambda); r && *r == top) return top;
    return IdealSlice(forms, n, lambda).dim();
}

inline bool membership(const RationalXPoly& f, const BinomialSystem& sys) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw ValidationError("membership needs a homogeneous polynomial");
    return IdealSlice(detail::forms_of(sys), sys.n(), static_cast<unsigned>(f.degree())).contains(f);
}

/// dim R_lambda - dim I_lambda for lambda = 0..n+1.
inline std::vector<std::size_t> oracle_hilbert(const BinomialSystem& sys) {
    std::vector<std::size_t> h;
    for (unsigned lambda = 0; lambda <= sys.n() + 1; ++lambda)
        h.push_back(dim_homogeneous(sys.n(), lambda) - ideal_dim(sys, lambda));
    return h;
}

/// Total dimension of R/I, or nullopt when R/I is infinite-dimensional.
/// Once I_{n+1} = R_{n+1} every higher piece is full, so degrees 0..n+1
/// suffice. Conversely n quadrics cutting out a zero-dimensional scheme
/// form a regular sequence, whose quotient vanishes in degree n+1; so a
/// nonzero value there means the quotient is infinite.
inline std::optional<std::size_t> quotient_dim(const BinomialSystem& sys) {
    const auto h = oracle_hilbert(sys);
    if (h.back() != 0) return std::nullopt;
    std::size_t total = 0;
    for (auto x : h) total += x;
    return total;
}

/// Determinant by cofactor expansion along the first row (small matrices).
template <typename T>
T cofactor_determinant(const DenseMatrix<T>& m, T zero, T one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    if (n == 1) return m[0][0];
    T det = zero;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == zero) continue;
        DenseMatrix<T> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][j] * cofactor_determinant(minor, zero, one);
        if (j % 2 == 0) det = det + term;
        else det = det - term;
    }
    return det;
}

/// Resultant of two binary quadrics f, g in x1, x2: det of the 4x4 Sylvester
/// matrix in the coefficients of x1^2, x1 x2, x2^2.
template <typename C>
C sylvester_resultant_2(const XPoly<C>& f, const XPoly<C>& g, C zero, C one) {
    for (const auto* p : {&f, &g}) {
        if (p->nvars() != 2) throw DimensionMismatchError("Sylvester resultant needs binary forms");
        if (!p->is_zero() && (!p->is_homogeneous() || p->degree() != 2))
            throw ValidationError("Sylvester resultant needs quadratic forms");
    }
    auto coeffs = [](const XPoly<C>& p) {
        return std::vector<C>{p.coefficient(XMonomial({2, 0})), p.coefficient(XMonomial({1, 1})),
                              p.coefficient(XMonomial({0, 2}))};
    };
    const auto cf = coeffs(f), cg = coeffs(g);
    DenseMatrix<C> s = {{cf[0], cf[1], cf[2], zero},
                        {zero, cf[0], cf[1], cf[2]},
                        {cg[0], cg[1], cg[2], zero},
                        {zero, cg[0], cg[1], cg[2]}};
    for (auto& row : s)
        for (auto& x : row)
            if (x == C{}) x = zero;
    return cofactor_determinant(s, zero, one);
}

inline ParamPoly sylvester_resultant_2(const SymbolicXPoly& f, const SymbolicXPoly& g) {
    const std::size_t n = std::max(f.terms().empty() ? 0 : f.terms().begin()->second.nvars(),
                                   g.terms().empty() ? 0 : g.terms().begin()->second.nvars());
    return sylvester_resultant_2<ParamPoly>(f, g, ParamPoly(n), ParamPoly(n, 1));
}
inline Rational sylvester_resultant_2(const RationalXPoly& f, const RationalXPoly& g) {
    return sylvester_resultant_2<Rational>(f, g, Rational(0), Rational(1));
}

}  // namespace binres
