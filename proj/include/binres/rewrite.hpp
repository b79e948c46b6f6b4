#pragma once

// Rewriting modulo a specialized binomial complete intersection: every
// non-square-free monomial of degree lambda <= n+1 is congruent to a unique
// combination of square-free monomials.

#include <map>
#include <vector>

#include "binres/coeff_matrix.hpp"
#include "binres/linalg.hpp"
#include "binres/oracle.hpp"
#include "binres/resultant.hpp"

namespace binres {

class RewriteTable {
public:
    unsigned lambda() const noexcept { return lambda_; }
    std::size_t n() const noexcept { return n_; }
    /// The non-square-free monomials w_1..w_N (the leading columns of C(lambda)).
    const std::vector<XMonomial>& monomials() const noexcept { return words_; }
    const std::vector<RationalXPoly>& tails() const noexcept { return tails_; }

    /// Square-free polynomial congruent to w modulo I.
    const RationalXPoly& tail(const XMonomial& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) throw ValidationError("monomial " + w.str(default_names(n_)) + " has no rewrite entry");
        return tails_[it->second];
    }

private:
    friend RewriteTable rewrite_table(const BinomialSystem&, unsigned);

    unsigned lambda_ = 0;
    std::size_t n_ = 0;
    std::vector<XMonomial> words_;
    std::vector<RationalXPoly> tails_;
    std::map<XMonomial, std::size_t> index_;
};

/// Solves C(lambda) X = C'(lambda)[:, square-free]; row k of -X gives the
/// tail of w_k.
inline RewriteTable rewrite_table(const BinomialSystem& sys, unsigned lambda) {
    if (!sys.is_specialized()) throw ValidationError("rewriting needs a specialized system");
    if (lambda < 2 || lambda > sys.n() + 1) throw DegreeRangeError("rewrite tables exist for 2 <= lambda <= n+1");
    const std::size_t n = sys.n();
    const CoeffMatrix cp = build_cprime(sys.pattern(), lambda, IndexOrder::identity(n));
    const std::size_t N = cp.column_frame.split;
    const std::size_t S = cp.column_frame.square_free_count();
    const auto dense = cp.matrix.to_dense_rational(sys.assignment());
    DenseMatrix<Rational> C(N), B(N);
    for (std::size_t r = 0; r < N; ++r) {
        C[r].assign(dense[r].begin(), dense[r].begin() + static_cast<std::ptrdiff_t>(N));
        B[r].assign(dense[r].begin() + static_cast<std::ptrdiff_t>(N), dense[r].end());
    }
    auto X = solve_fraction_free(C, B);
    if (!X) throw SingularMatrixError("C(lambda) is singular", lambda);

    RewriteTable t;
    t.lambda_ = lambda;
    t.n_ = n;
    for (std::size_t k = 0; k < N; ++k) {
        RationalXPoly tail(n);
        for (std::size_t s = 0; s < S; ++s) tail.add_term(cp.column_frame.columns[N + s], -(*X)[k][s]);
        t.words_.push_back(cp.column_frame.columns[k]);
        t.index_.emplace(cp.column_frame.columns[k], k);
        t.tails_.push_back(std::move(tail));
    }
    return t;
}

/// Square-free representative of a homogeneous f modulo I, using a table of
/// matching degree.
inline RationalXPoly reduce(const RewriteTable& table, const RationalXPoly& f) {
    if (!f.is_homogeneous()) throw ValidationError("reduce needs a homogeneous polynomial");
    if (f.is_zero()) return f;
    if (static_cast<unsigned>(f.degree()) != table.lambda()) throw DegreeRangeError("table degree differs from input degree");
    RationalXPoly out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (m.is_square_free()) out.add_term(m, c);
        else out += table.tail(m).scaled(c);
    }
    return out;
}

inline RationalXPoly reduce(const BinomialSystem& sys, const RationalXPoly& f) {
    if (!f.is_homogeneous()) throw ValidationError("reduce needs a homogeneous polynomial");
    if (f.nvars() && f.nvars() != sys.n()) throw DimensionMismatchError("polynomial and system differ in n");
    if (f.degree() > static_cast<int>(sys.n()) + 1) throw DegreeRangeError("reduce is defined for degrees up to n+1");
    if (f.degree() <= 1) return f;
    return reduce(rewrite_table(sys, static_cast<unsigned>(f.degree())), f);
}

/// det C(lambda) at the system's values, for lambda = 2..n+1 (identity order).
inline std::vector<Rational> specialized_deltas(const BinomialSystem& sys) {
    std::vector<Rational> out;
    const auto chain = delta_chain(sys.pattern(), IndexOrder::identity(sys.n()));
    for (const auto& d : chain.deltas) out.push_back(d.evaluate(sys.assignment()));
    return out;
}

/// Hilbert function of R/I, trailing zeros dropped. When every C(lambda) is
/// invertible the square-free monomials are a basis and h_k = C(n, k);
/// otherwise the values come from direct rank computations in degrees 0..n+1.
inline std::vector<std::size_t> hilbert_function(const BinomialSystem& sys) {
    if (!sys.is_specialized()) throw ValidationError("hilbert_function needs a specialized system");
    const auto deltas = specialized_deltas(sys);
    const bool ci = std::all_of(deltas.begin(), deltas.end(), [](const Rational& d) { return d != 0; });
    std::vector<std::size_t> h;
    if (ci) {
        for (std::size_t k = 0; k <= sys.n(); ++k) h.push_back(binomial(sys.n(), k));
    } else {
        h = oracle_hilbert(sys);
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

}  // namespace binres
