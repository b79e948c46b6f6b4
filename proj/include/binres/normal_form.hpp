#pragma once

// Bringing an n-dimensional space of quadrics in n variables to the shape
// f_i = x_i^2 + (square-free terms) by a basis change and a linear change of
// variables. Recursion on the trailing variable.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "binres/linalg.hpp"
#include "binres/xpoly.hpp"

namespace binres {

using RationalMatrix = DenseMatrix<Rational>;

inline RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    const std::size_t r = x.size(), k = y.size(), c = k ? y[0].size() : 0;
    RationalMatrix out(r, std::vector<Rational>(c, Rational(0)));
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i].size() != k) throw MatrixShapeError("matrix product of incompatible shapes");
        for (std::size_t l = 0; l < k; ++l) {
            if (x[i][l] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += x[i][l] * y[l][j];
        }
    }
    return out;
}

/// rows of B applied to a list of forms: out_i = sum_j B[i][j] forms[j]
inline std::vector<RationalXPoly> combine_forms(const RationalMatrix& B, const std::vector<RationalXPoly>& forms) {
    std::vector<RationalXPoly> out;
    for (const auto& row : B) {
        if (row.size() != forms.size()) throw MatrixShapeError("basis change has the wrong width");
        RationalXPoly g(forms.empty() ? 0 : forms[0].nvars());
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) g += forms[j].scaled(row[j]);
        out.push_back(std::move(g));
    }
    return out;
}

/// Coefficient vectors of quadrics over the degree-2 monomials.
inline RationalMatrix quadric_coefficients(const std::vector<RationalXPoly>& forms, std::size_t n) {
    const auto monos = monomials_of_degree(n, 2);
    RationalMatrix m;
    for (const auto& f : forms) {
        std::vector<Rational> row;
        for (const auto& mono : monos) row.push_back(f.coefficient(mono));
        m.push_back(std::move(row));
    }
    return m;
}

/// n linearly independent quadrics in n variables with rational coefficients.
class QuadraticSpace {
public:
    QuadraticSpace(std::size_t n, std::vector<RationalXPoly> forms) : n_(n), forms_(std::move(forms)) {
        if (n_ < 1) throw ValidationError("a quadratic space needs n >= 1");
        if (forms_.size() != n_) throw ValidationError("need exactly n forms");
        for (const auto& f : forms_) {
            if (f.is_zero()) throw DependentFormsError("zero form");
            if (f.nvars() != n_) throw DimensionMismatchError("form over the wrong number of variables");
            if (!f.is_homogeneous() || f.degree() != 2) throw ValidationError("forms must be homogeneous quadrics");
        }
        if (rank(quadric_coefficients(forms_, n_)) != n_) throw DependentFormsError("forms are linearly dependent");
    }

    std::size_t n() const noexcept { return n_; }
    const std::vector<RationalXPoly>& forms() const noexcept { return forms_; }

private:
    std::size_t n_;
    std::vector<RationalXPoly> forms_;
};

/// One generic substitution made during the reduction. `kind` is 'xi'
/// (x_i -> x_i + xi_i x_m, i < m) or 'eta' (x_m -> x_m + sum eta_i x_i).
struct SubstitutionRecord {
    std::string kind;
    std::size_t step = 0;  // m, the number of variables at that recursion level
    std::vector<Rational> values;
};

struct NormalFormResult {
    std::vector<RationalXPoly> forms;
    /// x_k -> sum_l T[k][l] x_l, applied to the input forms.
    RationalMatrix change_of_variables;
    /// forms = basis_change * (input forms after the substitution).
    RationalMatrix basis_change;
    std::vector<SubstitutionRecord> substitution_params;
};

/// Supplies `count` nonzero values for the given retry `attempt` (0-based).
using GenericSource = std::function<std::vector<Rational>(std::size_t count, unsigned attempt)>;

/// Uniform in {-B..B} \ {0}, B = n * 2^attempt.
inline GenericSource seeded_source(std::size_t n, std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng, n](std::size_t count, unsigned attempt) {
        const long bound = static_cast<long>(std::max<std::size_t>(n, 1)) << std::min(attempt, 40u);
        std::uniform_int_distribution<long> dist(1, 2 * bound);
        std::vector<Rational> out;
        for (std::size_t i = 0; i < count; ++i) {
            long v = dist(*rng);
            out.emplace_back(v <= bound ? v - bound - 1 : v - bound);
        }
        return out;
    };
}

inline bool is_normal_form(const std::vector<RationalXPoly>& forms) {
    const std::size_t n = forms.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& f = forms[i];
        if (f.nvars() != n || !f.is_homogeneous() || f.degree() != 2) return false;
        for (const auto& [m, c] : f.terms()) {
            if (m.is_square_free()) continue;
            if (m != XMonomial::var(n, i, 2) || c != 1) return false;
        }
        if (!f.has_term(XMonomial::var(n, i, 2))) return false;
    }
    return true;
}

namespace detail {

inline constexpr unsigned kGenericRetryBudget = 48;

/// Terms of f free of x_{m-1}, as a polynomial in the first m-1 variables.
inline RationalXPoly restrict_last(const RationalXPoly& f, std::size_t m) {
    RationalXPoly out(m - 1);
    for (const auto& [mono, c] : f.terms()) {
        if (mono[m - 1]) continue;
        std::vector<unsigned> e(mono.exponents().begin(), mono.exponents().end() - 1);
        out.add_term(XMonomial(std::move(e)), c);
    }
    return out;
}

/// Square coefficient matrix M[i][j] = coefficient of x_j^2 in forms[i].
inline RationalMatrix square_matrix(const std::vector<RationalXPoly>& forms, std::size_t m) {
    RationalMatrix M(forms.size(), std::vector<Rational>(m));
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) M[i][j] = forms[i].coefficient(XMonomial::var(m, j, 2));
    return M;
}

inline RationalMatrix embed(const RationalMatrix& small, std::size_t m) {
    RationalMatrix out = identity_matrix(m);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < small.size(); ++j) out[i][j] = small[i][j];
    return out;
}

struct Progress {
    std::vector<RationalXPoly> forms;  // = B * input(T x)
    RationalMatrix T;
    RationalMatrix B;
    std::vector<SubstitutionRecord> log;

    void substitute(const RationalMatrix& step) {
        for (auto& f : forms) f = substitute_linear(f, step);
        T = T * step;
    }
    void change_basis(const RationalMatrix& step) {
        forms = combine_forms(step, forms);
        B = step * B;
    }
};

inline Progress normalize(const std::vector<RationalXPoly>& input, std::size_t m, const GenericSource& source) {
    Progress p{input, identity_matrix(m), identity_matrix(m), {}};
    if (m == 1) {
        const Rational c = p.forms[0].coefficient(XMonomial::var(1, 0, 2));
        p.change_basis({{Rational(1) / c}});
        return p;
    }

    // Make the restrictions to x_m = 0 span an (m-1)-dimensional space.
    std::optional<std::vector<Rational>> eta;
    for (unsigned attempt = 0;; ++attempt) {
        std::vector<RationalXPoly> restricted;
        for (const auto& f : p.forms) restricted.push_back(restrict_last(f, m));
        if (rank(quadric_coefficients(restricted, m - 1)) >= m - 1) break;
        if (attempt == kGenericRetryBudget) throw RetryBudgetError("no hyperplane section of full rank found");
        eta = source(m - 1, attempt);
        RationalMatrix step = identity_matrix(m);
        for (std::size_t i = 0; i + 1 < m; ++i) step[m - 1][i] = eta->at(i);
        p = Progress{input, identity_matrix(m), identity_matrix(m), {}};
        p.substitute(step);
    }
    if (eta) p.log.push_back({"eta", m, *eta});

    // Put m-1 forms with independent restrictions first.
    {
        EchelonBasis<Rational> basis(dim_homogeneous(m - 1, 2));
        std::vector<std::size_t> chosen, rest;
        for (std::size_t i = 0; i < m; ++i) {
            const auto row = quadric_coefficients({restrict_last(p.forms[i], m)}, m - 1)[0];
            if (chosen.size() + 1 < m && basis.add(row)) chosen.push_back(i);
            else rest.push_back(i);
        }
        chosen.insert(chosen.end(), rest.begin(), rest.end());
        RationalMatrix perm(m, std::vector<Rational>(m, Rational(0)));
        for (std::size_t i = 0; i < m; ++i) perm[i][chosen[i]] = 1;
        p.change_basis(perm);
    }

    // Induction on the first m-1 forms restricted to x_m = 0.
    {
        std::vector<RationalXPoly> restricted;
        for (std::size_t i = 0; i + 1 < m; ++i) restricted.push_back(restrict_last(p.forms[i], m));
        Progress sub = normalize(restricted, m - 1, source);
        p.substitute(embed(sub.T, m));
        p.change_basis(embed(sub.B, m));
        for (auto& r : sub.log) p.log.push_back(std::move(r));
    }

    auto clear_last_row = [&p, m] {
        const RationalMatrix M = square_matrix(p.forms, m);
        RationalMatrix step = identity_matrix(m);
        for (std::size_t j = 0; j + 1 < m; ++j) step[m - 1][j] = -M[m - 1][j];
        p.change_basis(step);
        return square_matrix(p.forms, m)[m - 1][m - 1];
    };

    Rational c = clear_last_row();
    if (c == 0) {
        // f_m is now square-free; x_i -> x_i + xi_i x_m moves f_m(xi, 1) onto x_m^2.
        const std::vector<RationalXPoly> before = p.forms;
        const RationalMatrix T_before = p.T;
        for (unsigned attempt = 0;; ++attempt) {
            if (attempt == kGenericRetryBudget) throw RetryBudgetError("no generic substitution found");
            const auto xi = source(m - 1, attempt);
            RationalMatrix step = identity_matrix(m);
            for (std::size_t i = 0; i + 1 < m; ++i) step[i][m - 1] = xi.at(i);
            p.forms = before;
            p.T = T_before;
            p.substitute(step);
            c = square_matrix(p.forms, m)[m - 1][m - 1];
            if (c != 0) {
                p.log.push_back({"xi", m, xi});
                break;
            }
        }
    }

    // M = [[I, u], [0, c]]  =>  M^{-1} = [[I, -u/c], [0, 1/c]].
    const RationalMatrix M = square_matrix(p.forms, m);
    RationalMatrix inv = identity_matrix(m);
    for (std::size_t i = 0; i + 1 < m; ++i) inv[i][m - 1] = -M[i][m - 1] / c;
    inv[m - 1][m - 1] = Rational(1) / c;
    p.change_basis(inv);
    return p;
}

}  // namespace detail

/// `source` overrides the seeded generic values (used to pin a substitution).
inline NormalFormResult to_normal_form(const QuadraticSpace& V, std::uint64_t seed, GenericSource source = {}) {
    if (!source) source = seeded_source(V.n(), seed);
    auto p = detail::normalize(V.forms(), V.n(), source);
    if (!is_normal_form(p.forms)) throw InternalCheckError("normal form postcondition failed");
    return {std::move(p.forms), std::move(p.T), std::move(p.B), std::move(p.log)};
}

/// B * input(T x) recomputed from scratch.
inline std::vector<RationalXPoly> apply_transformation(const std::vector<RationalXPoly>& input, const RationalMatrix& T,
                                                       const RationalMatrix& B) {
    std::vector<RationalXPoly> sub;
    for (const auto& f : input) sub.push_back(substitute_linear(f, T));
    return combine_forms(B, sub);
}

}  // namespace binres
