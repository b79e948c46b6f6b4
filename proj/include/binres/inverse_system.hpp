#pragma once

// Macaulay duality by differentiation: the two quintic dual generators F and
// G in v, w, x, y, z, their catalecticant Hilbert functions, annihilator
// generator counts, and second Hessians.

#include <array>
#include <map>
#include <vector>

#include "binres/linalg.hpp"
#include "binres/upoly.hpp"
#include "binres/xpoly.hpp"

namespace binres {

inline const std::vector<std::string>& dual_variable_names() {
    static const std::vector<std::string> names = {"v", "w", "x", "y", "z"};
    return names;
}

enum class DualKind { F, G };

struct DualForm {
    RationalXPoly poly;
    unsigned d = 0;

    DualForm() = default;
    explicit DualForm(RationalXPoly p) : poly(std::move(p)) {
        if (poly.is_zero()) throw ValidationError("dual generator must be nonzero");
        if (!poly.is_homogeneous()) throw ValidationError("dual generator must be homogeneous");
        d = static_cast<unsigned>(poly.degree());
    }
    std::size_t n() const noexcept { return poly.nvars(); }
};

namespace detail {

/// The displayed quintic with coefficients built in ring C from p1..p5.
template <typename C>
XPoly<C> dual_quintic(DualKind which, const std::array<C, 5>& p) {
    const auto& [p1, p2, p3, p4, p5] = p;
    XPoly<C> out(5);
    auto add = [&out](long k, const C& coeff, std::array<unsigned, 5> e) {
        out.add_term(XMonomial(std::vector<unsigned>(e.begin(), e.end())), C(Rational(k)) * coeff);
    };
    const C one(Rational(1));
    if (which == DualKind::F) {
        add(12, one, {1, 1, 1, 1, 1});
        // t1
        add(-2, p1, {3, 0, 0, 1, 1});
        add(-2, p2, {1, 3, 0, 0, 1});
        add(-2, p3, {1, 1, 3, 0, 0});
        add(-2, p4, {0, 1, 1, 3, 0});
        add(-2, p5, {0, 0, 1, 1, 3});
        // t2
        add(1, p1 * p3, {3, 0, 2, 0, 0});
        add(1, p2 * p4, {0, 3, 0, 2, 0});
        add(1, p3 * p5, {0, 0, 3, 0, 2});
        add(1, p1 * p4, {2, 0, 0, 3, 0});
        add(1, p2 * p5, {0, 2, 0, 0, 3});
        return out;
    }
    add(120, one, {1, 1, 1, 1, 1});
    // s1
    add(-1, p1 * p1 * p1 * p3 * p4, {5, 0, 0, 0, 0});
    add(-1, p2 * p2 * p2 * p4 * p5, {0, 5, 0, 0, 0});
    add(-1, p1 * p3 * p3 * p3 * p5, {0, 0, 5, 0, 0});
    add(-1, p1 * p2 * p4 * p4 * p4, {0, 0, 0, 5, 0});
    add(-1, p2 * p3 * p5 * p5 * p5, {0, 0, 0, 0, 5});
    // s2
    add(-20, p1, {3, 1, 0, 0, 1});
    add(-20, p2, {1, 3, 1, 0, 0});
    add(-20, p3, {0, 1, 3, 1, 0});
    add(-20, p4, {0, 0, 1, 3, 1});
    add(-20, p5, {1, 0, 0, 1, 3});
    // s3
    add(20, p1 * p1 * p3 * p4, {3, 0, 1, 1, 0});
    add(20, p2 * p2 * p4 * p5, {0, 3, 0, 1, 1});
    add(20, p1 * p3 * p3 * p5, {1, 0, 3, 0, 1});
    add(20, p1 * p2 * p4 * p4, {1, 1, 0, 3, 0});
    add(20, p2 * p3 * p5 * p5, {0, 1, 1, 0, 3});
    // s4
    add(30, p1 * p3, {2, 1, 2, 0, 0});
    add(30, p2 * p4, {0, 2, 1, 2, 0});
    add(30, p3 * p5, {0, 0, 2, 1, 2});
    add(30, p1 * p4, {2, 0, 0, 2, 1});
    add(30, p2 * p5, {1, 2, 0, 0, 2});
    // s5
    add(-30, p1 * p2 * p4, {2, 2, 0, 1, 0});
    add(-30, p2 * p3 * p5, {0, 2, 2, 0, 1});
    add(-30, p1 * p3 * p4, {1, 0, 2, 2, 0});
    add(-30, p2 * p4 * p5, {0, 1, 0, 2, 2});
    add(-30, p1 * p3 * p5, {2, 0, 1, 0, 2});
    return out;
}

inline Integer falling_factorial(unsigned n, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= n - i;
    return r;
}

}  // namespace detail

inline DualForm builtin_dual(DualKind which, const std::vector<Rational>& p) {
    if (p.size() != 5) throw ValidationError("the dual generators take exactly five values p1..p5");
    return DualForm(detail::dual_quintic<Rational>(which, {p[0], p[1], p[2], p[3], p[4]}));
}

/// Quadrics annihilating the chosen generator: x_i^2 + p_i * (cofactor).
inline std::vector<RationalXPoly> builtin_generators(DualKind which, const std::vector<Rational>& p) {
    if (p.size() != 5) throw ValidationError("the dual generators take exactly five values p1..p5");
    // cofactor of x_i^2 is x_{i+a} x_{i+b} (indices mod 5)
    const unsigned a = which == DualKind::F ? 1 : 2;
    const unsigned b = which == DualKind::F ? 2 : 3;
    std::vector<RationalXPoly> out;
    for (unsigned i = 0; i < 5; ++i) {
        RationalXPoly f(5);
        f.add_term(XMonomial::var(5, i, 2), Rational(1));
        f.add_term(XMonomial::var(5, (i + a) % 5) * XMonomial::var(5, (i + b) % 5), p[i]);
        out.push_back(std::move(f));
    }
    return out;
}

/// op(d/dx_1, ..., d/dx_n) applied to F.
template <typename C>
XPoly<C> apply_diff(const RationalXPoly& op, const XPoly<C>& F) {
    if (op.nvars() && F.nvars() && op.nvars() != F.nvars())
        throw DimensionMismatchError("operator and form differ in variable count");
    XPoly<C> out(F.nvars());
    for (const auto& [u, c] : op.terms())
        for (const auto& [m, k] : F.terms()) {
            if (!u.divides(m)) continue;
            Integer ff = 1;
            for (std::size_t i = 0; i < m.nvars(); ++i) ff *= detail::falling_factorial(m[i], u[i]);
            out.add_term(m / u, k * C(c * Rational(ff)));
        }
    return out;
}

inline RationalXPoly apply_diff(const RationalXPoly& op, const DualForm& F) { return apply_diff(op, F.poly); }

namespace detail {

/// Row u (deg k) holds the coefficients of d_u F over R_{d-k}.
inline DenseMatrix<Rational> catalecticant(const DualForm& F, unsigned k) {
    const auto rows = monomials_of_degree(F.n(), k);
    const auto cols = monomials_of_degree(F.n(), F.d - k);
    DenseMatrix<Rational> m;
    for (const auto& u : rows) {
        const RationalXPoly du = apply_diff(RationalXPoly::monomial(u), F.poly);
        std::vector<Rational> row;
        for (const auto& v : cols) row.push_back(du.coefficient(v));
        m.push_back(std::move(row));
    }
    return m;
}

inline DenseMatrix<Rational> transpose(const DenseMatrix<Rational>& m) {
    if (m.empty()) return {};
    DenseMatrix<Rational> t(m[0].size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace detail

/// (h_0, ..., h_d), h_k = rank of the catalecticant R_k -> R_{d-k}.
inline std::vector<std::size_t> catalecticant_hilbert(const DualForm& F) {
    std::vector<std::size_t> h;
    for (unsigned k = 0; k <= F.d; ++k) h.push_back(rank(detail::catalecticant(F, k)));
    return h;
}

/// Basis of Ann(F)_k as polynomials.
inline std::vector<RationalXPoly> annihilator_basis(const DualForm& F, unsigned k) {
    const auto monos = monomials_of_degree(F.n(), k);
    std::vector<std::vector<Rational>> kern;
    if (k > F.d) {
        for (std::size_t j = 0; j < monos.size(); ++j) {
            std::vector<Rational> e(monos.size(), Rational(0));
            e[j] = 1;
            kern.push_back(std::move(e));
        }
    } else {
        kern = kernel(detail::transpose(detail::catalecticant(F, k)), monos.size());
    }
    std::vector<RationalXPoly> out;
    for (const auto& v : kern) {
        RationalXPoly p(F.n());
        for (std::size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], v[j]);
        out.push_back(std::move(p));
    }
    return out;
}

/// Entry k-1 is the number of minimal generators of Ann(F) in degree k, for
/// k = 1..d+1: dim Ann_k - dim(R_1 * Ann_{k-1}).
inline std::vector<std::size_t> ann_generator_counts(const DualForm& F) {
    const std::size_t n = F.n();
    std::vector<std::size_t> counts;
    std::vector<RationalXPoly> prev;  // Ann_0 = 0 for nonzero F
    for (unsigned k = 1; k <= F.d + 1; ++k) {
        const auto monos = monomials_of_degree(n, k);
        std::map<XMonomial, std::size_t> index;
        for (std::size_t j = 0; j < monos.size(); ++j) index.emplace(monos[j], j);
        EchelonBasis<Rational> span(monos.size());
        for (const auto& g : prev)
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Rational> v(monos.size(), Rational(0));
                for (const auto& [m, c] : g.terms()) v[index.at(m * XMonomial::var(n, i))] = c;
                span.add(std::move(v));
            }
        auto ann = annihilator_basis(F, k);
        counts.push_back(ann.size() - span.rank());
        prev = std::move(ann);
    }
    return counts;
}

/// k-th Hessian: entries d_u d_v F for u, v in the basis (square-free
/// degree-k monomials unless `all_monomials`).
template <typename C>
struct HessianMatrix {
    unsigned k = 0;
    std::vector<XMonomial> basis;
    std::vector<std::vector<XPoly<C>>> entries;
};

template <typename C>
HessianMatrix<C> hessian(const XPoly<C>& F, unsigned k, bool all_monomials = false) {
    if (!F.is_homogeneous() || F.is_zero()) throw ValidationError("Hessian of a zero or inhomogeneous form");
    if (2 * k > static_cast<unsigned>(F.degree())) throw DegreeRangeError("Hessian order exceeds half the degree");
    HessianMatrix<C> h;
    h.k = k;
    h.basis = all_monomials ? monomials_of_degree(F.nvars(), k) : square_free_monomials(F.nvars(), k);
    for (const auto& u : h.basis) {
        std::vector<XPoly<C>> row;
        for (const auto& v : h.basis) row.push_back(apply_diff(RationalXPoly::monomial(u * v), F));
        h.entries.push_back(std::move(row));
    }
    return h;
}

inline HessianMatrix<Rational> hessian(const DualForm& F, unsigned k) { return hessian(F.poly, k); }

template <typename C>
C evaluate_at(const XPoly<C>& p, const std::vector<Rational>& point) {
    if (point.size() != p.nvars()) throw DimensionMismatchError("evaluation point has wrong length");
    C r{};
    for (const auto& [m, c] : p.terms()) {
        Rational t = 1;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i]) t *= pow(point[i], m[i]);
        r += c * C(t);
    }
    return r;
}

/// det of the k-th Hessian at a point, exactly.
inline Rational hess_det_eval(const DualForm& F, unsigned k, const std::vector<Rational>& point) {
    const auto h = hessian(F, k);
    DenseMatrix<Rational> m;
    for (const auto& row : h.entries) {
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(evaluate_at(e, point));
        m.push_back(std::move(r));
    }
    return determinant(std::move(m));
}

/// hess^2 of the chosen generator along p5 = -(1+t)/(p1 p2 p3 p4), evaluated
/// at `point`, as a polynomial in t. On this line 1 + p1 p2 p3 p4 p5 = -t.
inline UPolyQ hess2_along_line(DualKind which, const std::array<Rational, 4>& p, const std::vector<Rational>& point) {
    const Rational P = p[0] * p[1] * p[2] * p[3];
    if (P == 0) throw ValidationError("p1..p4 must be nonzero");
    const UPolyQ p5(std::vector<Rational>{-1 / P, -1 / P});
    const auto G = detail::dual_quintic<UPolyQ>(which, {UPolyQ(p[0]), UPolyQ(p[1]), UPolyQ(p[2]), UPolyQ(p[3]), p5});
    const auto h = hessian(G, 2);
    DenseMatrix<UPolyQ> m;
    for (const auto& row : h.entries) {
        std::vector<UPolyQ> r;
        for (const auto& e : row) r.push_back(evaluate_at(e, point));
        m.push_back(std::move(r));
    }
    return bareiss_determinant(std::move(m));
}

/// Order of vanishing at t = 0 of hess2_along_line.
inline unsigned hess2_vanishing_order(DualKind which, const std::array<Rational, 4>& p, const std::vector<Rational>& point) {
    const UPolyQ h = hess2_along_line(which, p, point);
    if (h.is_zero()) throw DegenerateSampleError("hess^2 vanishes identically along the sampled line; resample");
    return static_cast<unsigned>(h.valuation());
}

}  // namespace binres
