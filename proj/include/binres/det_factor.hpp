#pragma once

// Determinants of square matrices with at most two nonzero entries per row,
// returned in factored form. Forced entries (a column or row with a single
// live entry) are peeled off; what remains is a disjoint union of even cycles
// in the row/column graph, each contributing one binomial.

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "binres/coeff_matrix.hpp"
#include "binres/factored.hpp"

namespace binres {

/// Closed alternating path: row rows[k] has one entry in cols[k] and one in
/// cols[k+1] (indices mod length).
struct Circuit {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    std::size_t length() const noexcept { return rows.size(); }
};

struct Decomposition {
    bool singular = false;
    /// Forced (row, column) pairs in peeling order; the heads of maximal chains.
    std::vector<std::pair<std::size_t, std::size_t>> peeled;
    std::vector<Circuit> circuits;
};

namespace detail {

inline void check_two_per_row(const SparseParamMatrix& m) {
    if (!m.is_square()) throw MatrixShapeError("determinant of a non-square matrix");
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m.row(r).size() > 2) throw MatrixShapeError("row " + std::to_string(r) + " has more than two entries");
}

inline const SparseEntry& entry_at(const SparseParamMatrix& m, std::size_t r, std::size_t c) {
    for (const auto& e : m.row(r))
        if (e.col == c) return e;
    throw InternalCheckError("missing matrix entry");
}

/// Parity of a permutation given as an image vector: +1 or -1.
inline int permutation_sign(const std::vector<std::size_t>& image) {
    std::vector<bool> seen(image.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = image[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace detail

inline Decomposition decompose(const SparseParamMatrix& m) {
    detail::check_two_per_row(m);
    const std::size_t n = m.rows();
    Decomposition out;
    std::vector<bool> row_alive(n, true), col_alive(n, true);
    std::vector<std::set<std::size_t>> col_rows(n);
    std::vector<std::size_t> row_deg(n);
    for (std::size_t r = 0; r < n; ++r) {
        row_deg[r] = m.row(r).size();
        for (const auto& e : m.row(r)) col_rows[e.col].insert(r);
    }

    // Worklist peeling. A row or column is queued whenever its live degree
    // may have dropped to 0 or 1.
    std::deque<std::pair<bool, std::size_t>> work;  // (is_row, index)
    for (std::size_t i = 0; i < n; ++i) {
        work.emplace_back(false, i);
        work.emplace_back(true, i);
    }
    auto take = [&](std::size_t r, std::size_t c) {
        out.peeled.emplace_back(r, c);
        row_alive[r] = false;
        col_alive[c] = false;
        for (const auto& e : m.row(r)) {
            col_rows[e.col].erase(r);
            if (col_alive[e.col]) work.emplace_back(false, e.col);
        }
        for (std::size_t r2 : col_rows[c]) {
            --row_deg[r2];
            work.emplace_back(true, r2);
        }
        col_rows[c].clear();
    };
    while (!work.empty()) {
        auto [is_row, i] = work.front();
        work.pop_front();
        if (is_row) {
            if (!row_alive[i]) continue;
            if (row_deg[i] == 0) {
                out.singular = true;
                return out;
            }
            if (row_deg[i] == 1) {
                for (const auto& e : m.row(i))
                    if (col_alive[e.col]) {
                        take(i, e.col);
                        break;
                    }
            }
        } else {
            if (!col_alive[i]) continue;
            if (col_rows[i].empty()) {
                out.singular = true;
                return out;
            }
            if (col_rows[i].size() == 1) take(*col_rows[i].begin(), i);
        }
    }

    // Every live row now has two live entries and every live column at least
    // two, so by counting both are exactly two: a union of even cycles.
    std::vector<bool> visited(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (!row_alive[start] || visited[start]) continue;
        Circuit cyc;
        std::size_t r = start;
        std::size_t c = m.row(r)[0].col;
        do {
            visited[r] = true;
            cyc.rows.push_back(r);
            cyc.cols.push_back(c);
            const auto& es = m.row(r);
            const std::size_t next_c = es[0].col == c ? es[1].col : es[0].col;
            std::size_t next_r = n;
            for (std::size_t r2 : col_rows[next_c])
                if (r2 != r) next_r = r2;
            if (next_r == n) throw InternalCheckError("broken cycle in residual graph");
            r = next_r;
            c = next_c;
        } while (r != start);
        out.circuits.push_back(std::move(cyc));
    }
    return out;
}

inline std::vector<Circuit> circuits_of(const SparseParamMatrix& m) { return decompose(m).circuits; }

/// det(m) as sign * content * monomial * prod binomials. Exact for every
/// matrix accepted (entries may be any signed parameter monomial).
inline FactoredPoly factor_determinant(const SparseParamMatrix& m) {
    const Decomposition d = decompose(m);
    const std::size_t n = m.rows();
    if (d.singular) return FactoredPoly::zero(m.nparams());

    FactoredPoly f(m.nparams());
    std::vector<std::size_t> base(n, n);
    for (auto [r, c] : d.peeled) {
        const auto& e = detail::entry_at(m, r, c);
        base[r] = c;
        f.multiply_monomial(e.value);
        f.multiply_unit(e.sign);
    }
    for (const auto& cyc : d.circuits) {
        const std::size_t L = cyc.length();
        ParamMonomial p0(m.nparams()), p1(m.nparams());
        int s0 = 1, s1 = 1;
        // Matching 0 sends rows[k] -> cols[k]; matching 1 sends rows[k] -> cols[k+1].
        std::vector<std::size_t> local(L);
        for (std::size_t k = 0; k < L; ++k) {
            const auto& e0 = detail::entry_at(m, cyc.rows[k], cyc.cols[k]);
            const auto& e1 = detail::entry_at(m, cyc.rows[k], cyc.cols[(k + 1) % L]);
            p0 *= e0.value;
            p1 *= e1.value;
            s0 *= e0.sign;
            s1 *= e1.sign;
            base[cyc.rows[k]] = cyc.cols[k];
            local[k] = (k + 1) % L;
        }
        // Sign of matching 1 relative to matching 0.
        const int rel = detail::permutation_sign(local);
        const ParamMonomial g = ParamMonomial::gcd(p0, p1);
        f.multiply_monomial(g);
        f.multiply_unit(s0);
        const int c1 = s0 * rel * s1;
        if (p0 == p1) {
            f.multiply_content(Integer(1 + c1));
            if (f.is_zero()) return f;
            continue;
        }
        int unit = 1;
        f.multiply_factor(BinomialFactor::make(p0 / g, 1, p1 / g, c1, unit));
        f.multiply_unit(unit);
    }
    f.multiply_unit(detail::permutation_sign(base));
    return f;
}

/// True when some binomial factor carries an exponent above 1 on a single
/// parameter, i.e. the circuit repeats an index.
inline bool has_repeated_index(const BinomialFactor& b) {
    auto big = [](const ParamMonomial& x) {
        return std::any_of(x.a().begin(), x.a().end(), [](unsigned e) { return e > 1; }) ||
               std::any_of(x.b().begin(), x.b().end(), [](unsigned e) { return e > 1; });
    };
    return big(b.lead) || big(b.trail);
}

}  // namespace binres
