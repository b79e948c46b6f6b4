#pragma once

// Monomial sets M_j(lambda) under a variable order, and the row/column index
// frames of the coefficient matrices built from them.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "binres/errors.hpp"
#include "binres/xpoly.hpp"

namespace binres {

/// A permutation sigma of {0..n-1}, presented as the image list 1',...,n'
/// (stored 0-based). Position j of the order holds the variable j'.
class IndexOrder {
public:
    IndexOrder() = default;
    explicit IndexOrder(std::vector<unsigned> image) : image_(std::move(image)) {
        std::vector<unsigned> sorted = image_;
        std::sort(sorted.begin(), sorted.end());
        for (unsigned i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i) throw ValidationError("index order is not a permutation");
    }

    static IndexOrder identity(std::size_t n) {
        std::vector<unsigned> v(n);
        std::iota(v.begin(), v.end(), 0u);
        return IndexOrder(std::move(v));
    }
    /// The cycle 1 -> k, 2 -> k+1, ...; `k` is 1-based, k = 1 is the identity.
    static IndexOrder cyclic(std::size_t n, unsigned k) {
        if (k < 1 || k > n) throw ValidationError("cyclic shift must be in 1..n");
        std::vector<unsigned> v(n);
        for (unsigned i = 0; i < n; ++i) v[i] = static_cast<unsigned>((k - 1 + i) % n);
        return IndexOrder(std::move(v));
    }
    /// All n cyclic orders, k = 1..n.
    static std::vector<IndexOrder> all_cyclic(std::size_t n) {
        std::vector<IndexOrder> out;
        for (unsigned k = 1; k <= n; ++k) out.push_back(cyclic(n, k));
        return out;
    }

    std::size_t size() const noexcept { return image_.size(); }
    /// Variable occupying position j (0-based).
    unsigned operator[](std::size_t j) const { return image_.at(j); }
    const std::vector<unsigned>& image() const noexcept { return image_; }

    /// "2,3,1" (1-based)
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < image_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(image_[i] + 1);
        }
        return out;
    }

    friend bool operator==(const IndexOrder&, const IndexOrder&) = default;

private:
    std::vector<unsigned> image_;
};

/// M_1(lambda) ⊇ ... ⊇ M_n(lambda) for one order. Set j holds the degree-lambda
/// monomials whose exponents at the first j order positions are all < 2.
struct MonomialFrame {
    std::size_t n = 0;
    unsigned lambda = 0;
    IndexOrder order;
    std::vector<std::vector<XMonomial>> sets;
};

inline MonomialFrame build_frame(std::size_t n, unsigned lambda, const IndexOrder& order) {
    if (n < 1) throw ValidationError("frames need n >= 1");
    if (order.size() != n) throw DimensionMismatchError("order length differs from n");
    MonomialFrame f{n, lambda, order, {}};
    const auto all = monomials_of_degree(n, lambda);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<XMonomial> set;
        for (const auto& m : all) {
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i) ok = m[order[i]] < 2;
            if (ok) set.push_back(m);
        }
        f.sets.push_back(std::move(set));
    }
    return f;
}

struct RowLabel {
    XMonomial multiplier;
    unsigned generator;  // 0-based index of f_{j'}

    friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

/// Rows m ⊗ e_{j'} for m in M_j(lambda - 2), grouped by order position j.
struct RowFrame {
    std::size_t n = 0;
    unsigned lambda = 0;
    IndexOrder order;
    std::vector<RowLabel> rows;
};

inline RowFrame build_row_frame(std::size_t n, unsigned lambda, const IndexOrder& order) {
    if (lambda < 2) throw ValidationError("row frames need lambda >= 2");
    const MonomialFrame f = build_frame(n, lambda - 2, order);
    RowFrame rf{n, lambda, order, {}};
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& m : f.sets[j]) rf.rows.push_back({m, order[j]});
    return rf;
}

/// Degree-lambda monomials: first the images m * x_{j'}^2 of the rows (same
/// order), then every square-free monomial.
struct ColumnFrame {
    std::vector<XMonomial> columns;
    std::size_t split = 0;  // number of non-square-free columns (= row count N)

    std::size_t square_free_count() const noexcept { return columns.size() - split; }
};

inline ColumnFrame build_column_frame(const RowFrame& rf) {
    ColumnFrame cf;
    for (const auto& r : rf.rows) cf.columns.push_back(r.multiplier * XMonomial::var(rf.n, r.generator, 2));
    cf.split = cf.columns.size();
    for (auto& m : square_free_monomials(rf.n, rf.lambda)) cf.columns.push_back(std::move(m));
    return cf;
}

/// Column index lookup.
inline std::map<XMonomial, std::size_t> column_index(const ColumnFrame& cf) {
    std::map<XMonomial, std::size_t> idx;
    for (std::size_t i = 0; i < cf.columns.size(); ++i) idx.emplace(cf.columns[i], i);
    return idx;
}

}  // namespace binres
