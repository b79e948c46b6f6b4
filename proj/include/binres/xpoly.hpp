#pragma once

// Monomials and polynomials in the ring variables x_1..x_n, with either
// parameter-polynomial (symbolic) or rational (specialized) coefficients.

#include <algorithm>
#include <compare>
#include <concepts>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "binres/arith.hpp"
#include "binres/errors.hpp"

namespace binres {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// dim of R_d for R = K[x_1..x_n]
inline std::size_t dim_homogeneous(std::size_t n, std::size_t d) {
    if (n == 0) return d == 0 ? 1 : 0;
    return binomial(n + d - 1, d);
}

/// Default variable names x1..xn.
inline std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

class XMonomial {
public:
    XMonomial() = default;
    explicit XMonomial(std::size_t n) : e_(n, 0) {}
    explicit XMonomial(std::vector<unsigned> e) : e_(std::move(e)), deg_(std::accumulate(e_.begin(), e_.end(), 0u)) {}

    static XMonomial one(std::size_t n) { return XMonomial(n); }
    /// x_i^e, 0-based i
    static XMonomial var(std::size_t n, std::size_t i, unsigned e = 1) {
        std::vector<unsigned> v(n, 0);
        v.at(i) = e;
        return XMonomial(std::move(v));
    }

    std::size_t nvars() const noexcept { return e_.size(); }
    unsigned degree() const noexcept { return deg_; }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& exponents() const noexcept { return e_; }

    bool is_square_free() const {
        return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x <= 1; });
    }

    friend XMonomial operator*(const XMonomial& x, const XMonomial& y) {
        x.check_same(y);
        std::vector<unsigned> v(x.e_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += y.e_[i];
        return XMonomial(std::move(v));
    }
    bool divides(const XMonomial& o) const {
        check_same(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// Exact quotient *this / d.
    XMonomial operator/(const XMonomial& d) const {
        if (!d.divides(*this)) throw ValidationError("monomial division is not exact");
        std::vector<unsigned> v(e_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= d.e_[i];
        return XMonomial(std::move(v));
    }

    std::string str(const std::vector<std::string>& names) const {
        std::string out;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!out.empty()) out += '*';
            out += names.at(i);
            if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
        }
        return out.empty() ? "1" : out;
    }
    std::string str() const { return str(default_names(nvars())); }

    friend bool operator==(const XMonomial& x, const XMonomial& y) { return x.e_ == y.e_; }
    friend std::strong_ordering operator<=>(const XMonomial& x, const XMonomial& y) { return x.e_ <=> y.e_; }

private:
    void check_same(const XMonomial& o) const {
        if (o.e_.size() != e_.size()) throw DimensionMismatchError("monomials over different variable counts");
    }

    std::vector<unsigned> e_;
    unsigned deg_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const XMonomial& m) { return os << m.str(); }

/// All monomials of degree d in n variables, descending lexicographic order.
inline std::vector<XMonomial> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<XMonomial> out;
    if (n == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    std::vector<unsigned> cur(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned rem) {
        if (i + 1 == n) {
            cur[i] = rem;
            out.emplace_back(cur);
            return;
        }
        for (unsigned e = rem + 1; e-- > 0;) {
            cur[i] = e;
            rec(i + 1, rem - e);
        }
    };
    rec(0, d);
    return out;
}

inline std::vector<XMonomial> square_free_monomials(std::size_t n, unsigned d) {
    std::vector<XMonomial> all = monomials_of_degree(n, d);
    std::vector<XMonomial> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const XMonomial& m) { return m.is_square_free(); });
    return out;
}

template <typename C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
    static bool is_zero(const Rational& c) { return c == 0; }
    static Rational one(std::size_t) { return 1; }
    static Rational zero(std::size_t) { return 0; }
    static bool is_one(const Rational& c) { return c == 1; }
    /// Magnitude text; the sign is reported through `negative`.
    static std::string str(const Rational& c, bool& negative) {
        negative = c < 0;
        return to_string(Rational(abs(c)));
    }
};

template <>
struct CoeffTraits<ParamPoly> {
    static bool is_zero(const ParamPoly& c) { return c.is_zero(); }
    static ParamPoly one(std::size_t np) { return ParamPoly(np, 1); }
    static ParamPoly zero(std::size_t np) { return ParamPoly(np); }
    static bool is_one(const ParamPoly& c) { return c.is_constant(1); }
    static std::string str(const ParamPoly& c, bool& negative) {
        negative = false;
        if (c.size() == 1) {
            const auto& [m, k] = *c.terms().begin();
            negative = k < 0;
            Integer mag = abs(k);
            if (m.is_one()) return mag.get_str();
            return mag == 1 ? m.str() : mag.get_str() + "*" + m.str();
        }
        return "(" + c.str() + ")";
    }
};

/// Polynomial in x_1..x_n with coefficients in C (Rational or ParamPoly).
template <typename C>
class XPoly {
public:
    using Coeff = C;
    using TermMap = std::map<XMonomial, C, std::greater<>>;

    XPoly() = default;
    explicit XPoly(std::size_t n) : n_(n) {}
    XPoly(const XMonomial& m, C c) : n_(m.nvars()) { add_term(m, std::move(c)); }

    static XPoly monomial(const XMonomial& m)
        requires std::same_as<C, Rational>
    {
        return XPoly(m, C(1));
    }
    static XPoly constant(std::size_t n, C c) { return XPoly(XMonomial::one(n), std::move(c)); }

    std::size_t nvars() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    C coefficient(const XMonomial& m) const {
        auto it = terms_.find(m);
        if (it != terms_.end()) return it->second;
        return C{};
    }
    bool has_term(const XMonomial& m) const { return terms_.count(m) != 0; }

    /// Largest total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.degree()));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = terms_.begin()->first.degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
    }

    void add_term(const XMonomial& m, C c) {
        if (CoeffTraits<C>::is_zero(c)) return;
        if (n_ == 0 && terms_.empty()) n_ = m.nvars();
        if (m.nvars() != n_) throw DimensionMismatchError("term over a different variable count");
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (CoeffTraits<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

    XPoly& operator+=(const XPoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    XPoly& operator-=(const XPoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend XPoly operator+(XPoly l, const XPoly& r) { return l += r; }
    friend XPoly operator-(XPoly l, const XPoly& r) { return l -= r; }
    XPoly operator-() const {
        XPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend XPoly operator*(const XPoly& l, const XPoly& r) {
        l.check_same(r);
        XPoly out(std::max(l.n_, r.n_));
        for (const auto& [ml, cl] : l.terms_)
            for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, cl * cr);
        return out;
    }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    XPoly scaled(const C& k) const {
        XPoly out(n_);
        for (const auto& [m, c] : terms_) out.add_term(m, c * k);
        return out;
    }
    XPoly shifted(const XMonomial& by) const {
        XPoly out(n_);
        for (const auto& [m, c] : terms_) out.add_term(m * by, c);
        return out;
    }

    friend bool operator==(const XPoly& x, const XPoly& y) { return x.terms_ == y.terms_; }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool neg = false;
            std::string cs = CoeffTraits<C>::str(c, neg);
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            if (m.degree() == 0) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += m.str(names);
            }
        }
        return out;
    }
    std::string str() const { return str(default_names(n_)); }

private:
    void check_same(const XPoly& o) const {
        if (n_ != 0 && o.n_ != 0 && n_ != o.n_)
            throw DimensionMismatchError("polynomials over different variable counts");
    }

    std::size_t n_ = 0;
    TermMap terms_;
};

using SymbolicXPoly = XPoly<ParamPoly>;
using RationalXPoly = XPoly<Rational>;

template <typename C>
std::ostream& operator<<(std::ostream& os, const XPoly<C>& p) {
    return os << p.str();
}

/// Evaluates every parameter; throws MissingParameterError on gaps.
inline RationalXPoly specialize(const SymbolicXPoly& p, const Assignment& s) {
    RationalXPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) out.add_term(m, c.specialize(s));
    return out;
}

inline Rational specialize(const ParamPoly& p, const Assignment& s) { return p.specialize(s); }

/// Substitutes rational values for the ring variables.
inline Rational evaluate(const RationalXPoly& p, const std::vector<Rational>& point) {
    if (point.size() != p.nvars()) throw DimensionMismatchError("evaluation point has wrong length");
    Rational r = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i]) t *= pow(point[i], m[i]);
        r += t;
    }
    return r;
}

/// p(T x): each x_k replaced by sum_l T[k][l] x_l.
inline RationalXPoly substitute_linear(const RationalXPoly& p, const std::vector<std::vector<Rational>>& T) {
    const std::size_t n = p.nvars();
    std::vector<RationalXPoly> images;
    for (std::size_t k = 0; k < n; ++k) {
        RationalXPoly img(n);
        for (std::size_t l = 0; l < n; ++l) img.add_term(XMonomial::var(n, l), T.at(k).at(l));
        images.push_back(std::move(img));
    }
    RationalXPoly out(n);
    for (const auto& [m, c] : p.terms()) {
        RationalXPoly term = RationalXPoly::constant(n, c);
        for (std::size_t k = 0; k < n; ++k)
            for (unsigned e = 0; e < m[k]; ++e) term *= images[k];
        out += term;
    }
    return out;
}

}  // namespace binres
