#pragma once

// Exact scalars and polynomials in the coefficient parameters a_1..a_n, b_1..b_n.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "binres/errors.hpp"

namespace binres {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a reduced rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ValidationError("empty rational literal");
    Rational r;
    const auto ok_chars = std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) || c == '-' || c == '+' || c == '/';
    });
    if (!ok_chars) throw ValidationError("malformed rational literal '" + s + "'");
    if (s.front() == '+') s.erase(s.begin());
    if (r.set_str(s, 10) != 0) throw ValidationError("malformed rational literal '" + s + "'");
    if (r.get_den() == 0) throw ValidationError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

enum class ParamKind : std::uint8_t { A = 0, B = 1 };

/// One coefficient parameter: a_i (square coefficient) or b_i (cofactor coefficient).
/// `index` is 0-based; names are printed 1-based.
struct Param {
    ParamKind kind = ParamKind::A;
    unsigned index = 0;

    static Param a(unsigned i) { return {ParamKind::A, i}; }
    static Param b(unsigned i) { return {ParamKind::B, i}; }

    std::string name() const {
        return (kind == ParamKind::A ? "a" : "b") + std::to_string(index + 1);
    }
    friend auto operator<=>(const Param&, const Param&) = default;
};

/// Monomial a^alpha * b^beta with dense exponent vectors of length n.
/// Ordered lexicographically on the concatenation (alpha, beta).
class ParamMonomial {
public:
    ParamMonomial() = default;
    explicit ParamMonomial(std::size_t n) : a_(n, 0), b_(n, 0) {}
    ParamMonomial(std::vector<unsigned> a, std::vector<unsigned> b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.size() != b_.size()) throw DimensionMismatchError("a/b exponent vectors differ in length");
    }

    static ParamMonomial of(std::size_t n, Param p, unsigned e = 1) {
        ParamMonomial m(n);
        m.exponent(p) = e;
        return m;
    }
    /// a_1 a_2 ... a_n
    static ParamMonomial all_a(std::size_t n) {
        ParamMonomial m(n);
        std::fill(m.a_.begin(), m.a_.end(), 1u);
        return m;
    }

    std::size_t nvars() const noexcept { return a_.size(); }
    const std::vector<unsigned>& a() const noexcept { return a_; }
    const std::vector<unsigned>& b() const noexcept { return b_; }

    unsigned exponent(Param p) const { return p.kind == ParamKind::A ? a_.at(p.index) : b_.at(p.index); }
    unsigned& exponent(Param p) { return p.kind == ParamKind::A ? a_.at(p.index) : b_.at(p.index); }

    unsigned degree() const {
        return std::accumulate(a_.begin(), a_.end(), 0u) + std::accumulate(b_.begin(), b_.end(), 0u);
    }
    bool is_one() const { return degree() == 0; }
    bool a_only() const { return std::all_of(b_.begin(), b_.end(), [](unsigned e) { return e == 0; }); }
    bool b_only() const { return std::all_of(a_.begin(), a_.end(), [](unsigned e) { return e == 0; }); }

    ParamMonomial& operator*=(const ParamMonomial& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) {
            a_[i] += o.a_[i];
            b_[i] += o.b_[i];
        }
        return *this;
    }
    friend ParamMonomial operator*(ParamMonomial l, const ParamMonomial& r) { return l *= r; }

    ParamMonomial pow(unsigned e) const {
        ParamMonomial m = *this;
        for (auto& x : m.a_) x *= e;
        for (auto& x : m.b_) x *= e;
        return m;
    }

    bool divides(const ParamMonomial& o) const {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] > o.a_[i] || b_[i] > o.b_[i]) return false;
        return true;
    }
    /// Exact quotient; throws if `d` does not divide *this.
    ParamMonomial operator/(const ParamMonomial& d) const {
        if (!d.divides(*this)) throw ValidationError("monomial division is not exact");
        ParamMonomial m = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            m.a_[i] -= d.a_[i];
            m.b_[i] -= d.b_[i];
        }
        return m;
    }

    static ParamMonomial gcd(const ParamMonomial& x, const ParamMonomial& y) {
        return combine(x, y, [](unsigned p, unsigned q) { return std::min(p, q); });
    }
    static ParamMonomial lcm(const ParamMonomial& x, const ParamMonomial& y) {
        return combine(x, y, [](unsigned p, unsigned q) { return std::max(p, q); });
    }
    /// Every positive exponent replaced by 1.
    ParamMonomial support() const {
        ParamMonomial m = *this;
        for (auto& x : m.a_) x = x ? 1 : 0;
        for (auto& x : m.b_) x = x ? 1 : 0;
        return m;
    }

    /// "a1^2*b3", or "1" for the constant monomial.
    std::string str() const {
        std::string out;
        auto emit = [&out](char sym, const std::vector<unsigned>& ex) {
            for (std::size_t i = 0; i < ex.size(); ++i) {
                if (ex[i] == 0) continue;
                if (!out.empty()) out += '*';
                out += sym;
                out += std::to_string(i + 1);
                if (ex[i] > 1) out += "^" + std::to_string(ex[i]);
            }
        };
        emit('a', a_);
        emit('b', b_);
        return out.empty() ? "1" : out;
    }

    friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
    friend std::strong_ordering operator<=>(const ParamMonomial& x, const ParamMonomial& y) {
        if (auto c = x.a_ <=> y.a_; c != 0) return c;
        return x.b_ <=> y.b_;
    }

private:
    template <typename Op>
    static ParamMonomial combine(const ParamMonomial& x, const ParamMonomial& y, Op op) {
        x.check_same(y);
        ParamMonomial m(x.nvars());
        for (std::size_t i = 0; i < x.nvars(); ++i) {
            m.a_[i] = op(x.a_[i], y.a_[i]);
            m.b_[i] = op(x.b_[i], y.b_[i]);
        }
        return m;
    }
    void check_same(const ParamMonomial& o) const {
        if (o.a_.size() != a_.size()) throw DimensionMismatchError("parameter monomials over different n");
    }

    std::vector<unsigned> a_;
    std::vector<unsigned> b_;
};

/// Values for (some of) the parameters.
class Assignment {
public:
    Assignment() = default;

    Assignment& set(Param p, Rational v) {
        values_[p] = std::move(v);
        return *this;
    }
    bool has(Param p) const { return values_.count(p) != 0; }
    const Rational& at(Param p) const {
        auto it = values_.find(p);
        if (it == values_.end()) throw MissingParameterError(p.name());
        return it->second;
    }
    const std::map<Param, Rational>& values() const noexcept { return values_; }

    /// a_i := a[i], b_i := b[i]
    static Assignment from_vectors(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Assignment s;
        for (unsigned i = 0; i < a.size(); ++i) s.set(Param::a(i), a[i]);
        for (unsigned i = 0; i < b.size(); ++i) s.set(Param::b(i), b[i]);
        return s;
    }

private:
    std::map<Param, Rational> values_;
};

inline Rational pow(const Rational& x, unsigned e) {
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_num_mpz_t(), x.get_den_mpz_t(), e);
    Rational r = num / den;
    r.canonicalize();
    return r;
}

inline Rational specialize(const ParamMonomial& m, const Assignment& s) {
    Rational r = 1;
    for (unsigned i = 0; i < m.nvars(); ++i) {
        if (m.a()[i]) r *= pow(s.at(Param::a(i)), m.a()[i]);
        if (m.b()[i]) r *= pow(s.at(Param::b(i)), m.b()[i]);
    }
    return r;
}

/// Sparse polynomial in the parameters with integer coefficients.
class ParamPoly {
public:
    /// Terms iterate in descending canonical order (serialization order).
    using TermMap = std::map<ParamMonomial, Integer, std::greater<>>;

    ParamPoly() = default;
    explicit ParamPoly(std::size_t n) : n_(n) {}
    ParamPoly(std::size_t n, long c) : n_(n) {
        if (c != 0) terms_.emplace(ParamMonomial(n), Integer(c));
    }
    ParamPoly(const ParamMonomial& m, Integer c = 1) : n_(m.nvars()) {
        if (c != 0) terms_.emplace(m, std::move(c));
    }
    static ParamPoly param(std::size_t n, Param p) { return ParamPoly(ParamMonomial::of(n, p)); }

    std::size_t nvars() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Integer coefficient(const ParamMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }
    /// True iff the polynomial is the integer constant `c`.
    bool is_constant(long c) const {
        if (c == 0) return is_zero();
        return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == c;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        adopt(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        adopt(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend ParamPoly operator+(ParamPoly l, const ParamPoly& r) { return l += r; }
    friend ParamPoly operator-(ParamPoly l, const ParamPoly& r) { return l -= r; }
    ParamPoly operator-() const {
        ParamPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend ParamPoly operator*(const ParamPoly& l, const ParamPoly& r) {
        ParamPoly out(l.n_ ? l.n_ : r.n_);
        if (l.n_ && r.n_ && l.n_ != r.n_) throw DimensionMismatchError("parameter polynomials over different n");
        for (const auto& [ml, cl] : l.terms_)
            for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, cl * cr);
        return out;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly pow(unsigned e) const {
        ParamPoly result(n_, 1);
        ParamPoly base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    Rational specialize(const Assignment& s) const {
        Rational r = 0;
        for (const auto& [m, c] : terms_) r += Rational(c) * binres::specialize(m, s);
        return r;
    }

    friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }

    /// Canonical text: descending term order, explicit '*' and '^'.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Integer mag = abs(c);
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (m.is_one()) {
                out += mag.get_str();
            } else {
                if (mag != 1) out += mag.get_str() + "*";
                out += m.str();
            }
        }
        return out;
    }

    void add_term(const ParamMonomial& m, const Integer& c) {
        if (c == 0) return;
        if (n_ == 0) n_ = m.nvars();
        if (m.nvars() != n_) throw DimensionMismatchError("parameter monomial over a different n");
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    void adopt(const ParamPoly& o) {
        if (n_ == 0) n_ = o.n_;
        else if (o.n_ != 0 && o.n_ != n_) throw DimensionMismatchError("parameter polynomials over different n");
    }

    std::size_t n_ = 0;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const ParamMonomial& m) { return os << m.str(); }
inline std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

}  // namespace binres
