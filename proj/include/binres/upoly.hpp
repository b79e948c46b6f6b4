#pragma once

// Dense univariate polynomials over Q, used as a coefficient ring for the
// one-parameter Hessian families.

#include <string>
#include <vector>

#include "binres/arith.hpp"
#include "binres/linalg.hpp"
#include "binres/xpoly.hpp"

namespace binres {

/// c[0] + c[1] t + ..., no trailing zeros.
class UPolyQ {
public:
    UPolyQ() = default;
    UPolyQ(int c) : UPolyQ(Rational(c)) {}
    UPolyQ(const Rational& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit UPolyQ(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static UPolyQ t() { return UPolyQ(std::vector<Rational>{0, 1}); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    /// Index of the lowest nonzero coefficient (t-adic valuation); -1 for zero.
    int valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k);
        return -1;
    }

    UPolyQ& operator+=(const UPolyQ& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPolyQ& operator-=(const UPolyQ& o) { return *this += -o; }
    friend UPolyQ operator+(UPolyQ x, const UPolyQ& y) { return x += y; }
    friend UPolyQ operator-(UPolyQ x, const UPolyQ& y) { return x -= y; }
    UPolyQ operator-() const {
        UPolyQ r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend UPolyQ operator*(const UPolyQ& x, const UPolyQ& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<Rational> r(x.c_.size() + y.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
        return UPolyQ(std::move(r));
    }
    UPolyQ& operator*=(const UPolyQ& o) { return *this = *this * o; }

    /// Quotient and remainder by a nonzero divisor.
    static std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& x, const UPolyQ& d) {
        if (d.is_zero()) throw ValidationError("polynomial division by zero");
        std::vector<Rational> r = x.c_;
        if (r.size() < d.c_.size()) return {UPolyQ(), x};
        std::vector<Rational> q(r.size() - d.c_.size() + 1, Rational(0));
        const std::size_t dd = d.c_.size() - 1;
        for (std::size_t k = r.size(); k-- > dd;) {
            if (r[k] == 0) continue;
            const Rational f = r[k] / d.c_.back();
            q[k - dd] = f;
            for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
        }
        r.resize(dd);
        return {UPolyQ(std::move(q)), UPolyQ(std::move(r))};
    }

    Rational evaluate(const Rational& t0) const {
        Rational r = 0;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * t0 + c_[k];
        return r;
    }

    friend bool operator==(const UPolyQ& x, const UPolyQ& y) { return x.c_ == y.c_; }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            const bool neg = c_[k] < 0;
            if (!out.empty()) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            const Rational mag = abs(c_[k]);
            if (k == 0) out += to_string(mag);
            else {
                if (mag != 1) out += to_string(mag) + "*";
                out += k == 1 ? "t" : "t^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

template <>
struct CoeffTraits<UPolyQ> {
    static bool is_zero(const UPolyQ& c) { return c.is_zero(); }
    static UPolyQ one(std::size_t) { return UPolyQ(1); }
    static UPolyQ zero(std::size_t) { return UPolyQ(); }
    static bool is_one(const UPolyQ& c) { return c == UPolyQ(1); }
    static std::string str(const UPolyQ& c, bool& negative) {
        negative = false;
        return "(" + c.str() + ")";
    }
};

template <>
struct DomainOps<UPolyQ> {
    static bool is_zero(const UPolyQ& x) { return x.is_zero(); }
    static UPolyQ exact_div(const UPolyQ& x, const UPolyQ& y) {
        auto [q, r] = UPolyQ::divmod(x, y);
        if (!r.is_zero()) throw InternalCheckError("inexact polynomial division in fraction-free elimination");
        return q;
    }
};

}  // namespace binres
