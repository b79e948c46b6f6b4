#pragma once

// Arithmetic modulo a fixed 62-bit prime, used by the randomized oracles.

#include <cstdint>
#include <random>
#include <vector>

#include "binres/arith.hpp"

namespace binres {

/// 2^62 - 57
inline constexpr std::uint64_t kOraclePrime = 4611686018427387847ULL;

class Zp {
public:
    constexpr Zp() = default;
    constexpr explicit Zp(std::uint64_t v) : v_(v % kOraclePrime) {}
    static Zp from_signed(std::int64_t v) {
        std::int64_t r = v % static_cast<std::int64_t>(kOraclePrime);
        if (r < 0) r += static_cast<std::int64_t>(kOraclePrime);
        return Zp(static_cast<std::uint64_t>(r));
    }
    static Zp from_integer(const Integer& z) {
        static_assert(sizeof(unsigned long) == 8);
        return raw(mpz_fdiv_ui(z.get_mpz_t(), kOraclePrime));
    }
    /// Throws if the denominator vanishes mod p.
    static Zp from_rational(const Rational& q) {
        Zp den = from_integer(q.get_den());
        if (den.is_zero()) throw ValidationError("denominator is divisible by the oracle prime");
        return from_integer(q.get_num()) * den.inverse();
    }

    constexpr std::uint64_t value() const noexcept { return v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    friend constexpr Zp operator+(Zp x, Zp y) {
        std::uint64_t s = x.v_ + y.v_;
        if (s >= kOraclePrime) s -= kOraclePrime;
        return raw(s);
    }
    friend constexpr Zp operator-(Zp x, Zp y) { return raw(x.v_ >= y.v_ ? x.v_ - y.v_ : x.v_ + kOraclePrime - y.v_); }
    constexpr Zp operator-() const { return raw(v_ == 0 ? 0 : kOraclePrime - v_); }
    friend constexpr Zp operator*(Zp x, Zp y) {
        return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(x.v_) * y.v_ % kOraclePrime));
    }
    Zp& operator+=(Zp o) { return *this = *this + o; }
    Zp& operator-=(Zp o) { return *this = *this - o; }
    Zp& operator*=(Zp o) { return *this = *this * o; }

    constexpr Zp pow(std::uint64_t e) const {
        Zp r = raw(1), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }
    Zp inverse() const {
        if (is_zero()) throw ValidationError("inverse of zero mod p");
        return pow(kOraclePrime - 2);
    }
    friend Zp operator/(Zp x, Zp y) { return x * y.inverse(); }

    friend constexpr bool operator==(Zp, Zp) = default;

    static Zp random(std::mt19937_64& rng) {
        std::uniform_int_distribution<std::uint64_t> dist(0, kOraclePrime - 1);
        return raw(dist(rng));
    }
    static Zp random_nonzero(std::mt19937_64& rng) {
        std::uniform_int_distribution<std::uint64_t> dist(1, kOraclePrime - 1);
        return raw(dist(rng));
    }

private:
    static constexpr Zp raw(std::uint64_t v) {
        Zp z;
        z.v_ = v;
        return z;
    }
    std::uint64_t v_ = 0;
};

/// Residues for a_1..a_n, b_1..b_n.
struct ModAssignment {
    std::vector<Zp> a;
    std::vector<Zp> b;

    Zp at(Param p) const { return p.kind == ParamKind::A ? a.at(p.index) : b.at(p.index); }

    static ModAssignment random(std::size_t n, std::mt19937_64& rng) {
        ModAssignment s;
        for (std::size_t i = 0; i < n; ++i) s.a.push_back(Zp::random(rng));
        for (std::size_t i = 0; i < n; ++i) s.b.push_back(Zp::random(rng));
        return s;
    }
    static ModAssignment from(const Assignment& q, std::size_t n) {
        ModAssignment s;
        for (unsigned i = 0; i < n; ++i) s.a.push_back(Zp::from_rational(q.at(Param::a(i))));
        for (unsigned i = 0; i < n; ++i) s.b.push_back(Zp::from_rational(q.at(Param::b(i))));
        return s;
    }
};

inline Zp evaluate_mod(const ParamMonomial& m, const ModAssignment& s) {
    Zp r(1);
    for (unsigned i = 0; i < m.nvars(); ++i) {
        if (m.a()[i]) r *= s.a.at(i).pow(m.a()[i]);
        if (m.b()[i]) r *= s.b.at(i).pow(m.b()[i]);
    }
    return r;
}

inline Zp evaluate_mod(const ParamPoly& p, const ModAssignment& s) {
    Zp r;
    for (const auto& [m, c] : p.terms()) r += Zp::from_integer(c) * evaluate_mod(m, s);
    return r;
}

/// Dense univariate polynomial over Z/p, lowest degree first, no trailing zeros.
class UPolyZp {
public:
    UPolyZp() = default;
    explicit UPolyZp(std::vector<Zp> c) : c_(std::move(c)) { trim(); }
    static UPolyZp constant(Zp v) { return UPolyZp({v}); }
    /// c0 + c1 t
    static UPolyZp linear(Zp c0, Zp c1) { return UPolyZp({c0, c1}); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Zp>& coeffs() const noexcept { return c_; }

    friend UPolyZp operator+(const UPolyZp& x, const UPolyZp& y) {
        std::vector<Zp> r(std::max(x.c_.size(), y.c_.size()));
        for (std::size_t i = 0; i < x.c_.size(); ++i) r[i] += x.c_[i];
        for (std::size_t i = 0; i < y.c_.size(); ++i) r[i] += y.c_[i];
        return UPolyZp(std::move(r));
    }
    UPolyZp operator-() const {
        UPolyZp r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend UPolyZp operator-(const UPolyZp& x, const UPolyZp& y) { return x + (-y); }
    friend UPolyZp operator*(const UPolyZp& x, const UPolyZp& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<Zp> r(x.c_.size() + y.c_.size() - 1);
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
        return UPolyZp(std::move(r));
    }
    UPolyZp pow(unsigned e) const {
        UPolyZp r = constant(Zp(1)), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return r;
    }
    /// Remainder of division by a nonzero polynomial.
    UPolyZp mod(const UPolyZp& d) const {
        if (d.is_zero()) throw ValidationError("polynomial division by zero");
        std::vector<Zp> r = c_;
        const Zp lead_inv = d.c_.back().inverse();
        const std::size_t dd = d.c_.size() - 1;
        for (std::size_t k = r.size(); k-- > dd;) {
            if (r[k].is_zero()) continue;
            Zp q = r[k] * lead_inv;
            for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= q * d.c_[j];
        }
        r.resize(std::min(r.size(), dd));
        return UPolyZp(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Zp> c_;
};

}  // namespace binres
