#pragma once

// Polynomials kept as sign * content * monomial * prod (binomial)^mult.

#include <map>
#include <string>
#include <vector>

#include "binres/arith.hpp"
#include "binres/modular.hpp"

namespace binres {

/// lead + sign * trail with lead > trail in canonical order (so for the
/// coefficient matrices here, lead is the a-part and trail the b-part).
struct BinomialFactor {
    ParamMonomial lead;
    ParamMonomial trail;
    int sign = 1;

    /// Canonicalizes c1*m1 + c2*m2 (c1, c2 = ±1, m1 != m2, coprime) into a
    /// factor and the unit pulled out of it (returned through `unit`).
    static BinomialFactor make(const ParamMonomial& m1, int c1, const ParamMonomial& m2, int c2, int& unit) {
        if (m1 == m2) throw ValidationError("binomial with equal monomials");
        if (m1 > m2) {
            unit = c1;
            return {m1, m2, c1 * c2};
        }
        unit = c2;
        return {m2, m1, c1 * c2};
    }

    unsigned degree() const { return std::max(lead.degree(), trail.degree()); }

    std::string str() const { return "(" + lead.str() + (sign > 0 ? " + " : " - ") + trail.str() + ")"; }

    ParamPoly expand() const {
        ParamPoly p(lead);
        p.add_term(trail, Integer(sign));
        return p;
    }

    friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
    friend auto operator<=>(const BinomialFactor& x, const BinomialFactor& y) {
        if (auto c = x.lead <=> y.lead; c != 0) return c;
        if (auto c = x.trail <=> y.trail; c != 0) return c;
        return x.sign <=> y.sign;
    }
};

class FactoredPoly {
public:
    using FactorMap = std::map<BinomialFactor, unsigned>;

    FactoredPoly() = default;
    explicit FactoredPoly(std::size_t n) : monomial_(n) {}
    static FactoredPoly zero(std::size_t n) {
        FactoredPoly f(n);
        f.zero_ = true;
        return f;
    }
    static FactoredPoly from_monomial(const ParamMonomial& m, int sign = 1) {
        FactoredPoly f(m.nvars());
        f.monomial_ = m;
        f.sign_ = sign;
        return f;
    }

    std::size_t nvars() const noexcept { return monomial_.nvars(); }
    bool is_zero() const noexcept { return zero_; }
    int sign() const noexcept { return sign_; }
    const Integer& content() const noexcept { return content_; }
    const ParamMonomial& monomial() const noexcept { return monomial_; }
    const FactorMap& factors() const noexcept { return factors_; }

    unsigned multiplicity(const BinomialFactor& b) const {
        auto it = factors_.find(b);
        return it == factors_.end() ? 0 : it->second;
    }

    void set_sign(int s) { sign_ = s < 0 ? -1 : 1; }
    void multiply_unit(int u) { sign_ *= u < 0 ? -1 : 1; }
    void multiply_content(const Integer& c) {
        if (c == 0) {
            zero_ = true;
            return;
        }
        if (c < 0) sign_ = -sign_;
        content_ *= abs(c);
    }
    void multiply_monomial(const ParamMonomial& m) { monomial_ *= m; }
    void multiply_factor(const BinomialFactor& b, unsigned mult = 1) {
        if (mult) factors_[b] += mult;
    }

    FactoredPoly& operator*=(const FactoredPoly& o) {
        if (o.zero_) zero_ = true;
        sign_ *= o.sign_;
        content_ *= o.content_;
        monomial_ *= o.monomial_;
        for (const auto& [b, m] : o.factors_) factors_[b] += m;
        return *this;
    }
    friend FactoredPoly operator*(FactoredPoly l, const FactoredPoly& r) { return l *= r; }

    /// Total degree in the parameters.
    unsigned degree() const {
        unsigned d = monomial_.degree();
        for (const auto& [b, m] : factors_) d += m * b.degree();
        return d;
    }

    /// All multiplicities and exponents clamped to 1; sign and content dropped.
    FactoredPoly radical() const {
        if (zero_) return *this;
        FactoredPoly r(nvars());
        r.monomial_ = monomial_.support();
        for (const auto& [b, m] : factors_) r.factors_[b] = 1;
        return r;
    }

    ParamPoly expand() const {
        if (zero_) return ParamPoly(nvars());
        ParamPoly p(monomial_, content_ * sign_);
        for (const auto& [b, m] : factors_) p *= b.expand().pow(m);
        return p;
    }

    Rational evaluate(const Assignment& s) const {
        if (zero_) return 0;
        Rational r = Rational(content_) * sign_ * specialize(monomial_, s);
        for (const auto& [b, m] : factors_) {
            Rational v = specialize(b.lead, s) + Rational(b.sign) * specialize(b.trail, s);
            r *= pow(v, m);
        }
        return r;
    }

    Zp evaluate_mod(const ModAssignment& s) const {
        if (zero_) return Zp(0);
        Zp r = Zp::from_integer(content_) * binres::evaluate_mod(monomial_, s);
        if (sign_ < 0) r = -r;
        for (const auto& [b, m] : factors_) {
            Zp v = binres::evaluate_mod(b.lead, s);
            Zp t = binres::evaluate_mod(b.trail, s);
            v = b.sign > 0 ? v + t : v - t;
            r *= v.pow(m);
        }
        return r;
    }

    /// `[-]content * monomial * (lead ± trail)^mult * ...`, canonical order.
    std::string str() const {
        if (zero_) return "0";
        std::vector<std::string> parts;
        if (content_ != 1) parts.push_back(content_.get_str());
        if (!monomial_.is_one()) parts.push_back(monomial_.str());
        for (const auto& [b, m] : factors_) parts.push_back(b.str() + (m > 1 ? "^" + std::to_string(m) : ""));
        std::string out = sign_ < 0 ? "-" : "";
        if (parts.empty()) return out + "1";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += " * ";
            out += parts[i];
        }
        return out;
    }

    friend bool operator==(const FactoredPoly& x, const FactoredPoly& y) {
        if (x.zero_ || y.zero_) return x.zero_ == y.zero_;
        return x.sign_ == y.sign_ && x.content_ == y.content_ && x.monomial_ == y.monomial_ &&
               x.factors_ == y.factors_;
    }

private:
    bool zero_ = false;
    int sign_ = 1;
    Integer content_ = 1;
    ParamMonomial monomial_;
    FactorMap factors_;
};

}  // namespace binres
