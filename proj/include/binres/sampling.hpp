#pragma once

// Seeded generators for random cofactor patterns, specializations and
// sample points.

#include <random>
#include <vector>

#include "binres/coeff_matrix.hpp"
#include "binres/resultant.hpp"

namespace binres {

inline long uniform_nonzero(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> dist(1, 2 * bound);
    const long v = dist(rng);
    return v <= bound ? v - bound - 1 : v - bound;
}

/// Each m_i drawn uniformly from the square-free quadratic monomials.
inline BinomialSystem random_pattern(std::size_t n, std::mt19937_64& rng) {
    if (n < 2) throw ValidationError("random patterns need n >= 2");
    std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(n - 1));
    std::vector<std::pair<unsigned, unsigned>> cof;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned j = pick(rng), k = pick(rng);
        while (k == j) k = pick(rng);
        cof.emplace_back(std::min(j, k), std::max(j, k));
    }
    return BinomialSystem::symbolic(n, cof);
}

/// Nonzero rationals p/q with |p| <= bound, 1 <= q <= bound.
inline Rational random_rational(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> den(1, bound);
    Rational r(uniform_nonzero(rng, bound), den(rng));
    r.canonicalize();
    return r;
}

inline BinomialSystem random_specialization(const BinomialSystem& pattern, std::mt19937_64& rng, long bound = 9) {
    std::vector<Rational> a, b;
    for (std::size_t i = 0; i < pattern.n(); ++i) a.push_back(random_rational(rng, bound));
    for (std::size_t i = 0; i < pattern.n(); ++i) b.push_back(random_rational(rng, bound));
    return pattern.specialized(std::move(a), std::move(b));
}

inline std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng, long bound = 20) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(uniform_nonzero(rng, bound));
    return p;
}

/// A specialization on which one binomial factor of the resultant vanishes,
/// or, if the pattern's factors admit no rational zero of the simple kind
/// tried here, one with a_1 = 0.
inline BinomialSystem degenerate_specialization(const BinomialSystem& pattern, std::mt19937_64& rng, long bound = 9) {
    const std::size_t n = pattern.n();
    const FactoredPoly res = resultant(pattern);
    std::vector<Rational> a, b;
    for (std::size_t i = 0; i < n; ++i) a.push_back(random_rational(rng, bound));
    for (std::size_t i = 0; i < n; ++i) b.push_back(random_rational(rng, bound));
    if (!res.factors().empty()) {
        std::vector<BinomialFactor> fs;
        for (const auto& [f, m] : res.factors()) fs.push_back(f);
        std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
        const BinomialFactor& f = fs[pick(rng)];
        std::vector<Param> params;
        for (unsigned i = 0; i < n; ++i)
            for (Param p : {Param::a(i), Param::b(i)})
                if (f.trail.exponent(p)) params.push_back(p);
        auto slot = [&](std::vector<Rational>& va, std::vector<Rational>& vb, Param p) -> Rational& {
            return (p.kind == ParamKind::A ? va : vb)[p.index];
        };
        // lead + sign * trail = 0: solve for a parameter of exponent 1 in trail.
        const Assignment s0 = Assignment::from_vectors(a, b);
        for (const Param p : params) {
            if (f.trail.exponent(p) != 1) continue;
            const ParamMonomial rest = f.trail / ParamMonomial::of(n, p);
            slot(a, b, p) = -Rational(f.sign) * specialize(f.lead, s0) / specialize(rest, s0);
            return pattern.specialized(std::move(a), std::move(b));
        }
        // All exponents >= 2: unit values, with one sign flip where needed.
        std::vector<Rational> ua(n, Rational(1)), ub(n, Rational(1));
        if (f.sign < 0) return pattern.specialized(std::move(ua), std::move(ub));
        for (const Param p : params)
            if (f.trail.exponent(p) % 2 == 1) {
                slot(ua, ub, p) = -1;
                return pattern.specialized(std::move(ua), std::move(ub));
            }
    }
    a[0] = 0;
    return pattern.specialized(std::move(a), std::move(b));
}

}  // namespace binres
