#pragma once

// Delta chains det C(lambda), their radicals and divisibility, and the
// resultant as the gcd of Delta_{n+1} over the n cyclic index orders.

#include <random>
#include <vector>

#include "binres/coeff_matrix.hpp"
#include "binres/det_factor.hpp"
#include "binres/factored.hpp"
#include "binres/parallel.hpp"

namespace binres {

inline FactoredPoly delta(const BinomialSystem& sys, unsigned lambda, const IndexOrder& order) {
    return factor_determinant(build_c(sys, lambda, order).matrix);
}

struct DeltaChain {
    IndexOrder order;
    std::vector<FactoredPoly> deltas;  // lambda = 2 .. n+1

    const FactoredPoly& at(unsigned lambda) const { return deltas.at(lambda - 2); }
};

inline DeltaChain delta_chain(const BinomialSystem& sys, const IndexOrder& order) {
    DeltaChain chain{order, {}};
    for (unsigned lambda = 2; lambda <= sys.n() + 1; ++lambda) chain.deltas.push_back(delta(sys, lambda, order));
    return chain;
}

inline FactoredPoly radical(const FactoredPoly& f) { return f.radical(); }

/// Atom-wise gcd: min exponents on the monomial, min multiplicities on the
/// binomial factors, integer gcd of the contents. Sign is +1.
inline FactoredPoly gcd(const FactoredPoly& x, const FactoredPoly& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    FactoredPoly g(x.nvars());
    g.multiply_monomial(ParamMonomial::gcd(x.monomial(), y.monomial()));
    Integer c;
    mpz_gcd(c.get_mpz_t(), x.content().get_mpz_t(), y.content().get_mpz_t());
    g.multiply_content(c);
    for (const auto& [b, m] : x.factors()) g.multiply_factor(b, std::min(m, y.multiplicity(b)));
    return g;
}

namespace detail {

inline UPolyZp restrict_monomial(const ParamMonomial& m, const std::vector<UPolyZp>& a, const std::vector<UPolyZp>& b) {
    UPolyZp r = UPolyZp::constant(Zp(1));
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.a()[i]) r = r * a[i].pow(m.a()[i]);
        if (m.b()[i]) r = r * b[i].pow(m.b()[i]);
    }
    return r;
}

/// f restricted to the line params = p + t*d.
inline UPolyZp restrict_to_line(const FactoredPoly& f, const std::vector<UPolyZp>& a, const std::vector<UPolyZp>& b) {
    if (f.is_zero()) return {};
    UPolyZp r = UPolyZp::constant(Zp::from_integer(f.content())) * restrict_monomial(f.monomial(), a, b);
    if (f.sign() < 0) r = -r;
    for (const auto& [bf, m] : f.factors()) {
        UPolyZp lead = restrict_monomial(bf.lead, a, b);
        UPolyZp trail = restrict_monomial(bf.trail, a, b);
        r = r * (bf.sign > 0 ? lead + trail : lead - trail).pow(m);
    }
    return r;
}

}  // namespace detail

inline constexpr unsigned kDivisibilityTrials = 40;

/// Whether f divides g. Exact when the atoms of f are atoms of g with enough
/// multiplicity; otherwise decided by restricting both to random lines mod p,
/// which can only err towards "true" (a reported non-division is certain).
inline bool divides(const FactoredPoly& f, const FactoredPoly& g, std::uint64_t seed = 0x5eed) {
    if (g.is_zero()) return true;
    if (f.is_zero()) return false;
    if (f.nvars() != g.nvars()) throw DimensionMismatchError("factored polynomials over different n");
    bool atomwise = f.monomial().divides(g.monomial());
    for (const auto& [b, m] : f.factors()) atomwise = atomwise && g.multiplicity(b) >= m;
    if (atomwise) {
        Integer r;
        mpz_tdiv_r(r.get_mpz_t(), g.content().get_mpz_t(), f.content().get_mpz_t());
        if (r == 0) return true;
    }
    std::mt19937_64 rng(seed);
    const std::size_t n = f.nvars();
    for (unsigned trial = 0; trial < kDivisibilityTrials; ++trial) {
        std::vector<UPolyZp> a, b;
        for (std::size_t i = 0; i < n; ++i) a.push_back(UPolyZp::linear(Zp::random(rng), Zp::random(rng)));
        for (std::size_t i = 0; i < n; ++i) b.push_back(UPolyZp::linear(Zp::random(rng), Zp::random(rng)));
        const UPolyZp pf = detail::restrict_to_line(f, a, b);
        const UPolyZp pg = detail::restrict_to_line(g, a, b);
        if (pf.is_zero()) continue;
        if (!pg.mod(pf).is_zero()) return false;
    }
    return true;
}

struct ResultantComputation {
    FactoredPoly value;
    std::vector<IndexOrder> orders;
    std::vector<FactoredPoly> deltas;  // Delta_{n+1} per order
};

/// Runs the per-order determinants in parallel (BINRES_THREADS caps workers).
inline ResultantComputation resultant_details(const BinomialSystem& sys) {
    if (sys.n() < 1) throw ValidationError("empty system");
    const BinomialSystem pattern = sys.pattern();
    ResultantComputation out;
    out.orders = IndexOrder::all_cyclic(sys.n());
    out.deltas.resize(out.orders.size());
    parallel_for(out.orders.size(),
                 [&](std::size_t k) { out.deltas[k] = delta(pattern, static_cast<unsigned>(sys.n() + 1), out.orders[k]); });
    for (std::size_t k = 0; k < out.deltas.size(); ++k)
        if (out.deltas[k].is_zero())
            throw DegenerateSystemError("Delta_" + std::to_string(sys.n() + 1) + " vanishes for order " +
                                        out.orders[k].str());
    out.value = out.deltas.front();
    for (std::size_t k = 1; k < out.deltas.size(); ++k) out.value = gcd(out.value, out.deltas[k]);
    out.value.set_sign(1);
    return out;
}

/// Normalized so that the leading (pure-a) term has coefficient +1.
inline FactoredPoly resultant(const BinomialSystem& sys) { return resultant_details(sys).value; }

inline Rational resultant_eval(const BinomialSystem& sys) {
    if (!sys.is_specialized()) throw ValidationError("resultant_eval needs a specialized system");
    return resultant(sys).evaluate(sys.assignment());
}

}  // namespace binres
