#pragma once

// Quick oracle sweep behind `binres selftest`: every engine result is checked
// against an independent computation on seeded random inputs.

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "binres/det_factor.hpp"
#include "binres/inverse_system.hpp"
#include "binres/oracle.hpp"
#include "binres/resultant.hpp"
#include "binres/rewrite.hpp"
#include "binres/sampling.hpp"

namespace binres {

struct SelftestRow {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline SelftestRow run_check(const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        const bool ok = detail.rfind("FAIL", 0) != 0;
        return {name, ok, ok ? detail : detail.substr(5)};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

}  // namespace detail

inline std::vector<SelftestRow> run_selftest(std::uint64_t seed, std::size_t n_max) {
    if (n_max < 2 || n_max > 6) throw ValidationError("--n-max must be in 2..6");
    std::vector<SelftestRow> rows;
    std::mt19937_64 rng(seed);
    std::vector<BinomialSystem> patterns;
    for (std::size_t n = 2; n <= n_max; ++n)
        for (int k = 0; k < 3; ++k) patterns.push_back(random_pattern(n, rng));

    rows.push_back(detail::run_check("occupancy", [&]() -> std::string {
        std::size_t count = 0;
        for (const auto& sys : patterns)
            for (const auto& order : IndexOrder::all_cyclic(sys.n()))
                for (unsigned l = 2; l <= sys.n() + 1; ++l)
                    for (const auto& cm : {build_cprime(sys, l, order), build_c(sys, l, order)}) {
                        if (auto msg = check_occupancy(cm); !msg.empty()) return "FAIL " + msg;
                        ++count;
                    }
        return std::to_string(count) + " matrices";
    }));

    rows.push_back(detail::run_check("det-factor vs det_mod", [&]() -> std::string {
        std::size_t count = 0;
        for (const auto& sys : patterns)
            for (const auto& order : IndexOrder::all_cyclic(sys.n()))
                for (unsigned l = 2; l <= sys.n() + 1; ++l) {
                    const auto cm = build_c(sys, l, order);
                    const auto f = factor_determinant(cm.matrix);
                    for (int t = 0; t < 5; ++t) {
                        const auto ctx = ModularContext::random(sys.n(), rng());
                        if (f.evaluate_mod(ctx.assignment) != det_mod(cm, ctx))
                            return "FAIL mismatch at lambda " + std::to_string(l) + ", order " + order.str();
                        ++count;
                    }
                }
        return std::to_string(count) + " evaluations";
    }));

    rows.push_back(detail::run_check("degree law", [&]() -> std::string {
        for (const auto& sys : patterns) {
            const unsigned want = static_cast<unsigned>(sys.n() << (sys.n() - 1));
            const auto r = resultant(sys);
            if (r.degree() != want) return "FAIL degree " + std::to_string(r.degree()) + ", expected " + std::to_string(want);
        }
        return std::to_string(patterns.size()) + " patterns";
    }));

    rows.push_back(detail::run_check("Delta_2 = a1...an", [&]() -> std::string {
        for (const auto& sys : patterns)
            for (const auto& order : IndexOrder::all_cyclic(sys.n()))
                if (!(delta(sys, 2, order) == FactoredPoly::from_monomial(ParamMonomial::all_a(sys.n()))))
                    return "FAIL order " + order.str();
        return "ok";
    }));

    rows.push_back(detail::run_check("Sylvester n=2", [&]() -> std::string {
        const auto sys = BinomialSystem::symbolic(2, {{0, 1}, {0, 1}});
        const auto syl = sylvester_resultant_2(sys.symbolic_form(0), sys.symbolic_form(1));
        const auto r = resultant(sys).expand();
        if (!(r == syl) && !(r == syl * ParamPoly(2, -1))) return "FAIL " + syl.str();
        return syl.str();
    }));

    rows.push_back(detail::run_check("CI <=> quotient 2^n", [&]() -> std::string {
        std::size_t count = 0;
        for (const auto& pat : patterns) {
            if (pat.n() > 4) continue;
            const std::size_t want = std::size_t(1) << pat.n();
            const auto good = random_specialization(pat, rng);
            if (resultant_eval(good) != 0 && quotient_dim(good) != want) return "FAIL generic instance at n = " + std::to_string(pat.n());
            const auto bad = degenerate_specialization(pat, rng);
            if (resultant_eval(bad) != 0) return "FAIL degenerate sampler";
            if (quotient_dim(bad) == want) return "FAIL degenerate instance has quotient 2^n";
            count += 2;
        }
        return std::to_string(count) + " specializations";
    }));

    rows.push_back(detail::run_check("rewrite tails", [&]() -> std::string {
        std::size_t count = 0;
        for (const auto& pat : patterns) {
            if (pat.n() > 3) continue;
            auto sys = random_specialization(pat, rng);
            if (resultant_eval(sys) == 0) continue;
            for (unsigned l = 2; l <= sys.n() + 1; ++l) {
                const auto table = rewrite_table(sys, l);
                for (std::size_t k = 0; k < table.monomials().size(); ++k)
                    if (!membership(RationalXPoly::monomial(table.monomials()[k]) - table.tails()[k], sys))
                        return "FAIL tail of " + table.monomials()[k].str(default_names(sys.n()));
                count += table.monomials().size();
            }
        }
        return std::to_string(count) + " tails";
    }));

    rows.push_back(detail::run_check("dual quintic Hilbert", [&]() -> std::string {
        const std::vector<Rational> off = {2, 3, 5, 7, 11};
        const std::vector<Rational> on = {2, 3, 5, 7, Rational(-1, 210)};
        const std::vector<std::size_t> full = {1, 5, 10, 10, 5, 1}, thin = {1, 5, 5, 5, 5, 1};
        if (catalecticant_hilbert(builtin_dual(DualKind::F, on)) != full) return "FAIL F on the locus";
        if (catalecticant_hilbert(builtin_dual(DualKind::G, off)) != full) return "FAIL G off the locus";
        if (catalecticant_hilbert(builtin_dual(DualKind::G, on)) != thin) return "FAIL G on the locus";
        return "ok";
    }));
    return rows;
}

}  // namespace binres
