#include <gtest/gtest.h>

#include <random>

#include "binres/oracle.hpp"
#include "binres/rewrite.hpp"
#include "binres/sampling.hpp"

using namespace binres;

namespace {

BinomialSystem generic_ci(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        auto s = random_specialization(random_pattern(n, rng), rng);
        if (resultant_eval(s) != 0) return s;
    }
}

RationalXPoly random_form(std::size_t n, unsigned d, std::mt19937_64& rng) {
    RationalXPoly f(n);
    std::uniform_int_distribution<int> coin(0, 2);
    for (const auto& m : monomials_of_degree(n, d))
        if (coin(rng)) f.add_term(m, random_rational(rng, 5));
    return f;
}

bool square_free(const RationalXPoly& f) {
    for (const auto& [m, c] : f.terms())
        if (!m.is_square_free()) return false;
    return true;
}

}  // namespace

TEST(RewriteTable, TailsAreCongruentAndSquareFree) {
    std::mt19937_64 rng(89);
    for (std::size_t n = 2; n <= 4; ++n)
        for (int t = 0; t < 3; ++t) {
            const auto sys = generic_ci(n, rng);
            for (unsigned lambda = 2; lambda <= n + 1; ++lambda) {
                const auto table = rewrite_table(sys, lambda);
                EXPECT_EQ(table.monomials().size(), dim_homogeneous(n, lambda) - binomial(n, lambda));
                for (const auto& w : table.monomials()) {
                    const auto& tail = table.tail(w);
                    EXPECT_TRUE(square_free(tail));
                    EXPECT_TRUE(membership(RationalXPoly::monomial(w) - tail, sys)) << w.str();
                }
            }
        }
}

TEST(RewriteTable, TopDegreeTailsVanish) {
    std::mt19937_64 rng(97);
    const auto sys = generic_ci(3, rng);
    for (const auto& tail : rewrite_table(sys, 4).tails()) EXPECT_TRUE(tail.is_zero());
}

TEST(Reduce, NormalFormProperties) {
    std::mt19937_64 rng(101);
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto sys = generic_ci(n, rng);
        for (unsigned d = 0; d <= n + 1; ++d)
            for (int t = 0; t < 3; ++t) {
                const auto f = random_form(n, d, rng);
                const auto r = reduce(sys, f);
                EXPECT_TRUE(square_free(r));
                EXPECT_EQ(reduce(sys, r), r);
                if (d >= 2) {
                    EXPECT_TRUE(membership(f - r, sys));
                }
            }
    }
}

TEST(Reduce, DegreeAndShapeErrors) {
    std::mt19937_64 rng(103);
    const auto sys = generic_ci(3, rng);
    EXPECT_THROW(rewrite_table(sys, 1), DegreeRangeError);
    EXPECT_THROW(rewrite_table(sys, 5), DegreeRangeError);
    EXPECT_THROW(reduce(sys, random_form(3, 5, rng) + RationalXPoly::monomial(XMonomial::var(3, 0, 5))), DegreeRangeError);
    EXPECT_THROW(reduce(rewrite_table(sys, 2), RationalXPoly::monomial(XMonomial::var(3, 0, 3))), DegreeRangeError);
    EXPECT_THROW(reduce(sys, RationalXPoly::monomial(XMonomial::var(2, 0, 2))), DimensionMismatchError);
    EXPECT_THROW(rewrite_table(sys.pattern(), 2), ValidationError);
}

TEST(RewriteTable, SingularOnDegenerateSystems) {
    std::mt19937_64 rng(107);
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto sys = degenerate_specialization(random_pattern(n, rng), rng);
        EXPECT_THROW(rewrite_table(sys, static_cast<unsigned>(n + 1)), SingularMatrixError);
    }
}

TEST(HilbertFunction, AgreesWithRankOracle) {
    std::mt19937_64 rng(109);
    for (std::size_t n = 2; n <= 4; ++n)
        for (int t = 0; t < 4; ++t) {
            const auto sys = t % 2 ? degenerate_specialization(random_pattern(n, rng), rng) : generic_ci(n, rng);
            auto want = oracle_hilbert(sys);
            while (!want.empty() && want.back() == 0) want.pop_back();
            EXPECT_EQ(hilbert_function(sys), want);
            if (t % 2 == 0) {
                std::vector<std::size_t> binom;
                for (std::size_t k = 0; k <= n; ++k) binom.push_back(binomial(n, k));
                EXPECT_EQ(hilbert_function(sys), binom);
            } else {
                EXPECT_EQ(want.size(), n + 2);
            }
        }
}
