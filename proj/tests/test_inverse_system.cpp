#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "binres/inverse_system.hpp"
#include "binres/sampling.hpp"

using namespace binres;

namespace {

std::vector<Rational> off_locus(std::mt19937_64& rng) {
    for (;;) {
        std::vector<Rational> p;
        for (int i = 0; i < 5; ++i) p.push_back(random_rational(rng, 5));
        if (p[0] * p[1] * p[2] * p[3] * p[4] != -1) return p;
    }
}

std::vector<Rational> on_locus(std::mt19937_64& rng) {
    std::vector<Rational> p;
    for (int i = 0; i < 4; ++i) p.push_back(random_rational(rng, 5));
    p.push_back(-1 / (p[0] * p[1] * p[2] * p[3]));
    return p;
}

std::array<Rational, 4> first_four(std::mt19937_64& rng) {
    return {random_rational(rng, 5), random_rational(rng, 5), random_rational(rng, 5), random_rational(rng, 5)};
}

std::size_t total(const std::vector<std::size_t>& v) { return std::accumulate(v.begin(), v.end(), std::size_t{0}); }

const std::vector<std::size_t> kFull = {1, 5, 10, 10, 5, 1};
const std::vector<std::size_t> kThin = {1, 5, 5, 5, 5, 1};

}  // namespace

TEST(DualForms, Transcription) {
    EXPECT_EQ(builtin_dual(DualKind::F, {0, 0, 0, 0, 0}).poly, RationalXPoly::monomial(XMonomial({1, 1, 1, 1, 1})).scaled(12));
    EXPECT_EQ(builtin_dual(DualKind::G, {0, 0, 0, 0, 0}).poly, RationalXPoly::monomial(XMonomial({1, 1, 1, 1, 1})).scaled(120));
    const auto F = builtin_dual(DualKind::F, {1, 1, 1, 1, 1});
    EXPECT_EQ(F.poly.coefficient(XMonomial({3, 0, 0, 1, 1})), -2);
    EXPECT_EQ(F.d, 5u);
    const auto G = builtin_dual(DualKind::G, {2, 3, 5, 7, 11});
    EXPECT_EQ(G.poly.coefficient(XMonomial({5, 0, 0, 0, 0})), -(8 * 5 * 7));
    EXPECT_EQ(G.poly.coefficient(XMonomial({2, 1, 2, 0, 0})), 30 * 2 * 5);
    EXPECT_THROW(builtin_dual(DualKind::F, {1, 2}), ValidationError);
}

TEST(ApplyDiff, BasicAction) {
    const auto F = builtin_dual(DualKind::F, {1, 2, 3, 4, 5});
    EXPECT_EQ(apply_diff(RationalXPoly::constant(5, 1), F), F.poly);
    const auto x5 = RationalXPoly::monomial(XMonomial::var(5, 2, 5));
    EXPECT_EQ(apply_diff(RationalXPoly::monomial(XMonomial::var(5, 2)), x5),
              RationalXPoly::monomial(XMonomial::var(5, 2, 4)).scaled(5));
    // bilinear in the operator
    const auto u = RationalXPoly::monomial(XMonomial({1, 1, 0, 0, 0}));
    const auto w = RationalXPoly::monomial(XMonomial({0, 0, 2, 0, 0}));
    EXPECT_EQ(apply_diff(u + w.scaled(3), F), apply_diff(u, F) + apply_diff(w, F).scaled(3));
}

TEST(ApplyDiff, GeneratorsAnnihilate) {
    std::mt19937_64 rng(127);
    for (int t = 0; t < 6; ++t) {
        const auto p = t % 2 ? on_locus(rng) : off_locus(rng);
        for (auto which : {DualKind::F, DualKind::G}) {
            const auto D = builtin_dual(which, p);
            for (const auto& f : builtin_generators(which, p)) EXPECT_TRUE(apply_diff(f, D).is_zero()) << f.str();
        }
    }
}

// Cofactors v: wz, w: xv, x: yw, y: zx, z: vw do not fit the x_{i+2} x_{i+3}
// pattern and fail to annihilate G; recorded here so the discrepancy stays visible.
TEST(ApplyDiff, IrregularCofactorListMissesG) {
    std::mt19937_64 rng(131);
    const auto p = off_locus(rng);
    const auto G = builtin_dual(DualKind::G, p);
    const std::vector<std::pair<unsigned, unsigned>> cof = {{1, 4}, {2, 0}, {3, 1}, {4, 2}, {0, 1}};
    std::size_t failures = 0;
    for (unsigned i = 0; i < 5; ++i) {
        RationalXPoly f(5);
        f.add_term(XMonomial::var(5, i, 2), 1);
        f.add_term(XMonomial::var(5, cof[i].first) * XMonomial::var(5, cof[i].second), p[i]);
        failures += !apply_diff(f, G).is_zero();
    }
    EXPECT_GT(failures, 0u);
}

TEST(Catalecticant, HilbertFunctions) {
    std::mt19937_64 rng(137);
    for (int t = 0; t < 20; ++t) {
        const auto off = off_locus(rng), on = on_locus(rng);
        EXPECT_EQ(catalecticant_hilbert(builtin_dual(DualKind::G, off)), kFull);
        EXPECT_EQ(catalecticant_hilbert(builtin_dual(DualKind::G, on)), kThin);
        if (t < 5) {
            EXPECT_EQ(catalecticant_hilbert(builtin_dual(DualKind::F, off)), kFull);
            EXPECT_EQ(catalecticant_hilbert(builtin_dual(DualKind::F, on)), kFull);
        }
    }
    EXPECT_EQ(catalecticant_hilbert(DualForm(RationalXPoly::monomial(XMonomial::var(5, 0, 5)))),
              (std::vector<std::size_t>(6, 1)));
}

TEST(Catalecticant, SymmetryOnRandomForms) {
    std::mt19937_64 rng(139);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int t = 0; t < 15; ++t) {
        const std::size_t n = 2 + t % 3;
        const unsigned d = 2 + static_cast<unsigned>(t % 4);
        RationalXPoly f(n);
        for (const auto& m : monomials_of_degree(n, d))
            if (!coin(rng)) f.add_term(m, random_rational(rng, 4));
        if (f.is_zero()) continue;
        const auto h = catalecticant_hilbert(DualForm(f));
        ASSERT_EQ(h.size(), d + 1);
        for (unsigned k = 0; k <= d; ++k) EXPECT_EQ(h[k], h[d - k]);
    }
}

TEST(Annihilator, GeneratorCounts) {
    std::mt19937_64 rng(149);
    for (int t = 0; t < 5; ++t) {
        const auto off = ann_generator_counts(builtin_dual(DualKind::F, off_locus(rng)));
        EXPECT_EQ(total(off), 5u);
        EXPECT_EQ(off[1], 5u);  // entry k-1 counts degree k
        EXPECT_EQ(total(ann_generator_counts(builtin_dual(DualKind::F, on_locus(rng)))), 7u);
    }
    const auto mono = ann_generator_counts(builtin_dual(DualKind::F, {0, 0, 0, 0, 0}));
    EXPECT_EQ(total(mono), 5u);
    EXPECT_EQ(mono[1], 5u);
}

TEST(Hessian, ShapeAndSymmetry) {
    const auto G = builtin_dual(DualKind::G, {1, 2, 3, 4, 5});
    const auto h = hessian(G, 2);
    ASSERT_EQ(h.basis.size(), 10u);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ(h.entries[i][j], h.entries[j][i]);
    EXPECT_THROW(hessian(G, 3), DegreeRangeError);
}

TEST(Hessian, SecondHessianOfGVanishesExactlyOnTheLocus) {
    std::mt19937_64 rng(151);
    for (int t = 0; t < 10; ++t) {
        const auto on = builtin_dual(DualKind::G, on_locus(rng));
        EXPECT_EQ(hess_det_eval(on, 2, random_point(5, rng)), 0);
        EXPECT_NE(hess_det_eval(builtin_dual(DualKind::G, off_locus(rng)), 2, random_point(5, rng)), 0);
    }
    EXPECT_NE(hess_det_eval(builtin_dual(DualKind::F, on_locus(rng)), 2, random_point(5, rng)), 0);
}

TEST(Hessian, VanishingOrderAlongTransversalLine) {
    std::mt19937_64 rng(157);
    for (int t = 0; t < 3; ++t) {
        const auto p = first_four(rng);
        const auto pt = random_point(5, rng);
        EXPECT_GE(hess2_vanishing_order(DualKind::G, p, pt), 5u);
        EXPECT_EQ(hess2_vanishing_order(DualKind::F, p, pt), 0u);
    }
}

TEST(Hessian, LineParametrization) {
    // on p5 = -(1+t)/(p1 p2 p3 p4) the product 1 + p1..p5 equals -t
    std::mt19937_64 rng(163);
    const auto p = first_four(rng);
    const Rational P = p[0] * p[1] * p[2] * p[3];
    for (const Rational& t : {Rational(0), Rational(1, 3), Rational(-7)}) EXPECT_EQ(1 + P * (-(1 + t) / P), -t);
    // the t = 0 value of the line determinant is hess^2 on the locus
    const auto pt = random_point(5, rng);
    EXPECT_EQ(hess2_along_line(DualKind::F, p, pt).evaluate(0),
              hess_det_eval(builtin_dual(DualKind::F, {p[0], p[1], p[2], p[3], -1 / P}), 2, pt));
    EXPECT_THROW(hess2_along_line(DualKind::G, {0, 1, 1, 1}, pt), ValidationError);
}
