#include <gtest/gtest.h>

#include <random>

#include "binres/resultant.hpp"
#include "binres/sampling.hpp"
#include "binres/system_io.hpp"

using namespace binres;

namespace {

template <typename F>
ParseError parse_error_of(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError";
    return ParseError("", 0, 0);
}

}  // namespace

TEST(SystemLines, CyclicFamilyFile) {
    const auto spec = parse_system(
        "# comment line\n"
        "f1 = a1 x1^2 + p1 x1 x2\n"
        "f2 = a2 x2^2 + p2 x2 x3\n"
        "f3 = a3 x3^2 + p3 x3 x4\n"
        "f4 = a4 x4^2 + p4 x4 x5\n"
        "f5 = a5 x5^2 + p5 x1 x5   # trailing comment\n");
    EXPECT_EQ(spec.n, 5u);
    EXPECT_FALSE(spec.specialized());
    const std::vector<std::pair<unsigned, unsigned>> want = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    EXPECT_EQ(spec.cofactors, want);
    EXPECT_EQ(spec.system().symbolic_form(4).str(), "b5*x1*x5 + a5*x5^2");
}

TEST(SystemLines, NumericCoefficientsAndOrder) {
    const auto spec = parse_system("f2 = -1/2 x2^2 + 3 x1 x3\nf1 = x1^2 - x2 x3\nf3 = 4 x3^2 + 5/3 x1 x2\norder = 2,3,1\n");
    ASSERT_TRUE(spec.specialized());
    EXPECT_EQ(*spec.a, (std::vector<Rational>{1, Rational(-1, 2), 4}));
    EXPECT_EQ(*spec.b, (std::vector<Rational>{-1, 3, Rational(5, 3)}));
    ASSERT_TRUE(spec.order.has_value());
    EXPECT_EQ(spec.order->str(), "2,3,1");
}

TEST(SystemLines, RejectsNonBinomials) {
    EXPECT_THROW(parse_system("f1 = x1^2\n"), ValidationError);
    EXPECT_THROW(parse_system("f1 = x1^2 + x1 x2 + x2^2\nf2 = x2^2 + x1 x2\n"), ValidationError);
    EXPECT_THROW(parse_system("f1 = x1^2 + x2^2\nf2 = x2^2 + x1 x2\n"), ValidationError);
    EXPECT_THROW(parse_system("f1 = a1 x1^2 + b1 x2 x3\nf2 = 2 x2^2 + x1 x3\nf3 = x3^2 + x1 x2\n"), ValidationError);
    EXPECT_THROW(parse_system("f1 = a2 x1^2 + b1 x1 x2\nf2 = a2 x2^2 + b2 x1 x2\n"), ValidationError);
    EXPECT_THROW(parse_system("f1 = x1^2 + x1 x2\nf1 = x2^2 + x1 x2\n"), ValidationError);
    EXPECT_THROW(parse_system(""), ParseError);
}

TEST(SystemLines, ErrorsCarryPositions) {
    auto e = parse_error_of([] { parse_system("f1 = x1^2 + x1 x2\ng2 = x2^2 + x1 x2\n"); });
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 1u);
    e = parse_error_of([] { parse_system("f1 = x1^2 + x1 x2\n  f2 x2^2\n"); });
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
    e = parse_error_of([] { parse_system("f1 = x1^2 + x1 x2\nf2 = x2^2 + x1 x2\norder = 1,x\n"); });
    EXPECT_EQ(e.line(), 3u);
}

TEST(SystemJson, ParsesAndValidates) {
    const auto spec = parse_system(R"({"schema": 1, "forms": [
        {"square": 1, "cofactor": [2, 3], "a": "1", "p": "2"},
        {"square": 2, "cofactor": [1, 3], "a": 3, "b": "-1/2"},
        {"square": 3, "cofactor": [1, 2], "a": "-2", "b": 5}]})");
    EXPECT_EQ(spec.n, 3u);
    EXPECT_EQ(*spec.b, (std::vector<Rational>{2, Rational(-1, 2), 5}));
    EXPECT_THROW(parse_system(R"({"schema": 2, "forms": []})"), ValidationError);
    EXPECT_THROW(parse_system(R"({"schema": 1, "forms": [{"square": 1, "cofactor": [1, 1]}]})"), ValidationError);
    EXPECT_THROW(parse_system(R"({"schema": 1, "forms": [{"square": 1}]})"), ValidationError);
    const auto e = parse_error_of([] { parse_system("{\"schema\": 1,\n  \"forms\": [}\n"); });
    EXPECT_EQ(e.line(), 2u);
}

TEST(SystemIo, RoundTrips) {
    std::mt19937_64 rng(167);
    for (std::size_t n = 2; n <= 6; ++n)
        for (int t = 0; t < 4; ++t) {
            auto sys = random_pattern(n, rng);
            if (t % 2) sys = random_specialization(sys, rng);
            auto spec = SystemSpec::from_system(sys);
            if (t == 3) spec.order = IndexOrder::cyclic(n, 2);
            for (const auto& text : {system_to_json(spec).dump(2), serialize_system_lines(spec)}) {
                const auto back = parse_system(text);
                EXPECT_EQ(back.n, spec.n);
                EXPECT_EQ(back.cofactors, spec.cofactors);
                EXPECT_EQ(back.a, spec.a);
                EXPECT_EQ(back.b, spec.b);
                EXPECT_EQ(back.order.has_value(), spec.order.has_value());
                if (back.order) {
                    EXPECT_EQ(back.order->str(), spec.order->str());
                }
            }
        }
}

TEST(SystemIo, LinesUseUnitCoefficientsSparingly) {
    const auto sys = BinomialSystem::symbolic(3, {{1, 2}, {0, 2}, {0, 1}}).specialized({1, -1, 2}, {-1, 1, Rational(1, 3)});
    EXPECT_EQ(serialize_system_lines(SystemSpec::from_system(sys)),
              "f1 = x1^2 - x2 x3\nf2 = -x2^2 + x1 x3\nf3 = 2 x3^2 + 1/3 x1 x2\n");
}

TEST(FactoredJson, Layout) {
    const auto r = resultant(BinomialSystem::symbolic(2, {{0, 1}, {0, 1}}));
    const auto j = factored_to_json(r);
    EXPECT_EQ(j["text"], "a1*a2 * (a1*a2 - b1*b2)");
    EXPECT_EQ(j["sign"], 1);
    EXPECT_EQ(j["zero"], false);
    EXPECT_EQ(j["monomial"]["a"], Json::array({1, 1}));
    ASSERT_EQ(j["factors"].size(), 1u);
    EXPECT_EQ(j["factors"][0]["sign"], -1);
    EXPECT_EQ(j["factors"][0]["multiplicity"], 1);
}

TEST(QuadraticSpaceFiles, TextAndJson) {
    const auto t = parse_quadratic_space("vars: x y z\nx^2 + y*z\ny^2 + 2 x z\n# note\nz^2 - x y + x^2\n");
    EXPECT_EQ(t.variables, (std::vector<std::string>{"x", "y", "z"}));
    ASSERT_EQ(t.forms.size(), 3u);
    EXPECT_EQ(t.forms[1].coefficient(XMonomial({1, 0, 1})), 2);
    const auto j = parse_quadratic_space(R"({"schema": 1, "variables": ["u", "v"], "forms": ["u^2", "u*v - v^2"]})");
    ASSERT_EQ(j.forms.size(), 2u);
    EXPECT_EQ(j.forms[1].coefficient(XMonomial({0, 2})), -1);
    EXPECT_THROW(parse_quadratic_space("vars: x y\nx^2 + q^2\n"), ValidationError);
}
