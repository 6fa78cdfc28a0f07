#include "bsv/errors.hpp"
#include "bsv/poly.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace bsv;

namespace {

VarTablePtr xyz() {
    static VarTablePtr const t = VarTable::make("x y z0");
    return t;
}

MultiPoly P(char const* s) { return parse_poly(s, xyz()); }

TEST(VarTable, RejectsDuplicatesAndEmptyNames) {
    EXPECT_THROW(VarTable::make("x x"), Error);
    EXPECT_THROW(VarTable::make(std::vector<std::string>{"x", ""}), Error);
    EXPECT_EQ(VarTable::make("a b")->index_of("b"), 1u);
    EXPECT_THROW(VarTable::make("a b")->index_of("c"), ArityError);
}

TEST(Poly, GrlexOrderAndText) {
    MultiPoly const p = P("y^2 + x*y + x^3 + 1");
    EXPECT_EQ(to_string(p), "x^3 + x*y + y^2 + 1");
    EXPECT_EQ(p.total_degree(), 3);
    EXPECT_EQ(p.leading_term().first, (Exponents{3, 0, 0}));
    EXPECT_EQ(MultiPoly(xyz()).total_degree(), -1);
}

TEST(Poly, ZetaCoefficients) {
    MultiPoly const p = P("-3*z^2*x*y + z*y");
    EXPECT_EQ(p.coefficient({1, 1, 0}), EisensteinRational(3) + EisensteinRational(3) * EisensteinRational::zeta());
    EXPECT_EQ(to_string(p), "(3+3*z)*x*y + z*y");
}

TEST(Poly, RingAxiomsOnRandomSamples) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        auto const a = test::random_poly(xyz(), rng);
        auto const b = test::random_poly(xyz(), rng);
        auto const c = test::random_poly(xyz(), rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - b) + b, a);
        EXPECT_EQ(a.pow(2), a * a);
    }
}

TEST(Poly, SubstitutionIsARingHomomorphism) {
    std::mt19937_64 rng(5);
    VarTablePtr const target = VarTable::make("s t");
    for (int i = 0; i < 20; ++i) {
        std::map<std::string, MultiPoly> const phi{
            {"x", test::random_poly(target, rng, 3)},
            {"y", test::random_poly(target, rng, 3)},
            {"z0", test::random_poly(target, rng, 2)},
        };
        auto const a = test::random_poly(xyz(), rng, 3, 2);
        auto const b = test::random_poly(xyz(), rng, 3, 2);
        EXPECT_EQ(substitute(a * b, phi, target), substitute(a, phi, target) * substitute(b, phi, target));
        EXPECT_EQ(substitute(a + b, phi, target), substitute(a, phi, target) + substitute(b, phi, target));
    }
}

TEST(Poly, DerivativeProductRule) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        auto const a = test::random_poly(xyz(), rng);
        auto const b = test::random_poly(xyz(), rng);
        for (std::size_t v = 0; v < 3; ++v)
            EXPECT_EQ((a * b).derivative(v), a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST(Poly, ExactDivision) {
    MultiPoly const a = P("x^2 - y^2");
    MultiPoly const b = P("x + y");
    auto const q = exact_divide(a, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, P("x - y"));
    EXPECT_FALSE(exact_divide(P("x^2 + y^2"), b).has_value());
}

TEST(Poly, DivisionByListReconstructs) {
    std::mt19937_64 rng(13);
    std::vector<MultiPoly> const divisors{P("x^2 - y"), P("x*y - 1")};
    for (int i = 0; i < 20; ++i) {
        auto const p = test::random_poly(xyz(), rng, 5, 3);
        DivisionResult const d = divide_by_list(p, divisors);
        MultiPoly sum = d.remainder;
        for (std::size_t k = 0; k < divisors.size(); ++k)
            sum += d.quotients[k] * divisors[k];
        EXPECT_EQ(sum, p);
    }
}

TEST(Poly, ParseRoundTrip) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        auto const p = test::random_poly(xyz(), rng, 5, 3);
        EXPECT_EQ(parse_poly(to_string(p), xyz()), p);
    }
}

TEST(Poly, ParseErrors) {
    EXPECT_THROW(P(""), ParseError);
    EXPECT_THROW(P("x +"), ParseError);
    EXPECT_THROW(P("x10"), ParseError);
    EXPECT_THROW(parse_poly("x", VarTable::make("x z")), Error);
}

TEST(Poly, MixedTablesAreRejected) {
    EXPECT_THROW(P("x") + MultiPoly::variable(VarTable::make("x"), "x"), ArityError);
    EXPECT_EQ(P("x*y").rebase(VarTable::make("y w x")).total_degree(), 2);
    EXPECT_THROW(P("z0").rebase(VarTable::make("x y")), ArityError);
}

TEST(Poly, Evaluate) {
    MultiPoly const p = P("x^2*y + z*z0");
    MultiPoly const v = p.evaluate({{0, 2}, {1, 3}, {2, 1}});
    EXPECT_EQ(v.constant_term(), EisensteinRational(12) + EisensteinRational::zeta());
}

} // namespace
