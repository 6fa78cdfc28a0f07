#include "bsv/errors.hpp"
#include "bsv/linalg.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace bsv;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound = 3) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = test::random_scalar(rng, bound);
    return m;
}

/// Rank-deficient matrix: product of r×k and k×c.
Matrix low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
    return random_matrix(rng, r, k) * random_matrix(rng, k, c);
}

TEST(Linalg, DeterminantAgreesWithCofactorExpansion) {
    std::mt19937_64 rng(1);
    for (std::size_t n = 1; n <= 7; ++n) {
        Matrix const m = random_matrix(rng, n, n);
        EXPECT_EQ(determinant(m), test::cofactor_determinant(m)) << "n=" << n;
    }
    EXPECT_TRUE(determinant(low_rank(rng, 5, 5, 3)).is_zero());
}

TEST(Linalg, KernelVectorsAreAnnihilatedAndCanonical) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10; ++i) {
        Matrix const m = low_rank(rng, 5, 8, 3);
        auto const k = kernel_over_field(m);
        EXPECT_EQ(k.size(), 8 - rank(m));
        std::size_t last_pivot = 0;
        for (std::size_t j = 0; j < k.size(); ++j) {
            for (auto const& x : m.apply(k[j]))
                EXPECT_TRUE(x.is_zero());
            std::size_t p = 0;
            while (k[j][p].is_zero())
                ++p;
            EXPECT_TRUE(k[j][p].is_one());
            if (j > 0)
                EXPECT_GT(p, last_pivot);
            last_pivot = p;
        }
    }
}

TEST(Linalg, RankIsInvariantUnderInvertibleRowOperations) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        Matrix const m = low_rank(rng, 6, 7, 4);
        Matrix g = random_matrix(rng, 6, 6);
        while (determinant(g).is_zero())
            g = random_matrix(rng, 6, 6);
        EXPECT_EQ(rank(g * m), rank(m));
        EXPECT_EQ(rank(m), 4u);
    }
}

TEST(Linalg, Inverse) {
    std::mt19937_64 rng(4);
    Matrix const m = random_matrix(rng, 4, 4);
    ASSERT_FALSE(determinant(m).is_zero());
    EXPECT_EQ(m * inverse(m), Matrix::identity(4));
    EXPECT_THROW(inverse(low_rank(rng, 3, 3, 2)), DivisionByZero);
}

TEST(Linalg, SubspaceOperations) {
    std::size_t const n = 4;
    Vector const e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0}, d{1, 1, 0, 0};
    Subspace const a = Subspace::span({e1, e2}, n);
    Subspace const b = Subspace::span({d, e3}, n);
    EXPECT_EQ(a.dimension(), 2u);
    EXPECT_EQ(a.intersect(b), Subspace::span({d}, n));
    EXPECT_EQ(a.sum(b).dimension(), 3u);
    EXPECT_TRUE(a.contains(d));
    EXPECT_FALSE(a.contains(e3));
    EXPECT_TRUE(a.sum(b).contains(a));
    EXPECT_EQ(Subspace::span({e1, d}, n), a);
}

TEST(Linalg, BareissRankAgreesWithSpecializationBound) {
    // Over k[s,t] the fraction-field rank bounds every specialization and is
    // attained at a generic point.
    VarTablePtr const t = VarTable::make("s t");
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5; ++i) {
        PolyMatrix m(4, 5, t);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 5; ++c)
                m(r, c) = test::random_poly(t, rng, 2, 2);
        for (std::size_t c = 0; c < 5; ++c)
            m(3, c) = m(0, c) * MultiPoly::variable(t, "s") - m(1, c);
        std::size_t const r = rank_over_fraction_field(m);
        EXPECT_LE(r, 3u);
        std::size_t best = 0;
        for (long s0 : {2L, 5L, 7L})
            for (long t0 : {3L, -4L, 11L})
                best = std::max(best, rank(m.evaluate({{0, s0}, {1, t0}})));
        EXPECT_EQ(r, best);
    }
}

TEST(Linalg, PolyDeterminantAgreesWithCofactorExpansion) {
    VarTablePtr const t = VarTable::make("s t");
    std::mt19937_64 rng(6);
    for (std::size_t n = 1; n <= 4; ++n) {
        PolyMatrix m(n, n, t);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = test::random_poly(t, rng, 2, 2);
        EXPECT_EQ(determinant(m), test::cofactor_determinant(m)) << "n=" << n;
    }
}

TEST(Linalg, JacobianOfProductFollowsLeibniz) {
    VarTablePtr const t = VarTable::make("x y");
    std::mt19937_64 rng(7);
    auto const f = test::random_poly(t, rng);
    auto const g = test::random_poly(t, rng);
    PolyMatrix const jf = jacobian({f}, {"x", "y"});
    PolyMatrix const jg = jacobian({g}, {"x", "y"});
    PolyMatrix const jfg = jacobian({f * g}, {"x", "y"});
    for (std::size_t c = 0; c < 2; ++c)
        EXPECT_EQ(jfg(0, c), jf(0, c) * g + f * jg(0, c));
}

TEST(Linalg, BiWeightIsAdditive) {
    VarTablePtr const t = VarTable::make("a b c");
    WeightVector const w{{1, 0}, {0, 2}, {3, 1}};
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::uint32_t> ex(0, 3);
    for (int i = 0; i < 30; ++i) {
        Exponents const e{ex(rng), ex(rng), ex(rng)};
        Exponents const f{ex(rng), ex(rng), ex(rng)};
        BiWeight expected{0, 0};
        for (std::size_t k = 0; k < 3; ++k) {
            expected.first += static_cast<long>(e[k] + f[k]) * w[k].first;
            expected.second += static_cast<long>(e[k] + f[k]) * w[k].second;
        }
        MultiPoly const p = MultiPoly::monomial(t, e, test::random_scalar(rng) + 7);
        MultiPoly const q = MultiPoly::monomial(t, f, 2);
        EXPECT_EQ(bi_weight(p * q, w), expected);
    }
    EXPECT_EQ(bi_weight(parse_poly("a^3 + c*b^0 - a^3", t), w), (BiWeight{3, 1}));
    EXPECT_EQ(bi_weight(parse_poly("a^6*b + c^2", t), w), (BiWeight{6, 2}));
    EXPECT_THROW(bi_weight(parse_poly("c + a^3", t), w), InhomogeneousError);
    EXPECT_THROW(bi_weight(MultiPoly(t), w), Error);
}

} // namespace
