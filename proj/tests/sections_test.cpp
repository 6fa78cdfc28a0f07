#include "bsv/errors.hpp"
#include "bsv/sections.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace bsv;
using namespace bsv::sections;

namespace {

EisensteinRational const z = EisensteinRational::zeta();

MultiPoly cubic(char const* s) { return parse_poly(s, uvw_table()); }

/// Independent weight rule: pure cubes weigh 3, every other monomial
/// u^i v^j w^k weighs (2i + j) mod 3.
int weight_rule(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    if (i == 3 || j == 3 || k == 3)
        return 3;
    return static_cast<int>((2 * i + j) % 3);
}

std::size_t brute_force_s_count(int a) {
    std::size_t n = 0;
    for (std::uint32_t i = 0; i <= 3; ++i)
        for (std::uint32_t j = 0; i + j <= 3; ++j)
            if (weight_rule(i, j, 3 - i - j) <= a)
                ++n;
    return n;
}

TEST(Sections, WeightTableMatchesPublishedValues) {
    for (std::size_t k = 0; k < kCubicFrameSize; ++k) {
        auto const [i, j, l] = cubic_frame()[k];
        EXPECT_EQ(s_weight_table()[k], weight_rule(i, j, l)) << k;
    }
    EXPECT_EQ(s_weight(cubic("u*v*w")), 0);
    EXPECT_EQ(s_weight(cubic("u*w^2 + v*w^2")), 2);
    EXPECT_EQ(s_weight(MultiPoly(uvw_table())), -1);
}

TEST(Sections, MembershipDimensions) {
    for (int a = 0; a <= 3; ++a) {
        EXPECT_EQ(s_membership_space(a).dimension(), brute_force_s_count(a));
        EXPECT_EQ(t_membership_space(a).dimension(), brute_force_s_count(a));
    }
    EXPECT_EQ(s_membership_space(0).dimension(), 1u);
    EXPECT_EQ(s_membership_space(1).dimension(), 4u);
    EXPECT_EQ(s_membership_space(2).dimension(), 7u);
    EXPECT_EQ(s_membership_space(3).dimension(), 10u);
}

TEST(Sections, MembershipSpaceContainsExactlyLowWeightForms) {
    Subspace const s1 = s_membership_space(1).space;
    EXPECT_TRUE(s1.contains(cubic_coordinates(cubic("u*v*w + v*w^2 - u^2*w + u*v^2"))));
    EXPECT_FALSE(s1.contains(cubic_coordinates(cubic("u*w^2"))));
}

TEST(Sections, TildeCoordinates) {
    TildeFrame const& f = tilde_frame();
    EXPECT_EQ(f.u_tilde, cubic("z*u + z^2*v + w"));
    EXPECT_EQ(f.w_tilde, cubic("u + v + w"));
    EXPECT_EQ(f.forward * f.backward, Matrix::identity(3));
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
        Vector c(kCubicFrameSize);
        for (auto& x : c)
            x = test::random_scalar(rng);
        MultiPoly const p = cubic_from_coordinates(c, uvw_table());
        EXPECT_EQ(f.from_tilde(f.to_tilde(p)), p);
    }
}

TEST(Sections, TildeCompatibility) {
    TildeCompatibility const c = tilde_compatibility_check();
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(c.characters[0], z);
    EXPECT_EQ(c.characters[1], z * z);
    EXPECT_EQ(c.characters[2], EisensteinRational(1));
    // Cofactor expansion of the forward matrix.
    EXPECT_EQ(c.determinant, test::cofactor_determinant(tilde_frame().forward));
    EXPECT_EQ(c.determinant, EisensteinRational(-3) * (z - z * z));
}

TEST(Sections, ShiftDirection) {
    TildeFrame const& f = tilde_frame();
    // Pullback along (u:v:w) ↦ (w:u:v) scales ũ by ζ.
    EXPECT_EQ(cyclic_shift(f.u_tilde, 1), z * f.u_tilde);
    // The opposite substitution u→v, v→w, w→u gives the inverse character.
    EXPECT_EQ(cyclic_shift(f.u_tilde, 2), z * z * f.u_tilde);
    EXPECT_EQ(cyclic_shift(cubic("u^2*v"), 3), cubic("u^2*v"));
}

TEST(Sections, IntersectionCells) {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            std::size_t const d = intersection_cell(a, b).dimension();
            // Containment oracle: the cell is the intersection, so it sits in both.
            EXPECT_TRUE(s_membership_space(a).space.contains(intersection_cell(a, b).space));
            EXPECT_TRUE(t_membership_space(b).space.contains(intersection_cell(a, b).space));
            // dim(S_a ∩ T_b) ≥ dim S_a + dim T_b − 10.
            long const lower = static_cast<long>(brute_force_s_count(a) + brute_force_s_count(b)) - 10;
            EXPECT_GE(static_cast<long>(d), lower);
        }
    EXPECT_EQ(intersection_cell(0, 0).dimension(), 0u);
    EXPECT_EQ(intersection_cell(1, 0).dimension(), 0u);
    EXPECT_EQ(intersection_cell(0, 2).dimension(), 0u);
    EXPECT_EQ(intersection_cell(1, 1).dimension(), 1u);
    EXPECT_EQ(intersection_cell(1, 2).dimension(), 2u);
    EXPECT_EQ(intersection_cell(2, 1).dimension(), 2u);
    // Two 7-dimensional subspaces of a 10-dimensional space meet in at least 4 dimensions.
    EXPECT_EQ(intersection_cell(2, 2).dimension(), 4u);
    EXPECT_EQ(intersection_cell(0, 3).space, Subspace::span({cubic_coordinates(cubic("u*v*w"))}, kCubicFrameSize));
}

TEST(Sections, CellOneOneIsSpannedByTheExpectedForm) {
    Vector const v = cubic_coordinates(cubic("u^2*w + z*v*w^2 + z^2*u*v^2"));
    EXPECT_EQ(intersection_cell(1, 1).space, Subspace::span({v}, kCubicFrameSize));
}

TEST(Sections, STBasisCertificate) {
    STBasisCertificate const c = st_basis_certificate(test::st_basis());
    EXPECT_TRUE(c.membership_ok());
    EXPECT_TRUE(c.freeness_ok());
    EXPECT_TRUE(c.generation_ok());
    std::vector<std::pair<int, int>> const cells{{0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 1},
                                                 {2, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 2}};
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_EQ(c.generators[i].a, cells[i].first) << i;
        EXPECT_EQ(c.generators[i].b, cells[i].second) << i;
    }
    // Determinant is a unit multiple of s^18 t^18: total s-degree 0+1+1+1+2+2+2+3+3+3.
    EXPECT_EQ(c.determinant.term_count(), 1u);
    EXPECT_EQ(c.determinant.leading_term().first, (Exponents{18, 18}));
}

TEST(Sections, CorruptedGeneratorFailsMembership) {
    auto gens = test::st_basis();
    gens[1] = parse_poly("s*t*(u^2*w + z^2*v*w^2 + z^2*u*v^2)", st_cubic_table());
    STBasisCertificate const c = st_basis_certificate(gens);
    EXPECT_FALSE(c.ok());
    EXPECT_FALSE(c.generators[1].member);
}

TEST(Sections, ChartsAndConditions) {
    EXPECT_EQ(blowup_charts().size(), 9u);
    EXPECT_THROW(chart("4"), Error);
    ChartMap const& c = chart("1'a");
    ASSERT_TRUE(c.membership_generator.has_value());
    MultiPoly const l = parse_poly("u*v*w", t_cubic_table());
    for (int shift = 0; shift < 3; ++shift) {
        EXPECT_TRUE(chart_image(l, c, shift).is_zero());
        EXPECT_TRUE(chart_image(l, chart("2a"), shift).is_zero());
    }
    MultiPoly const bare = parse_poly("w^3", t_cubic_table());
    bool some_condition_fails = false;
    for (char const* name : {"1'a", "2a"})
        for (int shift = 0; shift < 3; ++shift)
            some_condition_fails = some_condition_fails || !chart_image(bare, chart(name), shift).is_zero();
    EXPECT_TRUE(some_condition_fails);
}

TEST(Sections, LocalSectionSpace) {
    LocalSectionCertificate const c = local_section_space(test::local_basis());
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(c.kernel.dimension(), 12u);
    EXPECT_EQ(c.truncated_span.space, c.kernel.space);
    EXPECT_EQ(c.counted_dimension, 12u);
    EXPECT_TRUE(c.t_stable);
    for (bool m : c.listed_members)
        EXPECT_TRUE(m);
    std::vector<long> const degrees{3, 2, 1, 1, 0, 2, 3, 2, 1, 3};
    EXPECT_EQ(c.listed_t_degrees, degrees);
}

TEST(Sections, TruncatedFrameRoundTrip) {
    MultiPoly const p = parse_poly("t^2*u*v*w + 3*t*w^3 - u^3 + t^3*v^3", t_cubic_table());
    Vector const c = truncated_coordinates(p);
    EXPECT_EQ(c.size(), 30u);
    EXPECT_EQ(truncated_from_coordinates(c), parse_poly("t^2*u*v*w + 3*t*w^3 - u^3", t_cubic_table()));
}

} // namespace
