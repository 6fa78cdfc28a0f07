#include "bsv/errors.hpp"
#include "bsv/fiber.hpp"
#include "bsv/fixtures.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace bsv;
using namespace bsv::fiber;

namespace {

EisensteinRational const z = EisensteinRational::zeta();

MultiPoly Q(char const* s) { return parse_poly(s, quadric_table()); }

BiWeight add_weights(std::vector<std::pair<char const*, int>> const& factors) {
    BiWeight w{0, 0};
    for (auto const& [name, power] : factors) {
        BiWeight const v = torus_weights()[quadric_table()->index_of(name)];
        w.first += power * v.first;
        w.second += power * v.second;
    }
    return w;
}

TEST(Fiber, TorusWeights) {
    auto const rel = test::relations();
    TorusCheck const c = torus_equivariance_check(rel);
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(*c.weights[0], add_weights({{"x0", 1}, {"x4", 1}}));
    EXPECT_EQ(*c.weights[0], add_weights({{"x2", 2}}));
    EXPECT_EQ(*c.weights[0], (BiWeight{2, 4}));
    EXPECT_EQ(*c.weights[26], add_weights({{"s", 1}, {"x2", 1}, {"x5", 1}}));
    EXPECT_EQ(*c.weights[26], (BiWeight{6, 4}));
    for (std::size_t i = 0; i < 27; ++i) {
        // Every monomial carries the weight reported for its relation.
        for (auto const& [e, coeff] : rel[i].terms()) {
            BiWeight w{0, 0};
            for (std::size_t k = 0; k < e.size(); ++k) {
                w.first += static_cast<long>(e[k]) * torus_weights()[k].first;
                w.second += static_cast<long>(e[k]) * torus_weights()[k].second;
            }
            EXPECT_EQ(w, *c.weights[i]) << "f" << i + 1;
        }
    }
}

TEST(Fiber, CorruptedRelationIsInhomogeneous) {
    auto rel = test::relations();
    rel[0] = Q("-3*z^2*x0*x5 - x1*x3 + x2^2");
    TorusCheck const c = torus_equivariance_check(rel);
    EXPECT_FALSE(c.ok());
    EXPECT_FALSE(c.weights[0].has_value());
    EXPECT_FALSE(c.errors[0].empty());
}

TEST(Fiber, CentralFiberPoints) {
    EXPECT_EQ(central_fiber_points(test::relations()), (std::vector<int>{0, 1, 7}));
    auto const p2 = coordinate_point(2);
    EXPECT_EQ(test::relations()[0].evaluate(p2).constant_term(), EisensteinRational(1));
}

TEST(Fiber, ReducedCone) {
    ReducedCone const c = reduced_cone_certificate(test::relations());
    EXPECT_EQ(c.dimension, 3u);
    EXPECT_TRUE(c.free_of_x1);
    EXPECT_TRUE(c.parametrization_ok);
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(c.sources, (std::vector<std::size_t>{1, 4, 8}));
    EXPECT_EQ(c.quadrics[0], Q("x2^2 - 3*z^2*x0*x4"));
    // c2² = 3ζ²c4 with c2 = 1.
    EXPECT_EQ(*c.c4, (EisensteinRational(3) * z * z).inverse());
    EXPECT_EQ(*c.c4, z / EisensteinRational(3));
    // c2·c4 + (ζ − ζ²)c7 = 0.
    EXPECT_EQ(*c.c7, -(*c.c4) / (z - z * z));
    // Third quadric x4² − (1−ζ²)/3·x2x7 on the cubic: c4² = (1−ζ²)/3·c7.
    EXPECT_EQ((*c.c4) * (*c.c4), (EisensteinRational(1) - z * z) / EisensteinRational(3) * (*c.c7));
}

TEST(Fiber, TangentDimensions) {
    auto const rel = test::relations();
    std::vector<std::string> const all{"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"};
    EXPECT_EQ(tangent_dimension(0, central_fiber_equations(rel), all), 3u);
    ReducedCone const c = reduced_cone_certificate(rel);
    EXPECT_EQ(tangent_dimension(0, c.quadrics, {"x2", "x4", "x7", "x1"}), 2u);
    EXPECT_EQ(tangent_dimension(0, {Q("x1")}, all), 8u);
    EXPECT_THROW(tangent_dimension(0, {Q("x1")}, {"x0", "x1"}), ArityError);
}

TEST(Fiber, JacobianDeterminantsMatchCofactorExpansion) {
    auto const rel = test::relations();
    for (auto const& spec : fixed_point_specs()) {
        ASSERT_EQ(spec.equations.size(), 7u);
        ASSERT_EQ(spec.variables.size(), 7u);
        SmoothnessResult const r = smoothness_certificate(spec, rel);
        EXPECT_TRUE(r.ok()) << "p" << spec.point;
        EXPECT_EQ(r.determinant, test::cofactor_determinant(r.jacobian)) << "p" << spec.point;
        // Chart coordinate is never a differentiation variable.
        EXPECT_EQ(std::count(spec.variables.begin(), spec.variables.end(), "x" + std::to_string(spec.point)), 0);
    }
}

TEST(Fiber, SingularJacobianIsReported) {
    JacobianSpec spec = fixed_point_specs()[0];
    spec.equations[6] = spec.equations[5];
    EXPECT_FALSE(smoothness_certificate(spec, test::relations()).ok());
}

TEST(Fiber, ConicWarmup) {
    ConicCheck const c = conic_warmup_check();
    EXPECT_TRUE(c.total_space_ok());
    EXPECT_TRUE(c.fibres_ok());
    // The fibre variable z clashes with the parser's ζ, so build by hand.
    VarTablePtr const t = c.form.table();
    auto var = [&](char const* n, std::uint32_t e = 1) { return MultiPoly::variable(t, n, e); };
    EXPECT_EQ(c.partials[0], var("x", 2));
    EXPECT_EQ(c.partials[1], var("y", 2));
    EXPECT_EQ(c.partials[4], EisensteinRational(2) * var("z"));
    EXPECT_EQ(c.hessian_determinant, EisensteinRational(8) * var("s") * var("t"));
    for (auto const& w : c.witnesses) {
        if (w.s0 == EisensteinRational(1) && w.t0 == EisensteinRational(1))
            EXPECT_FALSE(w.singular());
        if (w.s0.is_zero()) {
            EXPECT_TRUE(w.singular());
            // (1:0:0) lies on the fibre and kills every partial.
            EXPECT_TRUE(c.form.evaluate({{0, w.s0}, {1, w.t0}, {2, 1}, {3, 0}, {4, 0}}).is_zero());
        }
    }
}

} // namespace
