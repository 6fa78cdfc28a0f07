#pragma once

// Geometry of the fiber over s = t = 0: torus weights, coordinate points,
// the reduced cone over a twisted cubic, tangent dimensions and the Jacobian
// criterion at the fixed points; plus the conic bundle s·x² + t·y² + z².

#include "bsv/linalg.hpp"
#include "bsv/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bsv::fiber {

/// Bi-weights of s, t, x0..x9 in quadric_table() order.
WeightVector const& torus_weights();

struct TorusCheck {
    std::vector<std::optional<BiWeight>> weights;  // per relation
    std::vector<std::string> errors;               // empty string when homogeneous

    bool ok() const;
};

TorusCheck torus_equivariance_check(std::vector<MultiPoly> const& relations);

/// Value assignment for quadric_table(): x_i = 1, everything else 0.
std::map<std::size_t, EisensteinRational> coordinate_point(int i);

/// Indices i with every relation vanishing at p_i, s = t = 0.
std::vector<int> central_fiber_points(std::vector<MultiPoly> const& relations);

struct ReducedCone {
    std::vector<std::size_t> sources;      // 1-based relations with nonzero specialization
    std::vector<MultiPoly> quadrics;       // their specializations, over quadric_table()
    std::size_t dimension = 0;             // k-dimension of their span
    bool free_of_x1 = false;
    // Parametrization x0 = λ³, x2 = c2·λ²μ, x4 = c4·λμ², x7 = c7·μ³.
    std::optional<EisensteinRational> c2, c4, c7;
    bool parametrization_ok = false;

    bool ok() const { return dimension == 3 && free_of_x1 && parametrization_ok; }
};

/// Sets s = t = x3 = x5 = x6 = x8 = x9 = 0 and solves for the cubic with c2 = 1.
ReducedCone reduced_cone_certificate(std::vector<MultiPoly> const& relations);

/// |vars| − rank of the Jacobian of `equations` with respect to `vars` at the
/// coordinate point p_point. Throws ArityError when x<point> is among vars.
std::size_t tangent_dimension(int point, std::vector<MultiPoly> const& equations,
                              std::vector<std::string> const& vars);

/// Relations with s = t = 0 substituted.
std::vector<MultiPoly> central_fiber_equations(std::vector<MultiPoly> const& relations);

struct JacobianSpec {
    int point = 0;
    std::vector<std::size_t> equations;  // 1-based
    std::vector<std::string> variables;
};

/// The specs for p0, p1, p7.
std::vector<JacobianSpec> const& fixed_point_specs();

struct SmoothnessResult {
    JacobianSpec spec;
    Matrix jacobian;
    EisensteinRational determinant;

    bool ok() const { return !determinant.is_zero(); }
};

SmoothnessResult smoothness_certificate(JacobianSpec const& spec, std::vector<MultiPoly> const& relations);

struct ConicWitness {
    EisensteinRational s0;
    EisensteinRational t0;
    std::size_t singular_dimension = 0;  // dim of the common kernel of the fibre partials
    bool kernel_on_conic = true;         // every kernel basis vector satisfies F = 0
    bool singular() const { return singular_dimension > 0; }
};

struct ConicCheck {
    MultiPoly form;
    std::vector<MultiPoly> partials;         // ∂/∂s, ∂/∂t, ∂/∂x, ∂/∂y, ∂/∂z
    std::vector<bool> ideal_contains;        // x², y², z
    MultiPoly hessian_determinant;           // of the fibre form in x, y, z
    std::vector<ConicWitness> witnesses;

    bool total_space_ok() const;
    /// Singular exactly when s0·t0 = 0 on every witness, and det = 8st.
    bool fibres_ok() const;
    bool ok() const { return total_space_ok() && fibres_ok(); }
};

ConicCheck conic_warmup_check();

} // namespace bsv::fiber
