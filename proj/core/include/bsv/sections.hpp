#pragma once

// Spaces of cubic forms in u, v, w cut out by weight conditions, and the
// blow-up chart conditions that single out sections of the twisted
// anticanonical bundle.
//
// Cubic forms are coordinatized on the fixed 10-monomial frame
//     w³, uw², vw², u²w, uvw, v²w, u³, u²v, uv², v³
// whose s-weights are 3, 2, 1, 1, 0, 2, 3, 2, 1, 3. A form f satisfies
// s^a f ∈ S iff every monomial has weight ≤ a; the T-side condition is the
// same criterion read in the tilde coordinates ũ, ṽ, w̃.

#include "bsv/linalg.hpp"
#include "bsv/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsv::sections {

inline constexpr std::size_t kCubicFrameSize = 10;
/// Exponent triples (u, v, w) in frame order.
std::array<std::array<std::uint32_t, 3>, kCubicFrameSize> const& cubic_frame();
std::array<int, kCubicFrameSize> const& s_weight_table();

VarTablePtr uvw_table();

/// Frame coordinates of a cubic form. The input may live over any table; all
/// variables other than u, v, w must be absent. Throws Error otherwise.
Vector cubic_coordinates(MultiPoly const& cubic);
MultiPoly cubic_from_coordinates(Vector const& coords, VarTablePtr const& table);

struct SectionSpace {
    std::string grading;  // e.g. "s^2", "t^1", "(1,2)", "t-degree<=2"
    Subspace space;

    std::size_t dimension() const noexcept { return space.dimension(); }
};

/// The linear change of coordinates ũ = ζu+ζ²v+w, ṽ = ζ²u+ζv+w, w̃ = u+v+w.
struct TildeFrame {
    MultiPoly u_tilde;
    MultiPoly v_tilde;
    MultiPoly w_tilde;
    Matrix forward;   // row i: coefficients of the i-th tilde coordinate on (u, v, w)
    Matrix backward;  // row i: coefficients of u, v, w on (ũ, ṽ, w̃)
    VarTablePtr tilde_table;  // variables U V W standing for ũ ṽ w̃

    /// f(u, v, w) rewritten as a polynomial in U, V, W.
    MultiPoly to_tilde(MultiPoly const& cubic) const;
    /// g(ũ, ṽ, w̃) expanded back in u, v, w.
    MultiPoly from_tilde(MultiPoly const& g) const;
};

TildeFrame const& tilde_frame();

/// Largest s-weight of a monomial of the cubic; −1 for zero.
int s_weight(MultiPoly const& cubic);
/// Largest weight after rewriting in tilde coordinates; −1 for zero.
int t_weight(MultiPoly const& cubic);

SectionSpace s_membership_space(int a);
SectionSpace t_membership_space(int b);
SectionSpace intersection_cell(int a, int b);

/// Cyclic shift of order 3 acting on forms by pulling back along
/// (u:v:w) ↦ (w:u:v), i.e. substituting u→w, v→u, w→v; applied `times` times.
MultiPoly cyclic_shift(MultiPoly const& p, int times);

struct TildeCompatibility {
    bool shift_is_diagonal = false;   // shift maps (ũ, ṽ, w̃) to (ζũ, ζ²ṽ, w̃)
    bool identity_fixes = false;
    bool product_is_generator = false;  // ũṽw̃ = u³+v³+w³−3uvw
    std::array<EisensteinRational, 3> characters;  // observed eigenvalues of the shift
    EisensteinRational determinant;  // of the forward change-of-basis matrix

    bool ok() const { return shift_is_diagonal && identity_fixes && product_is_generator && !determinant.is_zero(); }
};

TildeCompatibility tilde_compatibility_check();

struct GeneratorCheck {
    std::size_t index = 0;  // 1-based
    int a = -1;
    int b = -1;
    bool bihomogeneous = false;
    bool member = false;
    std::string detail;
};

struct CellCheck {
    int a = 0;
    int b = 0;
    std::size_t generated_dimension = 0;
    std::size_t cell_dimension = 0;
    bool equal = false;
};

struct STBasisCertificate {
    std::vector<GeneratorCheck> generators;
    PolyMatrix matrix;          // 10×10 over k[s,t]; column j is generator j on the cubic frame
    MultiPoly determinant;
    std::vector<CellCheck> cells;  // 0 ≤ a, b ≤ 3

    bool membership_ok() const;
    bool freeness_ok() const { return !determinant.is_zero(); }
    bool generation_ok() const;
    bool ok() const { return membership_ok() && freeness_ok() && generation_ok(); }
};

/// Generators are polynomials over (s, t, u, v, w), cubic in u, v, w.
STBasisCertificate st_basis_certificate(std::vector<MultiPoly> const& generators);

// ---------------------------------------------------------------------------
// Blow-up charts of Spec k[t][u, v] (w = 1), with t³ = f.

struct ChartMap {
    std::string name;
    std::vector<std::string> coordinates;
    /// Images of t, u, v in the chart coordinates (w = 1).
    std::vector<std::pair<std::string, std::string>> substitution;
    std::vector<std::string> exceptional_equations;
    /// Monomial generating the membership ideal, for the charts that carry a condition.
    std::optional<std::string> membership_generator;

    VarTablePtr table() const;
};

std::vector<ChartMap> const& blowup_charts();
/// Throws Error for names that are not charts.
ChartMap const& chart(std::string_view name);

/// Residue of a cubic with coefficients in k[t] (table t u v w) after the
/// cyclic shift, w = 1, the chart substitution, and reduction modulo t³ and
/// the chart's membership monomial. Zero iff the membership condition holds.
/// Only charts with a membership generator are supported.
MultiPoly chart_image(MultiPoly const& cubic, ChartMap const& c, int shift);

/// Coordinates on the 30-element frame t^j·m (j = 0, 1, 2; m in the cubic
/// frame), index 10·j + frame index. Terms with t-degree ≥ 3 are dropped.
Vector truncated_coordinates(MultiPoly const& cubic);
MultiPoly truncated_from_coordinates(Vector const& coords);

struct LocalSectionCertificate {
    SectionSpace kernel;                        // K inside the 30-dimensional frame
    std::vector<bool> listed_members;           // each listed element passes all six conditions
    std::vector<long> listed_t_degrees;
    SectionSpace truncated_span;                // span of t^j·b_i with deg_t(b_i) + j ≤ 2
    std::size_t counted_dimension = 0;          // Σ max(0, 3 − deg_t b_i)
    bool t_stable = false;                      // t·K ⊆ K

    bool ok() const;
};

/// `listed` are cubic forms over (t, u, v, w).
LocalSectionCertificate local_section_space(std::vector<MultiPoly> const& listed);

} // namespace bsv::sections
