#pragma once

// Quadratic relations among the ten sections: the 165-element candidate
// frame {1, s, t} × (quadrics in x0..x9), the substitution map into
// k[s, t, u, v, w], and the certificate for the 27 defining quadrics.

#include "bsv/linalg.hpp"
#include "bsv/poly.hpp"
#include "bsv/sections.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsv::quadrics {

inline constexpr std::size_t kQuadricCount = 55;
inline constexpr std::size_t kFrameSize = 3 * kQuadricCount;
inline constexpr std::size_t kRelationCount = 27;

/// Index pairs (i, j), i ≤ j, of the quadrics x_i·x_j in frame order.
std::vector<std::pair<int, int>> const& quadric_monomials();

/// Frame element k = multiplier·x_i·x_j with multiplier 1, s, t for
/// k / 55 = 0, 1, 2. Lives over quadric_table().
MultiPoly frame_element(std::size_t k);

/// Coordinates of f in the frame, or an explanation of why f is not in it
/// (a monomial of wrong x-degree or with an s,t-part outside {1, s, t}).
struct FrameCoordinates {
    std::optional<Vector> coords;
    std::string reason;
};
FrameCoordinates frame_coordinates(MultiPoly const& f);

/// s ↦ s³, t ↦ t³, x_{i−1} ↦ basis[i−1]; result over (s, t, u, v, w).
MultiPoly substitute_sections(MultiPoly const& f, std::vector<MultiPoly> const& basis);

struct SubstitutionMatrix {
    Matrix matrix;                       // rows: monomials of k[s,t,u,v,w]; columns: frame elements
    std::vector<Exponents> row_monomials;
};

SubstitutionMatrix substitution_matrix(std::vector<MultiPoly> const& basis);

/// Kernel of the substitution matrix, inside the 165-dimensional frame.
sections::SectionSpace relation_space(SubstitutionMatrix const& m);

/// 27 × 55 matrix over k[s, t]: entry (i, q) is the coefficient of the q-th
/// quadric monomial in f_{i+1}.
PolyMatrix coefficient_matrix(std::vector<MultiPoly> const& relations);

struct RowCheck {
    std::size_t index = 0;  // 1-based
    bool in_frame = false;
    std::string frame_detail;
    MultiPoly residual;     // image under the substitution
    bool in_kernel = false; // frame vector lies in relation_space
};

struct Table1Certificate {
    std::vector<RowCheck> rows;
    std::size_t rank = 0;            // over k(s, t)
    std::size_t kernel_dimension = 0;

    bool frame_ok() const;
    bool vanishing_ok() const;
    bool independence_ok() const { return rank == rows.size(); }
    bool ok() const { return frame_ok() && vanishing_ok() && independence_ok(); }
};

Table1Certificate table1_certificate(std::vector<MultiPoly> const& relations, std::vector<MultiPoly> const& basis);

} // namespace bsv::quadrics
