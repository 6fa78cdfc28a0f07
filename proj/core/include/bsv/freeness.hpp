#pragma once

// The quotient of k[s, t, x0..x9] by the 27 quadrics as a module over
// R = k[s, t, x0, x1, x7] with basis 1, x2, x3, x4, x5, x5², x6, x8, x9.
// Each relation is solved for its monic head monomial; normal forms are
// computed by rewriting, and multiplication by x_i becomes a 9×9 matrix
// over R.

#include "bsv/linalg.hpp"
#include "bsv/poly.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace bsv::freeness {

inline constexpr std::size_t kModuleRank = 9;
inline constexpr std::size_t kMaxRewrites = 10000;

/// Variables of the base ring R, in this order: s t x0 x1 x7.
VarTablePtr base_table();
/// Indices i of the seven non-base variables x_i.
std::array<int, 7> const& fibre_variables();
/// Basis elements over quadric_table(), in module order.
std::vector<MultiPoly> const& module_basis();
std::array<std::string, kModuleRank> const& module_basis_names();

struct Rule {
    std::size_t relation = 0;  // 1-based index into the relation list
    Exponents head;            // over quadric_table()
    MultiPoly replacement;     // head ≡ replacement modulo the relation
};

class RewriteSystem {
public:
    /// Throws Error when a relation has no unique monic head or heads repeat.
    explicit RewriteSystem(std::vector<MultiPoly> const& relations);

    std::vector<Rule> const& rules() const noexcept { return rules_; }
    /// Heads plus x5² equal all 28 quadratic monomials in the fibre variables.
    bool heads_cover() const;

    /// Coordinates over R on module_basis(). Throws Error when the rewrite
    /// count exceeds kMaxRewrites.
    std::vector<MultiPoly> normal_form(MultiPoly const& p) const;
    /// Σ coords[j]·basis[j] over quadric_table().
    static MultiPoly expand(std::vector<MultiPoly> const& coords);

private:
    std::vector<Rule> rules_;
    std::vector<std::optional<std::size_t>> by_pair_;  // index 10·a + b, a ≤ b
};

/// Column j is the normal form of x_i · basis_j. i must be a fibre variable.
PolyMatrix multiplication_matrix(RewriteSystem const& rs, int i);

struct PairResult {
    int i = 0;
    int j = 0;
    bool commute = false;
    std::string detail;  // first nonzero entry when they do not commute
};

struct RelationResult {
    std::size_t index = 0;  // 1-based
    bool vanishes = false;
    std::string detail;     // first nonzero residual entry
};

struct FreenessCertificate {
    std::size_t rule_count = 0;
    bool heads_cover = false;
    std::vector<int> indices;             // 2 3 4 5 6 8 9
    std::vector<PolyMatrix> matrices;     // matching `indices`
    std::vector<PairResult> commutators;  // 21 unordered pairs
    std::vector<RelationResult> relations;

    bool commutation_ok() const;
    bool relations_ok() const;
    bool ok() const { return heads_cover && commutation_ok() && relations_ok(); }
    /// Flatness over the (s, t)-plane follows from freeness.
    bool flat() const { return ok(); }
};

/// Substitutes M_i for x_i and r·I for base variables r.
PolyMatrix evaluate_on_matrices(MultiPoly const& f, std::vector<int> const& indices,
                                std::vector<PolyMatrix> const& matrices);

FreenessCertificate freeness_certificate(std::vector<MultiPoly> const& relations);

/// Writes M<i>.poly for each matrix, entries labeled m<row>_<col> (1-based).
void dump_matrices(FreenessCertificate const& cert, std::filesystem::path const& dir);

} // namespace bsv::freeness
