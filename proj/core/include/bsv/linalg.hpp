#pragma once

#include "bsv/poly.hpp"
#include "bsv/scalars.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bsv {

using Vector = std::vector<EisensteinRational>;

/// Dense matrix over Q(ζ), row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix from_rows(std::vector<Vector> const& rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    EisensteinRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    EisensteinRational const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<EisensteinRational const> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;

    Vector apply(Vector const& v) const;
    Matrix operator*(Matrix const& o) const;
    friend bool operator==(Matrix const& a, Matrix const& b) = default;

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<EisensteinRational> data_;
};

struct EchelonForm {
    Matrix reduced;                    // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Gauss–Jordan elimination; pivots are taken in column order, first nonzero row.
EchelonForm reduced_echelon(Matrix m);
std::size_t rank(Matrix const& m);
/// Determinant of a square constant matrix.
EisensteinRational determinant(Matrix const& m);
/// Inverse of a square constant matrix; throws DivisionByZero if singular.
Matrix inverse(Matrix const& m);

/// Basis of {v : M v = 0}, returned in canonical form: the reduced echelon
/// basis of the null space (first nonzero coordinate 1, ordered by pivot).
std::vector<Vector> kernel_over_field(Matrix const& m);

/// A subspace of Q(ζ)^ambient, stored by its unique reduced echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0);
    static Subspace span(std::vector<Vector> const& vectors, std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    std::vector<Vector> const& basis() const noexcept { return basis_; }

    bool contains(Vector const& v) const;
    bool contains(Subspace const& o) const;
    Subspace intersect(Subspace const& o) const;
    Subspace sum(Subspace const& o) const;

    friend bool operator==(Subspace const& a, Subspace const& b) = default;

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

/// Dense matrix of polynomials sharing one variable table.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, VarTablePtr table);
    static PolyMatrix identity(std::size_t n, VarTablePtr table);
    static PolyMatrix from_constants(Matrix const& m, VarTablePtr table);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    VarTablePtr const& table() const noexcept { return table_; }

    MultiPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    MultiPoly const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    PolyMatrix operator*(PolyMatrix const& o) const;
    PolyMatrix operator+(PolyMatrix const& o) const;
    PolyMatrix operator-(PolyMatrix const& o) const;
    PolyMatrix scaled(MultiPoly const& r) const;
    friend bool operator==(PolyMatrix const& a, PolyMatrix const& b);

    bool is_zero() const;
    /// Every entry must evaluate to a constant; throws otherwise.
    Matrix evaluate(std::map<std::size_t, EisensteinRational> const& values) const;
    /// All entries must already be constants.
    Matrix to_constant() const;
    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_;
    std::size_t cols_;
    VarTablePtr table_;
    std::vector<MultiPoly> data_;
};

/// Rank over the fraction field of the coefficient ring, by Bareiss
/// fraction-free elimination with exact polynomial division.
std::size_t rank_over_fraction_field(PolyMatrix m);
/// Determinant of a square polynomial matrix by Bareiss elimination.
MultiPoly determinant(PolyMatrix m);

/// Entry (i, j) = ∂polys[i]/∂vars[j].
PolyMatrix jacobian(std::vector<MultiPoly> const& polys, std::vector<std::string> const& vars);

using BiWeight = std::pair<long, long>;
/// One integer pair per variable of the polynomial's table.
using WeightVector = std::vector<BiWeight>;

/// Common bi-weight of all terms. Throws InhomogeneousError naming two
/// disagreeing terms, or Error for the zero polynomial.
BiWeight bi_weight(MultiPoly const& p, WeightVector const& w);

std::string to_string(Vector const& v);

} // namespace bsv
