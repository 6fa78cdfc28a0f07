#include "bsv/linalg.hpp"

#include "bsv/errors.hpp"

#include <algorithm>
#include <tuple>

namespace bsv {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(std::vector<Vector> const& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw ArityError("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                             ", expected " + std::to_string(cols));
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

Vector Matrix::apply(Vector const& v) const {
    if (v.size() != cols_)
        throw ArityError("matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero())
                out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix Matrix::operator*(Matrix const& o) const {
    if (cols_ != o.rows_)
        throw ArityError("matrix product size mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(r, k).is_zero())
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (!o(k, c).is_zero())
                    out(r, c) += (*this)(r, k) * o(k, c);
        }
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](auto const& x) { return x.is_zero(); });
}

EchelonForm reduced_echelon(Matrix m) {
    std::size_t const rows = m.rows();
    std::size_t const cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(p, j), m(r, j));
        EisensteinRational const inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero())
                m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            EisensteinRational const f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(Matrix const& m) {
    return reduced_echelon(m).pivots.size();
}

EisensteinRational determinant(Matrix const& m) {
    if (m.rows() != m.cols())
        throw ArityError("determinant of a non-square matrix");
    Matrix a = m;
    std::size_t const n = a.rows();
    EisensteinRational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero())
            ++p;
        if (p == n)
            return {};
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        EisensteinRational const inv = a(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero())
                continue;
            EisensteinRational const f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

Matrix inverse(Matrix const& m) {
    std::size_t const n = m.rows();
    if (n != m.cols())
        throw ArityError("inverse of a non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    EchelonForm e = reduced_echelon(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw DivisionByZero();
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = e.reduced(i, n + j);
    return out;
}

std::vector<Vector> kernel_over_field(Matrix const& m) {
    EchelonForm e = reduced_echelon(m);
    std::size_t const cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> raw;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.reduced(r, f).is_zero())
                v[e.pivots[r]] = -e.reduced(r, f);
        raw.push_back(std::move(v));
    }
    return Subspace::span(raw, cols).basis();
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {}

Subspace Subspace::span(std::vector<Vector> const& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty())
        return s;
    EchelonForm e = reduced_echelon(Matrix::from_rows(vectors, ambient));
    for (std::size_t r = 0; r < e.reduced.rows(); ++r)
        s.basis_.push_back(e.reduced.row_vector(r));
    return s;
}

bool Subspace::contains(Vector const& v) const {
    if (v.size() != ambient_)
        throw ArityError("vector length does not match subspace ambient dimension");
    std::vector<Vector> rows = basis_;
    rows.push_back(v);
    return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(Subspace const& o) const {
    return sum(o).dimension() == dimension();
}

Subspace Subspace::sum(Subspace const& o) const {
    if (o.ambient_ != ambient_)
        throw ArityError("subspaces of different ambient spaces");
    std::vector<Vector> rows = basis_;
    rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
    return span(rows, ambient_);
}

Subspace Subspace::intersect(Subspace const& o) const {
    if (o.ambient_ != ambient_)
        throw ArityError("subspaces of different ambient spaces");
    // Solve Σ a_i b_i − Σ c_j b'_j = 0; the intersection is spanned by Σ a_i b_i.
    std::size_t const n = basis_.size() + o.basis_.size();
    if (basis_.empty() || o.basis_.empty())
        return Subspace(ambient_);
    Matrix stacked(ambient_, n);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t k = 0; k < ambient_; ++k)
            stacked(k, i) = basis_[i][k];
    for (std::size_t j = 0; j < o.basis_.size(); ++j)
        for (std::size_t k = 0; k < ambient_; ++k)
            stacked(k, basis_.size() + j) = -o.basis_[j][k];
    std::vector<Vector> members;
    for (auto const& coeffs : kernel_over_field(stacked)) {
        Vector v(ambient_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (!coeffs[i].is_zero())
                for (std::size_t k = 0; k < ambient_; ++k)
                    v[k] += coeffs[i] * basis_[i][k];
        members.push_back(std::move(v));
    }
    return span(members, ambient_);
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarTablePtr table)
    : rows_(rows), cols_(cols), table_(std::move(table)), data_(rows * cols, MultiPoly(table_)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, VarTablePtr table) {
    PolyMatrix m(n, n, table);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = MultiPoly(table, EisensteinRational(1));
    return m;
}

PolyMatrix PolyMatrix::from_constants(Matrix const& c, VarTablePtr table) {
    PolyMatrix m(c.rows(), c.cols(), table);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            m(i, j) = MultiPoly(table, c(i, j));
    return m;
}

PolyMatrix PolyMatrix::operator*(PolyMatrix const& o) const {
    if (cols_ != o.rows_)
        throw ArityError("matrix product size mismatch");
    PolyMatrix out(rows_, o.cols_, table_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            MultiPoly const& a = (*this)(r, k);
            if (a.is_zero())
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (!o(k, c).is_zero())
                    out(r, c) += a * o(k, c);
        }
    return out;
}

PolyMatrix PolyMatrix::operator+(PolyMatrix const& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ArityError("matrix sum size mismatch");
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += o.data_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(PolyMatrix const& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ArityError("matrix difference size mismatch");
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= o.data_[i];
    return out;
}

PolyMatrix PolyMatrix::scaled(MultiPoly const& r) const {
    PolyMatrix out = *this;
    for (auto& e : out.data_)
        if (!e.is_zero())
            e *= r;
    return out;
}

bool operator==(PolyMatrix const& a, PolyMatrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](auto const& p) { return p.is_zero(); });
}

Matrix PolyMatrix::evaluate(std::map<std::size_t, EisensteinRational> const& values) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            MultiPoly const v = (*this)(i, j).evaluate(values);
            if (!v.is_constant())
                throw Error("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not constant after evaluation: " + to_string(v));
            out(i, j) = v.constant_term();
        }
    return out;
}

Matrix PolyMatrix::to_constant() const {
    return evaluate({});
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

namespace {

// Cheapest pivot: fewest terms, then lowest degree, then lowest row index.
std::size_t choose_pivot(PolyMatrix const& m, std::size_t from, std::size_t col) {
    std::size_t best = m.rows();
    std::tuple<std::size_t, long> best_key{};
    for (std::size_t i = from; i < m.rows(); ++i) {
        MultiPoly const& e = m(i, col);
        if (e.is_zero())
            continue;
        std::tuple<std::size_t, long> key{e.term_count(), e.total_degree()};
        if (best == m.rows() || key < best_key) {
            best = i;
            best_key = key;
        }
    }
    return best;
}

struct BareissResult {
    std::size_t rank = 0;
    bool negated = false;
    MultiPoly last_pivot;
};

// In-place fraction-free elimination. After step k every entry below the
// pivot rows is a (k+1)-minor of the input, so the division is exact.
BareissResult bareiss(PolyMatrix& m) {
    VarTablePtr const table = m.table();
    MultiPoly prev(table, EisensteinRational(1));
    BareissResult out{0, false, prev};
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t const p = choose_pivot(m, r, c);
        if (p == m.rows())
            continue;
        if (p != r) {
            m.swap_rows(p, r);
            out.negated = !out.negated;
        }
        MultiPoly const pivot = m(r, c);
        bool const prev_constant = prev.is_constant();
        EisensteinRational const prev_inv = prev_constant ? prev.constant_term().inverse() : EisensteinRational{};
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            MultiPoly const lead = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                MultiPoly& entry = m(i, j);
                if (entry.is_zero() && (lead.is_zero() || m(r, j).is_zero()))
                    continue;
                MultiPoly num = pivot * entry;
                if (!lead.is_zero() && !m(r, j).is_zero())
                    num -= lead * m(r, j);
                if (prev_constant) {
                    num *= prev_inv;
                    entry = std::move(num);
                } else {
                    auto q = exact_divide(num, prev);
                    if (!q)
                        throw Error("Bareiss step produced an inexact division");
                    entry = std::move(*q);
                }
            }
            m(i, c) = MultiPoly(table);
        }
        prev = pivot;
        out.last_pivot = pivot;
        ++r;
    }
    out.rank = r;
    return out;
}

} // namespace

std::size_t rank_over_fraction_field(PolyMatrix m) {
    return bareiss(m).rank;
}

MultiPoly determinant(PolyMatrix m) {
    if (m.rows() != m.cols())
        throw ArityError("determinant of a non-square matrix");
    if (m.rows() == 0)
        return MultiPoly(m.table(), EisensteinRational(1));
    BareissResult const b = bareiss(m);
    if (b.rank < m.rows())
        return MultiPoly(m.table());
    return b.negated ? -b.last_pivot : b.last_pivot;
}

PolyMatrix jacobian(std::vector<MultiPoly> const& polys, std::vector<std::string> const& vars) {
    if (polys.empty())
        throw ArityError("jacobian of an empty polynomial list");
    VarTablePtr const table = polys.front().table();
    std::vector<std::size_t> idx;
    for (auto const& v : vars)
        idx.push_back(table->index_of(v));
    PolyMatrix out(polys.size(), vars.size(), table);
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            out(i, j) = polys[i].rebase(table).derivative(idx[j]);
    return out;
}

BiWeight bi_weight(MultiPoly const& p, WeightVector const& w) {
    if (w.size() != p.table()->size())
        throw ArityError("weight vector length does not match table arity");
    if (p.is_zero())
        throw Error("bi-weight of the zero polynomial");
    auto weight_of = [&](Exponents const& e) {
        BiWeight acc{0, 0};
        for (std::size_t i = 0; i < e.size(); ++i) {
            acc.first += static_cast<long>(e[i]) * w[i].first;
            acc.second += static_cast<long>(e[i]) * w[i].second;
        }
        return acc;
    };
    auto const& first = *p.terms().rbegin();
    BiWeight const expected = weight_of(first.first);
    for (auto const& [e, c] : p.terms()) {
        BiWeight const got = weight_of(e);
        if (got != expected) {
            auto term = [&](Exponents const& ex, EisensteinRational const& co, BiWeight const& bw) {
                return to_string(MultiPoly::monomial(p.table(), ex, co)) + " has weight (" +
                       std::to_string(bw.first) + "," + std::to_string(bw.second) + ")";
            };
            throw InhomogeneousError("inhomogeneous: " + term(first.first, first.second, expected) + " but " +
                                     term(e, c, got));
        }
    }
    return expected;
}

std::string to_string(Vector const& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(v[i]);
    }
    return out + "]";
}

} // namespace bsv
