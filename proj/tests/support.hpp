#pragma once

// Fixture access and independent oracles shared by the unit tests.

#include "bsv/fixtures.hpp"
#include "bsv/linalg.hpp"
#include "bsv/poly.hpp"

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace bsv::test {

inline std::filesystem::path fixture_path(std::string const& name) {
    return std::filesystem::path(BSV_FIXTURE_DIR) / name;
}

inline std::vector<MultiPoly> relations() {
    return labeled_sequence(parse_poly_file(read_text_file(fixture_path("table1.poly"))), "f", 27, quadric_table());
}

inline std::vector<MultiPoly> st_basis() {
    return labeled_sequence(parse_poly_file(read_text_file(fixture_path("st_basis.poly"))), "b", 10, st_cubic_table());
}

inline std::vector<MultiPoly> local_basis() {
    return labeled_sequence(parse_poly_file(read_text_file(fixture_path("local_basis.poly"))), "l", 10, t_cubic_table());
}

inline IntersectionTable intersections() {
    return parse_intersection_table(read_text_file(fixture_path("intersections.tbl")));
}

/// n/d in lowest terms; mpq_class(n, d) alone does not reduce.
inline BigRational frac(long n, long d) {
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

inline EisensteinRational random_scalar(std::mt19937_64& rng, long bound = 5) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, 3);
    return EisensteinRational::rational(num(rng), den(rng)) + EisensteinRational::rational(num(rng), den(rng)) * EisensteinRational::zeta();
}

inline MultiPoly random_poly(VarTablePtr const& t, std::mt19937_64& rng, int terms = 4, std::uint32_t max_exp = 2) {
    std::uniform_int_distribution<std::uint32_t> ex(0, max_exp);
    MultiPoly p(t);
    for (int k = 0; k < terms; ++k) {
        Exponents e(t->size());
        for (auto& x : e)
            x = ex(rng);
        p.add_term(e, random_scalar(rng));
    }
    return p;
}

/// Laplace expansion along the first row, memoized on the set of columns
/// still available. Independent of the elimination code.
template <class T>
T cofactor_determinant(std::vector<std::vector<T>> const& a, T const& zero, T const& one) {
    std::size_t const n = a.size();
    std::map<unsigned long, T> memo;
    auto rec = [&](auto&& self, std::size_t row, unsigned long cols) -> T {
        if (row == n)
            return one;
        if (auto it = memo.find(cols); it != memo.end())
            return it->second;
        T sum = zero;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(cols & (1UL << c)))
                continue;
            if (!(a[row][c] == zero)) {
                T term = a[row][c] * self(self, row + 1, cols & ~(1UL << c));
                sum = sign > 0 ? sum + term : sum - term;
            }
            sign = -sign;
        }
        memo.emplace(cols, sum);
        return sum;
    };
    return rec(rec, 0, (n == 0) ? 0UL : ((1UL << n) - 1));
}

inline EisensteinRational cofactor_determinant(Matrix const& m) {
    std::vector<std::vector<EisensteinRational>> a(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        a[r] = m.row_vector(r);
    return cofactor_determinant<EisensteinRational>(a, 0, 1);
}

inline MultiPoly cofactor_determinant(PolyMatrix const& m) {
    VarTablePtr const t = m.table();
    std::vector<std::vector<MultiPoly>> a(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r].push_back(m(r, c));
    return cofactor_determinant<MultiPoly>(a, MultiPoly(t), MultiPoly(t, 1));
}

} // namespace bsv::test
