#include "bsv/quadrics.hpp"

#include "bsv/errors.hpp"
#include "bsv/fixtures.hpp"

#include <algorithm>
#include <map>

namespace bsv::quadrics {

namespace {

constexpr std::size_t kS = 0;
constexpr std::size_t kT = 1;
constexpr std::size_t kX0 = 2;

VarTablePtr st_table() {
    static VarTablePtr const t = VarTable::make("s t");
    return t;
}

std::size_t quadric_index(int i, int j) {
    if (i > j)
        std::swap(i, j);
    auto const& q = quadric_monomials();
    auto it = std::find(q.begin(), q.end(), std::make_pair(i, j));
    return static_cast<std::size_t>(it - q.begin());
}

} // namespace

std::vector<std::pair<int, int>> const& quadric_monomials() {
    static std::vector<std::pair<int, int>> const q = [] {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < 10; ++i)
            for (int j = i; j < 10; ++j)
                out.emplace_back(i, j);
        return out;
    }();
    return q;
}

MultiPoly frame_element(std::size_t k) {
    if (k >= kFrameSize)
        throw ArityError("frame index out of range");
    VarTablePtr const t = quadric_table();
    Exponents e(t->size(), 0);
    std::size_t const mult = k / kQuadricCount;
    auto const [i, j] = quadric_monomials()[k % kQuadricCount];
    if (mult == 1)
        e[kS] = 1;
    else if (mult == 2)
        e[kT] = 1;
    e[kX0 + static_cast<std::size_t>(i)] += 1;
    e[kX0 + static_cast<std::size_t>(j)] += 1;
    return MultiPoly::monomial(t, e);
}

FrameCoordinates frame_coordinates(MultiPoly const& f) {
    MultiPoly const p = f.rebase(quadric_table());
    Vector coords(kFrameSize);
    for (auto const& [e, c] : p.terms()) {
        std::vector<int> xs;
        for (std::size_t i = 0; i < 10; ++i)
            for (std::uint32_t k = 0; k < e[kX0 + i]; ++k)
                xs.push_back(static_cast<int>(i));
        std::string const mono = to_string(MultiPoly::monomial(p.table(), e));
        if (xs.size() != 2)
            return {std::nullopt, "monomial " + mono + " has x-degree " + std::to_string(xs.size())};
        std::size_t mult = 0;
        if (e[kS] == 0 && e[kT] == 0)
            mult = 0;
        else if (e[kS] == 1 && e[kT] == 0)
            mult = 1;
        else if (e[kS] == 0 && e[kT] == 1)
            mult = 2;
        else
            return {std::nullopt, "monomial " + mono + " is not at most linear in s, t"};
        coords[mult * kQuadricCount + quadric_index(xs[0], xs[1])] += c;
    }
    return {std::move(coords), {}};
}

MultiPoly substitute_sections(MultiPoly const& f, std::vector<MultiPoly> const& basis) {
    if (basis.size() != 10)
        throw ArityError("expected 10 basis sections, got " + std::to_string(basis.size()));
    VarTablePtr const target = st_cubic_table();
    std::map<std::string, MultiPoly> assign{
        {"s", MultiPoly::variable(target, "s", 3)},
        {"t", MultiPoly::variable(target, "t", 3)},
    };
    for (std::size_t i = 0; i < 10; ++i)
        assign.emplace("x" + std::to_string(i), basis[i].rebase(target));
    return substitute(f.rebase(quadric_table()), assign, target);
}

SubstitutionMatrix substitution_matrix(std::vector<MultiPoly> const& basis) {
    std::vector<MultiPoly> images;
    images.reserve(kFrameSize);
    std::map<Exponents, std::size_t, GrlexLess> rows;
    for (std::size_t k = 0; k < kFrameSize; ++k) {
        images.push_back(substitute_sections(frame_element(k), basis));
        for (auto const& [e, c] : images.back().terms())
            rows.emplace(e, 0);
    }
    SubstitutionMatrix out{Matrix(rows.size(), kFrameSize), {}};
    std::size_t r = 0;
    for (auto& [e, idx] : rows) {
        idx = r++;
        out.row_monomials.push_back(e);
    }
    for (std::size_t k = 0; k < kFrameSize; ++k)
        for (auto const& [e, c] : images[k].terms())
            out.matrix(rows.at(e), k) = c;
    return out;
}

sections::SectionSpace relation_space(SubstitutionMatrix const& m) {
    return {"relations", Subspace::span(kernel_over_field(m.matrix), kFrameSize)};
}

PolyMatrix coefficient_matrix(std::vector<MultiPoly> const& relations) {
    PolyMatrix out(relations.size(), kQuadricCount, st_table());
    for (std::size_t r = 0; r < relations.size(); ++r) {
        MultiPoly const p = relations[r].rebase(quadric_table());
        for (auto const& [e, c] : p.terms()) {
            std::vector<int> xs;
            for (std::size_t i = 0; i < 10; ++i)
                for (std::uint32_t k = 0; k < e[kX0 + i]; ++k)
                    xs.push_back(static_cast<int>(i));
            if (xs.size() != 2)
                throw Error("relation f" + std::to_string(r + 1) + " is not quadratic in x");
            out(r, quadric_index(xs[0], xs[1])).add_term({e[kS], e[kT]}, c);
        }
    }
    return out;
}

bool Table1Certificate::frame_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](auto const& r) { return r.in_frame; });
}

bool Table1Certificate::vanishing_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](auto const& r) { return r.residual.is_zero(); });
}

Table1Certificate table1_certificate(std::vector<MultiPoly> const& relations, std::vector<MultiPoly> const& basis) {
    Table1Certificate cert;
    sections::SectionSpace const kernel = relation_space(substitution_matrix(basis));
    cert.kernel_dimension = kernel.dimension();
    for (std::size_t i = 0; i < relations.size(); ++i) {
        RowCheck row{i + 1, false, {}, substitute_sections(relations[i], basis), false};
        FrameCoordinates fc = frame_coordinates(relations[i]);
        row.in_frame = fc.coords.has_value();
        row.frame_detail = fc.reason;
        if (fc.coords)
            row.in_kernel = kernel.space.contains(*fc.coords);
        cert.rows.push_back(std::move(row));
    }
    cert.rank = rank_over_fraction_field(coefficient_matrix(relations));
    return cert;
}

} // namespace bsv::quadrics
