#include "bsv/sections.hpp"

#include "bsv/errors.hpp"
#include "bsv/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bsv::sections {

namespace {

using Triple = std::array<std::uint32_t, 3>;

int weight_of(Triple const& e) {
    auto const& frame = cubic_frame();
    for (std::size_t i = 0; i < kCubicFrameSize; ++i)
        if (frame[i] == e)
            return s_weight_table()[i];
    throw Error("not a cubic monomial");
}

std::size_t frame_index(Triple const& e) {
    auto const& frame = cubic_frame();
    for (std::size_t i = 0; i < kCubicFrameSize; ++i)
        if (frame[i] == e)
            return i;
    throw Error("monomial u^" + std::to_string(e[0]) + "*v^" + std::to_string(e[1]) + "*w^" +
                std::to_string(e[2]) + " is not cubic");
}

struct UvwIndex {
    std::size_t u, v, w;
};

UvwIndex uvw_positions(VarTable const& t) {
    auto u = t.find("u");
    auto v = t.find("v");
    auto w = t.find("w");
    if (!u || !v || !w)
        throw ArityError("table lacks one of the variables u, v, w");
    return {*u, *v, *w};
}

// Weight criterion on a polynomial whose variables are (in order) the three
// coordinates of the frame, e.g. (u, v, w) or (U, V, W).
int max_frame_weight(MultiPoly const& p) {
    int w = -1;
    for (auto const& [e, c] : p.terms()) {
        if (e.size() != 3)
            throw Error("weight criterion expects a three-variable form");
        w = std::max(w, weight_of({e[0], e[1], e[2]}));
    }
    return w;
}

Subspace monomial_span(int max_weight) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < kCubicFrameSize; ++i) {
        if (s_weight_table()[i] <= max_weight) {
            Vector v(kCubicFrameSize);
            v[i] = 1;
            rows.push_back(std::move(v));
        }
    }
    return Subspace::span(rows, kCubicFrameSize);
}

// Splits a polynomial over (s, t, u, v, w) into its bigraded components.
std::map<std::pair<int, int>, MultiPoly> split_st(MultiPoly const& p) {
    VarTable const& t = *p.table();
    auto const s_idx = t.index_of("s");
    auto const t_idx = t.index_of("t");
    std::map<std::pair<int, int>, MultiPoly> out;
    for (auto const& [e, c] : p.terms()) {
        std::pair<int, int> const key{static_cast<int>(e[s_idx]), static_cast<int>(e[t_idx])};
        Exponents rest = e;
        rest[s_idx] = 0;
        rest[t_idx] = 0;
        auto it = out.try_emplace(key, MultiPoly(p.table())).first;
        it->second.add_term(rest, c);
    }
    for (auto& [k, comp] : out)
        comp = comp.rebase(uvw_table());
    return out;
}

} // namespace

std::array<Triple, kCubicFrameSize> const& cubic_frame() {
    static std::array<Triple, kCubicFrameSize> const frame{{
        {0, 0, 3},  // w³
        {1, 0, 2},  // uw²
        {0, 1, 2},  // vw²
        {2, 0, 1},  // u²w
        {1, 1, 1},  // uvw
        {0, 2, 1},  // v²w
        {3, 0, 0},  // u³
        {2, 1, 0},  // u²v
        {1, 2, 0},  // uv²
        {0, 3, 0},  // v³
    }};
    return frame;
}

std::array<int, kCubicFrameSize> const& s_weight_table() {
    static std::array<int, kCubicFrameSize> const weights{3, 2, 1, 1, 0, 2, 3, 2, 1, 3};
    return weights;
}

VarTablePtr uvw_table() {
    static VarTablePtr const t = VarTable::make("u v w");
    return t;
}

Vector cubic_coordinates(MultiPoly const& cubic) {
    UvwIndex const ix = uvw_positions(*cubic.table());
    Vector out(kCubicFrameSize);
    for (auto const& [e, c] : cubic.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && i != ix.u && i != ix.v && i != ix.w)
                throw Error("cubic form involves variable '" + cubic.table()->name(i) + "'");
        out[frame_index({e[ix.u], e[ix.v], e[ix.w]})] += c;
    }
    return out;
}

MultiPoly cubic_from_coordinates(Vector const& coords, VarTablePtr const& table) {
    if (coords.size() != kCubicFrameSize)
        throw ArityError("cubic coordinate vector must have length 10");
    UvwIndex const ix = uvw_positions(*table);
    MultiPoly out(table);
    for (std::size_t i = 0; i < kCubicFrameSize; ++i) {
        Exponents e(table->size(), 0);
        e[ix.u] = cubic_frame()[i][0];
        e[ix.v] = cubic_frame()[i][1];
        e[ix.w] = cubic_frame()[i][2];
        out.add_term(e, coords[i]);
    }
    return out;
}

MultiPoly TildeFrame::to_tilde(MultiPoly const& cubic) const {
    MultiPoly const f = cubic.rebase(uvw_table());
    std::map<std::string, MultiPoly> assign;
    char const* names[3] = {"u", "v", "w"};
    char const* tilde_names[3] = {"U", "V", "W"};
    for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly img(tilde_table);
        for (std::size_t j = 0; j < 3; ++j)
            img += MultiPoly::variable(tilde_table, tilde_names[j]) * backward(i, j);
        assign.emplace(names[i], img);
    }
    return substitute(f, assign, tilde_table);
}

MultiPoly TildeFrame::from_tilde(MultiPoly const& g) const {
    return substitute(g.rebase(tilde_table), {{"U", u_tilde}, {"V", v_tilde}, {"W", w_tilde}}, uvw_table());
}

TildeFrame const& tilde_frame() {
    static TildeFrame const frame = [] {
        VarTablePtr const t = uvw_table();
        EisensteinRational const z = EisensteinRational::zeta();
        EisensteinRational const z2 = z * z;
        Matrix forward = Matrix::from_rows({{z, z2, 1}, {z2, z, 1}, {1, 1, 1}}, 3);
        auto lin = [&](std::size_t row) {
            return MultiPoly::variable(t, "u") * forward(row, 0) + MultiPoly::variable(t, "v") * forward(row, 1) +
                   MultiPoly::variable(t, "w") * forward(row, 2);
        };
        TildeFrame f{lin(0), lin(1), lin(2), forward, inverse(forward), VarTable::make("U V W")};
        return f;
    }();
    return frame;
}

int s_weight(MultiPoly const& cubic) {
    return max_frame_weight(cubic.rebase(uvw_table()));
}

int t_weight(MultiPoly const& cubic) {
    return max_frame_weight(tilde_frame().to_tilde(cubic));
}

SectionSpace s_membership_space(int a) {
    return {"s^" + std::to_string(a), monomial_span(std::min(a, 3))};
}

SectionSpace t_membership_space(int b) {
    TildeFrame const& tf = tilde_frame();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < kCubicFrameSize; ++i) {
        if (s_weight_table()[i] > b)
            continue;
        Exponents e{cubic_frame()[i][0], cubic_frame()[i][1], cubic_frame()[i][2]};
        rows.push_back(cubic_coordinates(tf.from_tilde(MultiPoly::monomial(tf.tilde_table, e))));
    }
    return {"t^" + std::to_string(b), Subspace::span(rows, kCubicFrameSize)};
}

SectionSpace intersection_cell(int a, int b) {
    return {"(" + std::to_string(a) + "," + std::to_string(b) + ")",
            s_membership_space(a).space.intersect(t_membership_space(b).space)};
}

MultiPoly cyclic_shift(MultiPoly const& p, int times) {
    VarTablePtr const& t = p.table();
    MultiPoly out = p;
    int const n = ((times % 3) + 3) % 3;
    for (int k = 0; k < n; ++k)
        out = substitute(out, {{"u", MultiPoly::variable(t, "w")},
                               {"v", MultiPoly::variable(t, "u")},
                               {"w", MultiPoly::variable(t, "v")}});
    return out;
}

TildeCompatibility tilde_compatibility_check() {
    TildeFrame const& tf = tilde_frame();
    TildeCompatibility out;
    out.determinant = determinant(tf.forward);

    std::array<MultiPoly const*, 3> const coords{&tf.u_tilde, &tf.v_tilde, &tf.w_tilde};
    EisensteinRational const z = EisensteinRational::zeta();
    std::array<EisensteinRational, 3> const expected{z, z * z, 1};
    out.shift_is_diagonal = true;
    out.identity_fixes = true;
    for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly const shifted = cyclic_shift(*coords[i], 1);
        // Read off the eigenvalue from the w-coefficient, which is 1 in every tilde coordinate.
        EisensteinRational const lambda = shifted.coefficient({0, 0, 1});
        out.characters[i] = lambda;
        if (shifted != *coords[i] * expected[i])
            out.shift_is_diagonal = false;
        if (cyclic_shift(*coords[i], 0) != *coords[i])
            out.identity_fixes = false;
    }

    VarTablePtr const t = uvw_table();
    MultiPoly const u = MultiPoly::variable(t, "u");
    MultiPoly const v = MultiPoly::variable(t, "v");
    MultiPoly const w = MultiPoly::variable(t, "w");
    MultiPoly const generator = u.pow(3) + v.pow(3) + w.pow(3) - u * v * w * EisensteinRational(3);
    out.product_is_generator = tf.u_tilde * tf.v_tilde * tf.w_tilde == generator;
    return out;
}

bool STBasisCertificate::membership_ok() const {
    return std::all_of(generators.begin(), generators.end(), [](auto const& g) { return g.member; });
}

bool STBasisCertificate::generation_ok() const {
    return !cells.empty() && std::all_of(cells.begin(), cells.end(), [](auto const& c) { return c.equal; });
}

STBasisCertificate st_basis_certificate(std::vector<MultiPoly> const& generators) {
    VarTablePtr const st = VarTable::make("s t");
    STBasisCertificate cert{{}, PolyMatrix(kCubicFrameSize, generators.size(), st), MultiPoly(st), {}};

    std::vector<std::pair<std::pair<int, int>, Vector>> homogeneous;
    for (std::size_t j = 0; j < generators.size(); ++j) {
        GeneratorCheck g;
        g.index = j + 1;
        auto const parts = split_st(generators[j]);
        g.bihomogeneous = parts.size() == 1;
        g.member = !parts.empty();
        for (auto const& [cell, cubic] : parts) {
            int const sw = s_weight(cubic);
            int const tw = t_weight(cubic);
            bool const in_s = sw <= std::min(cell.first, 3);
            bool const in_t = tw <= std::min(cell.second, 3);
            if (!in_s || !in_t) {
                g.member = false;
                g.detail += "component s^" + std::to_string(cell.first) + "*t^" + std::to_string(cell.second) +
                            (in_s ? "" : " fails S (weight " + std::to_string(sw) + ")") +
                            (in_t ? "" : " fails T (weight " + std::to_string(tw) + ")") + "; ";
            }
            Vector const coords = cubic_coordinates(cubic);
            for (std::size_t i = 0; i < kCubicFrameSize; ++i) {
                Exponents e{static_cast<std::uint32_t>(cell.first), static_cast<std::uint32_t>(cell.second)};
                cert.matrix(i, j).add_term(e, coords[i]);
            }
            if (g.bihomogeneous) {
                g.a = cell.first;
                g.b = cell.second;
                homogeneous.emplace_back(cell, coords);
            }
        }
        if (parts.empty())
            g.detail = "zero generator";
        else if (!g.bihomogeneous)
            g.detail += "not bihomogeneous in s, t";
        cert.generators.push_back(std::move(g));
    }

    if (generators.size() == kCubicFrameSize)
        cert.determinant = determinant(cert.matrix);

    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            std::vector<Vector> rows;
            for (auto const& [cell, coords] : homogeneous)
                if (cell.first <= a && cell.second <= b)
                    rows.push_back(coords);
            Subspace const generated = Subspace::span(rows, kCubicFrameSize);
            SectionSpace const expected = intersection_cell(a, b);
            cert.cells.push_back(
                {a, b, generated.dimension(), expected.dimension(), generated == expected.space});
        }
    return cert;
}

// ---------------------------------------------------------------------------

VarTablePtr ChartMap::table() const {
    return VarTable::make(coordinates);
}

std::vector<ChartMap> const& blowup_charts() {
    static std::vector<ChartMap> const charts{
        {"1", {"u", "t1", "v1"}, {{"t", "u*t1"}, {"u", "u"}, {"v", "u*v1"}}, {"E1: u = 0", "Wc: u = v1 = 0"}, {}},
        {"2", {"v", "t2", "u2"}, {{"t", "v*t2"}, {"u", "v*u2"}, {"v", "v"}},
         {"E1: v = 0", "lambda: t2 = u2 = 0"}, {}},
        {"3", {"t", "u3", "v3"}, {{"t", "t"}, {"u", "t*u3"}, {"v", "t*v3"}}, {"E1: t = 0", "Wc: t = v3 = 0"}, {}},
        {"1'", {"u", "t1", "v1p"}, {{"t", "u*t1"}, {"u", "u"}, {"v", "u^2*v1p"}},
         {"E2: u = 0", "lambda: t1 = v1p = 0"}, {}},
        {"1''", {"t1", "v1", "upp"}, {{"t", "v1*upp*t1"}, {"u", "v1*upp"}, {"v", "v1^2*upp"}}, {"E2: v1 = 0"}, {}},
        {"3'", {"t", "u3", "v3p"}, {{"t", "t"}, {"u", "t*u3"}, {"v", "t^2*v3p"}}, {"E2: t = 0"}, {}},
        {"3''", {"u3", "v3", "tpp"}, {{"t", "v3*tpp"}, {"u", "v3*tpp*u3"}, {"v", "v3^2*tpp"}}, {"E2: v3 = 0"}, {}},
        {"1'a", {"u", "t1", "v1a"}, {{"t", "u*t1"}, {"u", "u"}, {"v", "u^2*t1*v1a"}}, {"E3: t1 = 0"}, "u^3*t1"},
        {"2a", {"v", "t2", "u2a"}, {{"t", "v*t2"}, {"u", "v*t2*u2a"}, {"v", "v"}}, {"E3: t2 = 0"}, "v^2*t2"},
    };
    return charts;
}

ChartMap const& chart(std::string_view name) {
    for (auto const& c : blowup_charts())
        if (c.name == name)
            return c;
    throw Error("unknown chart '" + std::string(name) + "'");
}

MultiPoly chart_image(MultiPoly const& cubic, ChartMap const& c, int shift) {
    if (!c.membership_generator)
        throw Error("chart " + c.name + " carries no membership condition");
    VarTablePtr const src = t_cubic_table();
    MultiPoly input = cubic.rebase(src);

    // f = t³ vanishes in the target, so drop t-degree ≥ 3 up front.
    MultiPoly truncated(src);
    for (auto const& [e, coeff] : input.terms())
        if (e[0] < 3)
            truncated.add_term(e, coeff);

    MultiPoly const shifted = cyclic_shift(truncated, shift);
    VarTablePtr const target = c.table();
    std::map<std::string, MultiPoly> assign{{"w", MultiPoly(target, EisensteinRational(1))}};
    for (auto const& [var, image] : c.substitution)
        assign.insert_or_assign(var, parse_poly(image, target));
    MultiPoly const image = substitute(shifted, assign, target);

    MultiPoly const gen = parse_poly(*c.membership_generator, target);
    Exponents const g = gen.leading_term().first;
    MultiPoly residue(target);
    for (auto const& [e, coeff] : image.terms()) {
        bool divisible = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < g[i])
                divisible = false;
        if (!divisible)
            residue.add_term(e, coeff);
    }
    return residue;
}

Vector truncated_coordinates(MultiPoly const& cubic) {
    MultiPoly const p = cubic.rebase(t_cubic_table());
    Vector out(3 * kCubicFrameSize);
    for (auto const& [e, c] : p.terms()) {
        if (e[0] >= 3)
            continue;
        if (e[1] + e[2] + e[3] != 3)
            throw Error("truncated section is not cubic in u, v, w");
        out[kCubicFrameSize * e[0] + frame_index({e[1], e[2], e[3]})] += c;
    }
    return out;
}

MultiPoly truncated_from_coordinates(Vector const& coords) {
    if (coords.size() != 3 * kCubicFrameSize)
        throw ArityError("truncated coordinate vector must have length 30");
    VarTablePtr const t = t_cubic_table();
    MultiPoly out(t);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < kCubicFrameSize; ++i) {
            auto const& m = cubic_frame()[i];
            out.add_term({static_cast<std::uint32_t>(j), m[0], m[1], m[2]}, coords[kCubicFrameSize * j + i]);
        }
    return out;
}

bool LocalSectionCertificate::ok() const {
    return std::all_of(listed_members.begin(), listed_members.end(), [](bool b) { return b; }) &&
           truncated_span.space == kernel.space && counted_dimension == kernel.dimension() && t_stable;
}

LocalSectionCertificate local_section_space(std::vector<MultiPoly> const& listed) {
    std::size_t const frame_size = 3 * kCubicFrameSize;
    std::vector<ChartMap const*> const conditions{&chart("1'a"), &chart("2a")};

    // One constraint row per (chart, shift, residue monomial).
    std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, EisensteinRational>>> rows;
    for (std::size_t k = 0; k < frame_size; ++k) {
        Vector unit(frame_size);
        unit[k] = 1;
        MultiPoly const element = truncated_from_coordinates(unit);
        for (std::size_t ci = 0; ci < conditions.size(); ++ci)
            for (int shift = 0; shift < 3; ++shift) {
                MultiPoly const residue = chart_image(element, *conditions[ci], shift);
                for (auto const& [e, c] : residue.terms()) {
                    auto key = std::make_pair(ci * 3 + static_cast<std::size_t>(shift), e);
                    auto [it, fresh] = row_of.try_emplace(key, rows.size());
                    if (fresh)
                        rows.emplace_back();
                    rows[it->second].emplace_back(k, c);
                }
            }
    }
    Matrix constraints(rows.size(), frame_size);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto const& [k, c] : rows[r])
            constraints(r, k) += c;

    LocalSectionCertificate cert;
    cert.kernel = {"t-degree<=2", Subspace::span(kernel_over_field(constraints), frame_size)};

    std::vector<Vector> multiples;
    for (auto const& b : listed) {
        bool member = true;
        for (auto const* c : conditions)
            for (int shift = 0; shift < 3; ++shift)
                if (!chart_image(b, *c, shift).is_zero())
                    member = false;
        cert.listed_members.push_back(member);

        MultiPoly const p = b.rebase(t_cubic_table());
        long const d = p.degree_in(0);
        cert.listed_t_degrees.push_back(d);
        MultiPoly shifted = p;
        MultiPoly const t = MultiPoly::variable(t_cubic_table(), "t");
        for (long j = 0; d + j <= 2; ++j) {
            multiples.push_back(truncated_coordinates(shifted));
            shifted *= t;
        }
        cert.counted_dimension += static_cast<std::size_t>(std::max(0L, 3 - d));
    }
    cert.truncated_span = {"t-degree<=2", Subspace::span(multiples, frame_size)};

    cert.t_stable = true;
    for (auto const& v : cert.kernel.space.basis()) {
        Vector tv(frame_size);
        for (std::size_t k = 0; k + kCubicFrameSize < frame_size; ++k)
            tv[k + kCubicFrameSize] = v[k];
        if (!cert.kernel.space.contains(tv))
            cert.t_stable = false;
    }
    return cert;
}

} // namespace bsv::sections
