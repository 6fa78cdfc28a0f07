#include "bsv/fiber.hpp"

#include "bsv/errors.hpp"
#include "bsv/fixtures.hpp"

#include <algorithm>

namespace bsv::fiber {

namespace {

std::vector<MultiPoly> on_quadric_table(std::vector<MultiPoly> const& relations) {
    std::vector<MultiPoly> out;
    out.reserve(relations.size());
    for (auto const& r : relations)
        out.push_back(r.rebase(quadric_table()));
    return out;
}

MultiPoly specialize_zero(MultiPoly const& p, std::vector<std::string> const& names) {
    std::map<std::size_t, EisensteinRational> values;
    for (auto const& n : names)
        values.emplace(p.table()->index_of(n), EisensteinRational(0));
    return p.evaluate(values);
}

MultiPoly const& pick(std::vector<MultiPoly> const& relations, std::size_t index) {
    if (index == 0 || index > relations.size())
        throw ArityError("relation index " + std::to_string(index) + " out of range");
    return relations[index - 1];
}

} // namespace

WeightVector const& torus_weights() {
    static WeightVector const w{
        {3, 0}, {0, 3},                          // s t
        {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 1},  // x0..x4
        {2, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 2},  // x5..x9
    };
    return w;
}

bool TorusCheck::ok() const {
    return !weights.empty() && std::all_of(weights.begin(), weights.end(), [](auto const& w) { return w.has_value(); });
}

TorusCheck torus_equivariance_check(std::vector<MultiPoly> const& relations) {
    TorusCheck out;
    for (auto const& r : on_quadric_table(relations)) {
        try {
            out.weights.push_back(bi_weight(r, torus_weights()));
            out.errors.emplace_back();
        } catch (Error const& e) {
            out.weights.push_back(std::nullopt);
            out.errors.emplace_back(e.what());
        }
    }
    return out;
}

std::map<std::size_t, EisensteinRational> coordinate_point(int i) {
    if (i < 0 || i > 9)
        throw ArityError("coordinate point index " + std::to_string(i) + " out of range");
    std::map<std::size_t, EisensteinRational> values;
    for (std::size_t k = 0; k < quadric_table()->size(); ++k)
        values.emplace(k, EisensteinRational(0));
    values[2 + static_cast<std::size_t>(i)] = 1;
    return values;
}

std::vector<int> central_fiber_points(std::vector<MultiPoly> const& relations) {
    std::vector<MultiPoly> const rel = on_quadric_table(relations);
    std::vector<int> out;
    for (int i = 0; i < 10; ++i) {
        auto const p = coordinate_point(i);
        if (std::all_of(rel.begin(), rel.end(), [&](MultiPoly const& f) { return f.evaluate(p).is_zero(); }))
            out.push_back(i);
    }
    return out;
}

std::vector<MultiPoly> central_fiber_equations(std::vector<MultiPoly> const& relations) {
    std::vector<MultiPoly> out;
    for (auto const& r : on_quadric_table(relations))
        out.push_back(specialize_zero(r, {"s", "t"}));
    return out;
}

ReducedCone reduced_cone_certificate(std::vector<MultiPoly> const& relations) {
    ReducedCone out;
    std::vector<MultiPoly> const rel = on_quadric_table(relations);
    std::vector<std::string> const zeroed{"s", "t", "x3", "x5", "x6", "x8", "x9"};
    VarTablePtr const qt = quadric_table();

    // Span of the specialized quadrics on the monomials of their support.
    std::map<Exponents, std::size_t, GrlexLess> monomials;
    for (std::size_t k = 0; k < rel.size(); ++k) {
        MultiPoly q = specialize_zero(rel[k], zeroed);
        if (q.is_zero())
            continue;
        for (auto const& [e, c] : q.terms())
            monomials.emplace(e, monomials.size());
        out.sources.push_back(k + 1);
        out.quadrics.push_back(std::move(q));
    }
    std::vector<Vector> rows;
    for (auto const& q : out.quadrics) {
        Vector v(monomials.size());
        for (auto const& [e, c] : q.terms())
            v[monomials.at(e)] = c;
        rows.push_back(std::move(v));
    }
    out.dimension = rows.empty() ? 0 : rank(Matrix::from_rows(rows, monomials.size()));
    std::size_t const x1 = qt->index_of("x1");
    out.free_of_x1 = std::all_of(out.quadrics.begin(), out.quadrics.end(),
                                 [&](MultiPoly const& q) { return q.degree_in(x1) <= 0; });

    // Pull back along the parametrization with c2 = 1, unknowns c4, c7.
    VarTablePtr const pt = VarTable::make("l m c4 c7");
    auto var = [&](char const* n, std::uint32_t e = 1) { return MultiPoly::variable(pt, n, e); };
    std::map<std::string, MultiPoly> const param{
        {"x0", var("l", 3)},
        {"x1", MultiPoly(pt)},
        {"x2", var("l", 2) * var("m")},
        {"x4", var("c4") * var("l") * var("m", 2)},
        {"x7", var("c7") * var("m", 3)},
    };
    std::vector<MultiPoly> equations;  // coefficients in l, m, as polynomials in c4, c7
    for (auto const& q : out.quadrics) {
        std::map<std::string, MultiPoly> full = param;
        for (auto const& n : zeroed)
            full.emplace(n, MultiPoly(pt));
        for (std::size_t i = 0; i < qt->size(); ++i)
            full.emplace(qt->name(i), MultiPoly(pt));
        MultiPoly const image = substitute(q, full, pt);
        std::map<std::pair<std::uint32_t, std::uint32_t>, MultiPoly> by_lm;
        for (auto const& [e, c] : image.terms()) {
            auto [it, _] = by_lm.try_emplace({e[0], e[1]}, MultiPoly(pt));
            it->second.add_term({0, 0, e[2], e[3]}, c);
        }
        for (auto& [k, v] : by_lm)
            equations.push_back(std::move(v));
    }

    std::map<std::size_t, EisensteinRational> known;
    bool progress = true;
    while (progress && known.size() < 2) {
        progress = false;
        for (auto const& eq : equations) {
            MultiPoly const r = eq.evaluate(known);
            std::vector<std::size_t> const sup = r.support();
            if (sup.size() != 1 || r.degree_in(sup[0]) != 1)
                continue;
            Exponents lin(4, 0);
            lin[sup[0]] = 1;
            known[sup[0]] = -r.constant_term() / r.coefficient(lin);
            progress = true;
        }
    }
    if (known.size() == 2) {
        out.c2 = EisensteinRational(1);
        out.c4 = known.at(2);
        out.c7 = known.at(3);
        out.parametrization_ok =
            std::all_of(equations.begin(), equations.end(), [&](MultiPoly const& e) { return e.evaluate(known).is_zero(); });
    }
    return out;
}

std::size_t tangent_dimension(int point, std::vector<MultiPoly> const& equations, std::vector<std::string> const& vars) {
    std::string const chart = "x" + std::to_string(point);
    if (std::find(vars.begin(), vars.end(), chart) != vars.end())
        throw ArityError("chart mismatch: " + chart + " is the affine chart coordinate");
    if (equations.empty())
        return vars.size();
    std::vector<MultiPoly> const eqs = on_quadric_table(equations);
    Matrix const j = jacobian(eqs, vars).evaluate(coordinate_point(point));
    return vars.size() - rank(j);
}

std::vector<JacobianSpec> const& fixed_point_specs() {
    static std::vector<JacobianSpec> const specs{
        {0, {1, 2, 3, 4, 5, 6, 13}, {"s", "x4", "x5", "x6", "x7", "x8", "x9"}},
        {1, {1, 2, 4, 5, 8, 9, 17}, {"s", "t", "x3", "x5", "x6", "x8", "x9"}},
        {7, {4, 8, 9, 17, 18, 25, 26}, {"t", "x0", "x2", "x3", "x5", "x6", "x9"}},
    };
    return specs;
}

SmoothnessResult smoothness_certificate(JacobianSpec const& spec, std::vector<MultiPoly> const& relations) {
    std::vector<MultiPoly> const rel = on_quadric_table(relations);
    std::vector<MultiPoly> eqs;
    for (std::size_t k : spec.equations)
        eqs.push_back(pick(rel, k));
    Matrix const j = jacobian(eqs, spec.variables).evaluate(coordinate_point(spec.point));
    EisensteinRational const d = j.rows() == j.cols() ? determinant(j) : EisensteinRational(0);
    return {spec, j, d};
}

bool ConicCheck::total_space_ok() const {
    return ideal_contains.size() == 3 &&
           std::all_of(ideal_contains.begin(), ideal_contains.end(), [](bool b) { return b; });
}

bool ConicCheck::fibres_ok() const {
    VarTablePtr const t = form.table();
    MultiPoly const expected = MultiPoly::variable(t, "s") * MultiPoly::variable(t, "t") * EisensteinRational(8);
    if (hessian_determinant != expected || witnesses.empty())
        return false;
    return std::all_of(witnesses.begin(), witnesses.end(), [](ConicWitness const& w) {
        bool const degenerate = (w.s0 * w.t0).is_zero();
        return w.singular() == degenerate && w.kernel_on_conic;
    });
}

ConicCheck conic_warmup_check() {
    VarTablePtr const t = VarTable::make("s t x y z");
    auto var = [&](char const* n, std::uint32_t e = 1) { return MultiPoly::variable(t, n, e); };
    ConicCheck out{var("s") * var("x", 2) + var("t") * var("y", 2) + var("z", 2), {}, {}, MultiPoly(t), {}};
    for (char const* v : {"s", "t", "x", "y", "z"})
        out.partials.push_back(out.form.derivative(v));
    for (MultiPoly const& target : {var("x", 2), var("y", 2), var("z")})
        out.ideal_contains.push_back(divide_by_list(target, out.partials).remainder.is_zero());

    PolyMatrix const hessian = jacobian({out.partials[2], out.partials[3], out.partials[4]}, {"x", "y", "z"});
    out.hessian_determinant = determinant(hessian);

    std::vector<EisensteinRational> const samples{
        0, 1, -1, EisensteinRational::rational(1, 2), EisensteinRational::zeta(), EisensteinRational(2) - EisensteinRational::zeta(),
    };
    for (auto const& s0 : samples)
        for (auto const& t0 : samples) {
            ConicWitness w{s0, t0};
            Matrix const h = hessian.evaluate({{0, s0}, {1, t0}});
            std::vector<Vector> const kernel = kernel_over_field(h);
            w.singular_dimension = kernel.size();
            for (Vector const& v : kernel) {
                MultiPoly const value = out.form.evaluate({{0, s0}, {1, t0}, {2, v[0]}, {3, v[1]}, {4, v[2]}});
                w.kernel_on_conic = w.kernel_on_conic && value.is_zero();
            }
            out.witnesses.push_back(w);
        }
    return out;
}

} // namespace bsv::fiber
