#include "bsv/ampleness.hpp"

#include "bsv/errors.hpp"

#include <algorithm>
#include <set>

namespace bsv::ampleness {

namespace {

std::size_t symbol_index(std::string_view name) {
    for (std::size_t i = 0; i < kDivisorSymbols.size(); ++i)
        if (name == kDivisorSymbols[i])
            return i;
    throw Error("unknown divisor symbol '" + std::string(name) + "'");
}

std::string rational_text(BigRational const& q) {
    return to_string(EisensteinRational(q));
}

using SymbolicDivisor = std::array<MultiPoly, 4>;

SymbolicDivisor symbolic_stage_divisor(int stage) {
    VarTablePtr const t = parameter_table();
    MultiPoly const zero(t);
    SymbolicDivisor d{zero, zero, zero, zero};
    d[0] = MultiPoly::variable(t, "a");
    d[1] = MultiPoly(t, -1);
    char const* const scale[] = {"b", "g"};
    for (int s = 2; s <= stage; ++s) {
        MultiPoly const k = MultiPoly::variable(t, scale[s - 2]);
        for (auto& c : d)
            c = k * c;
        d[static_cast<std::size_t>(s)] -= MultiPoly(t, 1);
    }
    return d;
}

BigRational eval3(MultiPoly const& p, BigRational const& a, BigRational const& b, BigRational const& g) {
    MultiPoly const v = p.evaluate({{0, EisensteinRational(a)}, {1, EisensteinRational(b)}, {2, EisensteinRational(g)}});
    return v.constant_term().re();
}

bool positive_rational_constant(MultiPoly const& p) {
    return p.is_constant() && p.constant_term().is_rational() && sgn(p.constant_term().re()) > 0;
}

/// p = c·(monomial in b, g)·q with c > 0.
bool positive_multiple(MultiPoly const& p, MultiPoly const& q) {
    auto const quotient = exact_divide(p, q);
    if (!quotient || quotient->term_count() != 1)
        return false;
    auto const& [e, c] = *quotient->terms().begin();
    return e[0] == 0 && c.is_rational() && sgn(c.re()) > 0;
}

} // namespace

DivisorClass DivisorClass::symbol(std::string_view name) {
    DivisorClass d;
    d.coeffs_[symbol_index(name)] = 1;
    return d;
}

BigRational DivisorClass::coefficient(std::string_view name) const {
    return coeffs_[symbol_index(name)];
}

DivisorClass& DivisorClass::operator+=(DivisorClass const& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(DivisorClass const& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

DivisorClass operator*(BigRational const& c, DivisorClass d) {
    for (auto& x : d.coeffs_)
        x *= c;
    return d;
}

bool DivisorClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](BigRational const& q) { return sgn(q) == 0; });
}

std::string to_string(DivisorClass const& d) {
    std::string out;
    for (std::size_t i = 0; i < kDivisorSymbols.size(); ++i) {
        BigRational const& c = d.coefficient(i);
        if (sgn(c) == 0)
            continue;
        BigRational const mag = abs(c);
        if (!out.empty())
            out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0)
            out += "-";
        if (mag != 1)
            out += rational_text(mag) + "*";
        out += kDivisorSymbols[i];
    }
    return out.empty() ? "0" : out;
}

IntersectionData::IntersectionData(IntersectionTable table) : table_(std::move(table)) {
    for (int stage = 1; stage <= 3; ++stage) {
        auto it = table_.stages.find(stage);
        if (it == table_.stages.end())
            throw Error("intersection table has no stage" + std::to_string(stage) + " rows");
        auto const& s = it->second;
        std::set<std::string> have(s.divisors.begin(), s.divisors.end());
        for (int k = 0; k <= stage; ++k)
            if (!have.count(kDivisorSymbols[static_cast<std::size_t>(k)]))
                throw Error("stage" + std::to_string(stage) + " lacks a row for " + kDivisorSymbols[static_cast<std::size_t>(k)]);
        for (auto const& d : s.divisors) {
            symbol_index(d);
            auto const found = s.numbers.find(d);
            if (found == s.numbers.end())
                throw Error("stage" + std::to_string(stage) + " has no numbers for " + d);
            auto const& row = found->second;
            for (auto const& c : s.curves)
                if (!row.count(c))
                    throw Error("stage" + std::to_string(stage) + " row " + d + " lacks curve " + c);
        }
    }
}

std::vector<CurveClass> IntersectionData::curves(int stage) const {
    std::vector<CurveClass> out;
    for (auto const& c : table_.stages.at(stage).curves)
        out.push_back({c, stage});
    return out;
}

long IntersectionData::number(int stage, std::string const& divisor, std::string const& curve) const {
    auto it = table_.stages.find(stage);
    if (it == table_.stages.end())
        throw Error("no intersection numbers for stage " + std::to_string(stage));
    auto row = it->second.numbers.find(divisor);
    if (row == it->second.numbers.end())
        throw Error("undefined row: " + divisor + " at stage " + std::to_string(stage));
    auto cell = row->second.find(curve);
    if (cell == row->second.end())
        throw Error("unknown curve " + curve + " at stage " + std::to_string(stage));
    return cell->second;
}

BigRational IntersectionData::pairing(DivisorClass const& d, CurveClass const& c) const {
    BigRational out = 0;
    for (std::size_t i = 0; i < kDivisorSymbols.size(); ++i) {
        auto const& row = table_.stages.at(c.stage).numbers;
        bool const defined = row.count(kDivisorSymbols[i]) > 0;
        if (!defined) {
            if (sgn(d.coefficient(i)) != 0)
                throw Error(std::string("undefined row: ") + kDivisorSymbols[i] + " against stage-" +
                            std::to_string(c.stage) + " curve " + c.name);
            continue;
        }
        out += d.coefficient(i) * number(c.stage, kDivisorSymbols[i], c.name);
    }
    return out;
}

DivisorClass stage_divisor(int stage, AmpleParams const& p) {
    if (stage < 1 || stage > 3)
        throw Error("stage must be 1, 2 or 3");
    DivisorClass d = p.alpha * DivisorClass::symbol("omega") - DivisorClass::symbol("E1");
    if (stage >= 2)
        d = p.beta * d - DivisorClass::symbol("E2");
    if (stage >= 3)
        d = p.gamma * d - DivisorClass::symbol("E3");
    return d;
}

AmpleResult degrees_of(IntersectionData const& data, int stage, DivisorClass const& d) {
    AmpleResult r{stage, {}, {}, true};
    for (auto const& c : data.curves(stage)) {
        BigRational const deg = data.pairing(d, c);
        r.degrees.push_back({c.name, deg});
        if (sgn(deg) == 0)
            r.vanishing.push_back(c.name);
        if (sgn(deg) <= 0)
            r.ample = false;
    }
    return r;
}

AmpleResult is_ample(IntersectionData const& data, int stage, AmpleParams const& p) {
    return degrees_of(data, stage, stage_divisor(stage, p));
}

VarTablePtr parameter_table() {
    static VarTablePtr const t = VarTable::make("a b g");
    return t;
}

std::vector<DisplayedInequality> displayed_inequalities(int stage) {
    using Q = BigRational const&;
    VarTablePtr const t = parameter_table();
    auto poly = [&](std::string_view s) { return parse_poly(s, t); };
    switch (stage) {
    case 1:
        return {{"alpha > 2/3", "3", poly("3*a - 2"),
                 [](Q a, Q, Q) { return BigRational(a - BigRational(2, 3)); },
                 [](Q, Q, Q) { return BigRational(3); }}};
    case 2:
        return {{"alpha > (1/3)(2 + 1/beta)", "3*beta", poly("3*a*b - 2*b - 1"),
                 [](Q a, Q b, Q) { return BigRational(a - BigRational(1, 3) * (2 + 1 / b)); },
                 [](Q, Q b, Q) { return BigRational(3 * b); }},
                {"beta > 1", "1", poly("b - 1"),
                 [](Q, Q b, Q) { return BigRational(b - 1); },
                 [](Q, Q, Q) { return BigRational(1); }}};
    case 3:
        return {{"alpha > 2/3 + 1/(3 beta) - 2/(3 beta gamma)", "3*beta*gamma", poly("3*a*b*g - 2*b*g - g + 2"),
                 [](Q a, Q b, Q g) { return BigRational(a - BigRational(2, 3) - 1 / (3 * b) + 2 / (3 * b * g)); },
                 [](Q, Q b, Q g) { return BigRational(3 * b * g); }},
                {"beta > 1 + 1/gamma", "gamma", poly("b*g - g - 1"),
                 [](Q, Q b, Q g) { return BigRational(b - 1 - 1 / g); },
                 [](Q, Q, Q g) { return BigRational(g); }},
                {"gamma > 1", "1", poly("g - 1"),
                 [](Q, Q, Q g) { return BigRational(g - 1); },
                 [](Q, Q, Q) { return BigRational(1); }}};
    default:
        throw Error("stage must be 1, 2 or 3");
    }
}

std::string to_string(Relation r) {
    switch (r) {
    case Relation::matches: return "matches";
    case Relation::implied: return "implied";
    case Relation::vacuous: return "vacuous";
    case Relation::unmatched: return "unmatched";
    }
    return "unmatched";
}

bool RegionCertificate::ok() const {
    bool const curves_ok = !curves.empty() && std::all_of(curves.begin(), curves.end(), [](CurveCondition const& c) {
        return c.relation != Relation::unmatched;
    });
    bool const covered = !displayed_covered.empty() &&
                         std::all_of(displayed_covered.begin(), displayed_covered.end(), [](bool b) { return b; });
    return curves_ok && covered && clearing_ok;
}

RegionCertificate region_equivalence_certificate(IntersectionData const& data, int stage) {
    RegionCertificate out;
    out.stage = stage;
    std::vector<DisplayedInequality> const shown = displayed_inequalities(stage);
    out.displayed_covered.assign(shown.size(), false);

    // The cleared forms must agree with factor·(lhs − rhs) wherever β, γ ≠ 0.
    out.clearing_ok = true;
    std::vector<BigRational> const grid{BigRational(-3, 2), BigRational(1, 3), BigRational(2), BigRational(7, 5)};
    for (auto const& ineq : shown)
        for (auto const& a : grid)
            for (auto const& b : grid)
                for (auto const& g : grid)
                    out.clearing_ok = out.clearing_ok &&
                                      eval3(ineq.cleared, a, b, g) == ineq.factor(a, b, g) * ineq.difference(a, b, g);

    SymbolicDivisor const d = symbolic_stage_divisor(stage);
    for (auto const& c : data.curves(stage)) {
        CurveCondition cond{c.name, MultiPoly(parameter_table()), Relation::unmatched, std::nullopt, {}};
        for (std::size_t i = 0; i <= static_cast<std::size_t>(stage); ++i)
            cond.degree += d[i] * EisensteinRational(BigRational(data.number(stage, kDivisorSymbols[i], c.name)));

        if (positive_rational_constant(cond.degree)) {
            cond.relation = Relation::vacuous;
            cond.normalized = to_string(cond.degree) + " > 0";
        }
        for (std::size_t k = 0; k < shown.size() && cond.relation == Relation::unmatched; ++k)
            if (positive_multiple(cond.degree, shown[k].cleared)) {
                cond.relation = Relation::matches;
                cond.displayed = k;
                cond.normalized = to_string(shown[k].cleared) + " > 0";
                out.displayed_covered[k] = true;
            }
        for (std::size_t k = 0; k < shown.size() && cond.relation == Relation::unmatched; ++k)
            if (positive_rational_constant(cond.degree - shown[k].cleared)) {
                cond.relation = Relation::implied;
                cond.displayed = k;
                cond.normalized = to_string(cond.degree) + " > 0";
            }
        out.curves.push_back(std::move(cond));
    }
    return out;
}

bool TwistResult::pattern_ok() const {
    if (!admissible)
        return false;
    for (auto const& d : degrees) {
        bool const should_vanish = d.curve == "d_u" || d.curve == "l_vw";
        if (should_vanish ? sgn(d.degree) != 0 : sgn(d.degree) <= 0)
            return false;
    }
    return degrees.size() == 6;
}

TwistResult contraction_twist_certificate(IntersectionData const& data, BigRational const& alpha, BigRational const& beta) {
    TwistResult r;
    r.alpha = alpha;
    r.beta = beta;
    if (!(alpha * beta > 1))
        r.precondition = "alpha*beta > 1";
    else if (!((1 - alpha) * beta < 1))
        r.precondition = "(1 - alpha)*beta < 1";
    else if (!((2 * alpha - 1) * beta < 1))
        r.precondition = "(2*alpha - 1)*beta < 1";
    if (!r.precondition.empty())
        return r;
    r.admissible = true;
    BigRational const denom = (1 - alpha) * beta;
    r.gamma = 1 / denom;
    r.m = (alpha * beta - 1) / denom;
    DivisorClass const twist =
        stage_divisor(3, {alpha, beta, r.gamma}) +
        r.m * (DivisorClass::symbol("E1") - DivisorClass::symbol("E2") + DivisorClass::symbol("E3"));
    AmpleResult const deg = degrees_of(data, 3, twist);
    r.degrees = deg.degrees;
    r.zero_curves = deg.vanishing;
    return r;
}

} // namespace bsv::ampleness
