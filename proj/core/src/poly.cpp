#include "bsv/poly.hpp"

#include "bsv/errors.hpp"
#include "expr_parser.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace bsv {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string> seen;
    for (auto const& n : names_) {
        if (n.empty())
            throw ArityError("empty variable name");
        if (!seen.insert(n).second)
            throw ArityError("duplicate variable name '" + n + "'");
    }
}

VarTablePtr VarTable::make(std::vector<std::string> names) {
    return std::make_shared<VarTable const>(std::move(names));
}

VarTablePtr VarTable::make(std::string_view space_separated) {
    std::istringstream in{std::string(space_separated)};
    std::vector<std::string> names;
    for (std::string n; in >> n;)
        names.push_back(n);
    return make(std::move(names));
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarTable::index_of(std::string_view name) const {
    if (auto i = find(name))
        return *i;
    throw ArityError("unknown variable '" + std::string(name) + "'");
}

std::uint32_t total_degree(Exponents const& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrlexLess::operator()(Exponents const& a, Exponents const& b) const {
    std::uint32_t const da = total_degree(a);
    std::uint32_t const db = total_degree(b);
    if (da != db)
        return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

MultiPoly::MultiPoly(VarTablePtr table) : table_(std::move(table)) {
    if (!table_)
        throw ArityError("polynomial without a variable table");
}

MultiPoly::MultiPoly(VarTablePtr table, EisensteinRational const& c) : MultiPoly(std::move(table)) {
    if (!c.is_zero())
        terms_.emplace(Exponents(table_->size(), 0), c);
}

MultiPoly MultiPoly::variable(VarTablePtr table, std::string_view name, std::uint32_t power) {
    Exponents e(table->size(), 0);
    e[table->index_of(name)] = power;
    return monomial(std::move(table), std::move(e));
}

MultiPoly MultiPoly::monomial(VarTablePtr table, Exponents e, EisensteinRational c) {
    MultiPoly p(std::move(table));
    if (e.size() != p.table_->size())
        throw ArityError("exponent vector length " + std::to_string(e.size()) + " does not match table arity " +
                         std::to_string(p.table_->size()));
    p.add_term(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && bsv::total_degree(terms_.begin()->first) == 0);
}

EisensteinRational MultiPoly::constant_term() const {
    return coefficient(Exponents(table_->size(), 0));
}

EisensteinRational MultiPoly::coefficient(Exponents const& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? EisensteinRational{} : it->second;
}

std::pair<Exponents, EisensteinRational> MultiPoly::leading_term() const {
    if (terms_.empty())
        throw Error("leading term of the zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

long MultiPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    return static_cast<long>(bsv::total_degree(terms_.rbegin()->first));
}

long MultiPoly::degree_in(std::size_t var) const {
    if (terms_.empty())
        return -1;
    long d = 0;
    for (auto const& [e, c] : terms_)
        d = std::max<long>(d, e.at(var));
    return d;
}

std::vector<std::size_t> MultiPoly::support() const {
    std::vector<bool> used(table_->size(), false);
    for (auto const& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                used[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i])
            out.push_back(i);
    return out;
}

void MultiPoly::add_term(Exponents const& e, EisensteinRational const& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void MultiPoly::require_same_table(MultiPoly const& o) const {
    if (table_ != o.table_ && !(*table_ == *o.table_))
        throw ArityError("polynomials live over different variable tables");
}

MultiPoly& MultiPoly::operator+=(MultiPoly const& o) {
    require_same_table(o);
    for (auto const& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(MultiPoly const& o) {
    require_same_table(o);
    for (auto const& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly operator*(MultiPoly const& a, MultiPoly const& b) {
    a.require_same_table(b);
    MultiPoly out(a.table_);
    std::size_t const n = a.table_->size();
    Exponents e(n);
    for (auto const& [ea, ca] : a.terms_) {
        for (auto const& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(MultiPoly const& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(EisensteinRational const& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

bool operator==(MultiPoly const& a, MultiPoly const& b) {
    a.require_same_table(b);
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
    MultiPoly result(table_, EisensteinRational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= table_->size())
        throw ArityError("derivative with respect to variable index " + std::to_string(var));
    MultiPoly out(table_);
    for (auto const& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * EisensteinRational(static_cast<long>(e[var])));
    }
    return out;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
    return derivative(table_->index_of(var));
}

MultiPoly MultiPoly::evaluate(std::map<std::size_t, EisensteinRational> const& values) const {
    MultiPoly out(table_);
    for (auto const& [e, c] : terms_) {
        Exponents rest = e;
        EisensteinRational coeff = c;
        for (auto const& [var, value] : values) {
            if (rest.at(var) > 0) {
                coeff *= value.pow(rest[var]);
                rest[var] = 0;
            }
        }
        out.add_term(rest, coeff);
    }
    return out;
}

MultiPoly MultiPoly::rebase(VarTablePtr const& target) const {
    std::vector<std::size_t> map(table_->size());
    for (std::size_t i = 0; i < table_->size(); ++i) {
        auto j = target->find(table_->name(i));
        map[i] = j ? *j : static_cast<std::size_t>(-1);
    }
    MultiPoly out(target);
    for (auto const& [e, c] : terms_) {
        Exponents t(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (map[i] == static_cast<std::size_t>(-1))
                throw ArityError("variable '" + table_->name(i) + "' is missing from the target table");
            t[map[i]] = e[i];
        }
        out.add_term(t, c);
    }
    return out;
}

MultiPoly substitute(MultiPoly const& p, std::map<std::string, MultiPoly> const& assignment,
                     VarTablePtr const& target) {
    VarTable const& src = *p.table();
    for (auto const& [name, image] : assignment) {
        if (!src.find(name))
            throw ArityError("substitution for unknown variable '" + name + "'");
        if (!(*image.table() == *target))
            throw ArityError("substitution image for '" + name + "' lives over a different table");
    }

    // Images of each source variable, with powers cached on demand.
    std::vector<std::vector<MultiPoly>> powers(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = assignment.find(src.name(i));
        if (it != assignment.end())
            powers[i].push_back(it->second);
    }
    auto image_power = [&](std::size_t var, std::uint32_t e) -> MultiPoly const& {
        auto& cache = powers[var];
        if (cache.empty()) {
            auto j = target->find(src.name(var));
            if (!j)
                throw ArityError("variable '" + src.name(var) + "' is neither assigned nor present in the target table");
            cache.push_back(MultiPoly::variable(target, src.name(var)));
        }
        while (cache.size() < e)
            cache.push_back(cache.back() * cache.front());
        return cache[e - 1];
    };

    MultiPoly out(target);
    for (auto const& [e, c] : p.terms()) {
        MultiPoly term(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term *= image_power(i, e[i]);
        out += term;
    }
    return out;
}

MultiPoly substitute(MultiPoly const& p, std::map<std::string, MultiPoly> const& assignment) {
    return substitute(p, assignment, p.table());
}

namespace {

bool monomial_divides(Exponents const& d, Exponents const& e) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i])
            return false;
    return true;
}

Exponents monomial_quotient(Exponents const& e, Exponents const& d) {
    Exponents q(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        q[i] = e[i] - d[i];
    return q;
}

} // namespace

std::optional<MultiPoly> exact_divide(MultiPoly const& p, MultiPoly const& q) {
    if (q.is_zero())
        throw DivisionByZero();
    if (q.is_constant()) {
        MultiPoly out = p;
        out *= q.constant_term().inverse();
        return out;
    }
    auto const [lq, lc] = q.leading_term();
    EisensteinRational const lc_inv = lc.inverse();
    MultiPoly rest = p;
    MultiPoly quotient(p.table());
    while (!rest.is_zero()) {
        auto const [lr, rc] = rest.leading_term();
        if (!monomial_divides(lq, lr))
            return std::nullopt;
        MultiPoly t = MultiPoly::monomial(p.table(), monomial_quotient(lr, lq), rc * lc_inv);
        quotient += t;
        rest -= t * q;
    }
    return quotient;
}

DivisionResult divide_by_list(MultiPoly const& p, std::vector<MultiPoly> const& divisors) {
    DivisionResult out{std::vector<MultiPoly>(divisors.size(), MultiPoly(p.table())), MultiPoly(p.table())};
    MultiPoly rest = p;
    while (!rest.is_zero()) {
        auto const [lr, rc] = rest.leading_term();
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (divisors[i].is_zero())
                continue;
            auto const [ld, dc] = divisors[i].leading_term();
            if (!monomial_divides(ld, lr))
                continue;
            MultiPoly t = MultiPoly::monomial(p.table(), monomial_quotient(lr, ld), rc / dc);
            out.quotients[i] += t;
            rest -= t * divisors[i];
            divided = true;
            break;
        }
        if (!divided) {
            MultiPoly lead = MultiPoly::monomial(p.table(), lr, rc);
            out.remainder += lead;
            rest -= lead;
        }
    }
    return out;
}

namespace {

std::string monomial_text(VarTable const& table, Exponents const& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += table.name(i);
        if (e[i] > 1)
            out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

std::string to_string(MultiPoly const& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto const& [e, c] = *it;
        std::string const mono = monomial_text(*p.table(), e);
        std::string coeff = to_string(c);
        bool negative = false;
        if (coeff.front() == '-') {
            negative = true;
            coeff.erase(0, 1);
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (mono.empty())
            out += coeff;
        else if (coeff == "1")
            out += mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, MultiPoly const& p) {
    return os << to_string(p);
}

namespace {

struct PolyOps {
    VarTablePtr table;

    MultiPoly from_integer(BigInt const& n) { return MultiPoly(table, EisensteinRational(BigRational(n))); }
    MultiPoly identifier(std::string_view name) {
        if (name == "z")
            return MultiPoly(table, EisensteinRational::zeta());
        if (!table->find(name))
            throw ArityError("arity error: undeclared variable '" + std::string(name) + "'");
        return MultiPoly::variable(table, name);
    }
    MultiPoly divide(MultiPoly const& a, MultiPoly const& b) {
        if (!b.is_constant())
            throw Error("division by a non-constant polynomial");
        if (b.is_zero())
            throw DivisionByZero();
        return a * b.constant_term().inverse();
    }
    MultiPoly power(MultiPoly const& a, unsigned e) { return a.pow(e); }
};

} // namespace

MultiPoly parse_poly(std::string_view text, VarTablePtr const& table, std::size_t line, std::size_t column_offset) {
    if (table->find("z"))
        throw ParseError("'z' denotes the cube root of unity and cannot be a variable", line, column_offset + 1);
    PolyOps ops{table};
    return detail::ExprParser<MultiPoly, PolyOps>(text, ops, line, column_offset).parse();
}

} // namespace bsv
