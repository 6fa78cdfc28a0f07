#pragma once

#include "bsv/scalars.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bsv {

/// Ordered list of distinct variable names. The order fixes the monomial
/// order (graded lexicographic, earlier variables heavier).
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);

    static std::shared_ptr<VarTable const> make(std::vector<std::string> names);
    static std::shared_ptr<VarTable const> make(std::string_view space_separated);

    std::size_t size() const noexcept { return names_.size(); }
    std::string const& name(std::size_t i) const { return names_.at(i); }
    std::vector<std::string> const& names() const noexcept { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws ArityError for an unknown name.
    std::size_t index_of(std::string_view name) const;

    friend bool operator==(VarTable const& a, VarTable const& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<VarTable const>;

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(Exponents const& e);

/// Graded lexicographic order: total degree first, then the first differing
/// exponent decides (larger exponent on an earlier variable is larger).
struct GrlexLess {
    bool operator()(Exponents const& a, Exponents const& b) const;
};

/// Sparse polynomial over Q(ζ). Terms are keyed by exponent vector in
/// ascending grlex order; no zero coefficient is ever stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, EisensteinRational, GrlexLess>;

    explicit MultiPoly(VarTablePtr table);
    MultiPoly(VarTablePtr table, EisensteinRational const& c);

    static MultiPoly variable(VarTablePtr table, std::string_view name, std::uint32_t power = 1);
    static MultiPoly monomial(VarTablePtr table, Exponents e, EisensteinRational c = 1);

    VarTablePtr const& table() const noexcept { return table_; }
    TermMap const& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// The constant term (0 if absent).
    EisensteinRational constant_term() const;
    EisensteinRational coefficient(Exponents const& e) const;
    /// Largest term in grlex order. Precondition: not zero.
    std::pair<Exponents, EisensteinRational> leading_term() const;

    /// −1 for the zero polynomial.
    long total_degree() const;
    long degree_in(std::size_t var) const;
    /// Indices of variables that occur with positive exponent.
    std::vector<std::size_t> support() const;

    void add_term(Exponents const& e, EisensteinRational const& c);

    MultiPoly& operator+=(MultiPoly const& o);
    MultiPoly& operator-=(MultiPoly const& o);
    MultiPoly& operator*=(MultiPoly const& o);
    MultiPoly& operator*=(EisensteinRational const& c);

    friend MultiPoly operator+(MultiPoly a, MultiPoly const& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, MultiPoly const& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly const& a, MultiPoly const& b);
    friend MultiPoly operator*(MultiPoly a, EisensteinRational const& c) { return a *= c; }
    friend MultiPoly operator*(EisensteinRational const& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;

    friend bool operator==(MultiPoly const& a, MultiPoly const& b);
    friend bool operator!=(MultiPoly const& a, MultiPoly const& b) { return !(a == b); }

    MultiPoly pow(std::uint32_t e) const;
    MultiPoly derivative(std::size_t var) const;
    MultiPoly derivative(std::string_view var) const;

    /// Plugs scalar values into the listed variables; the result keeps the table.
    MultiPoly evaluate(std::map<std::size_t, EisensteinRational> const& values) const;

    /// Same polynomial re-expressed over another table that contains every
    /// variable in the support. Throws ArityError otherwise.
    MultiPoly rebase(VarTablePtr const& target) const;

private:
    void require_same_table(MultiPoly const& o) const;

    VarTablePtr table_;
    TermMap terms_;
};

/// Ring homomorphism defined by `assignment` (variable name → image in
/// `target`). Unassigned variables map to the same-named variable of
/// `target`, which must exist there.
MultiPoly substitute(MultiPoly const& p,
                     std::map<std::string, MultiPoly> const& assignment,
                     VarTablePtr const& target);
MultiPoly substitute(MultiPoly const& p, std::map<std::string, MultiPoly> const& assignment);

/// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<MultiPoly> exact_divide(MultiPoly const& p, MultiPoly const& q);

struct DivisionResult {
    std::vector<MultiPoly> quotients;
    MultiPoly remainder;
};

/// Multivariate division by an ordered list of divisors (grlex leading
/// terms). p = Σ quotients[i]·divisors[i] + remainder. A zero remainder is a
/// certificate of ideal membership; a nonzero one proves nothing by itself.
DivisionResult divide_by_list(MultiPoly const& p, std::vector<MultiPoly> const& divisors);

/// Canonical text, terms in descending grlex order.
std::string to_string(MultiPoly const& p);
std::ostream& operator<<(std::ostream& os, MultiPoly const& p);

/// Parses the polynomial text syntax over `table`. The symbol `z` is ζ and is
/// therefore not allowed as a variable name in parsed text.
MultiPoly parse_poly(std::string_view text, VarTablePtr const& table,
                     std::size_t line = 0, std::size_t column_offset = 0);

} // namespace bsv
