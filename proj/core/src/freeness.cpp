#include "bsv/freeness.hpp"

#include "bsv/errors.hpp"
#include "bsv/fixtures.hpp"

#include <algorithm>
#include <fstream>

namespace bsv::freeness {

namespace {

constexpr std::size_t kX0 = 2;  // offset of x0 in quadric_table()

std::size_t slot(int i) { return kX0 + static_cast<std::size_t>(i); }

bool is_fibre(int i) {
    auto const& f = fibre_variables();
    return std::find(f.begin(), f.end(), i) != f.end();
}

std::uint32_t fibre_degree(Exponents const& e) {
    std::uint32_t d = 0;
    for (int i : fibre_variables())
        d += e[slot(i)];
    return d;
}

/// Position in module_basis() of the fibre part of e, if it is a basis monomial.
std::optional<std::size_t> basis_position(Exponents const& e) {
    std::uint32_t const d = fibre_degree(e);
    if (d == 0)
        return 0;
    if (d == 1) {
        static constexpr std::array<std::size_t, 7> pos{1, 2, 3, 4, 6, 7, 8};
        auto const& f = fibre_variables();
        for (std::size_t k = 0; k < f.size(); ++k)
            if (e[slot(f[k])] == 1)
                return pos[k];
    }
    if (d == 2 && e[slot(5)] == 2)
        return 5;
    return std::nullopt;
}

Exponents base_part(Exponents const& e) {
    return {e[0], e[1], e[slot(0)], e[slot(1)], e[slot(7)]};
}

Exponents pair_exponents(int a, int b) {
    Exponents e(quadric_table()->size(), 0);
    e[slot(a)] += 1;
    e[slot(b)] += 1;
    return e;
}

std::string entry_text(PolyMatrix const& m, std::size_t r, std::size_t c) {
    return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = " + to_string(m(r, c));
}

std::optional<std::string> first_nonzero(PolyMatrix const& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero())
                return entry_text(m, r, c);
    return std::nullopt;
}

} // namespace

VarTablePtr base_table() {
    static VarTablePtr const t = VarTable::make("s t x0 x1 x7");
    return t;
}

std::array<int, 7> const& fibre_variables() {
    static constexpr std::array<int, 7> v{2, 3, 4, 5, 6, 8, 9};
    return v;
}

std::vector<MultiPoly> const& module_basis() {
    static std::vector<MultiPoly> const b = [] {
        VarTablePtr const t = quadric_table();
        return std::vector<MultiPoly>{
            MultiPoly(t, 1),
            MultiPoly::variable(t, "x2"),
            MultiPoly::variable(t, "x3"),
            MultiPoly::variable(t, "x4"),
            MultiPoly::variable(t, "x5"),
            MultiPoly::variable(t, "x5", 2),
            MultiPoly::variable(t, "x6"),
            MultiPoly::variable(t, "x8"),
            MultiPoly::variable(t, "x9"),
        };
    }();
    return b;
}

std::array<std::string, kModuleRank> const& module_basis_names() {
    static std::array<std::string, kModuleRank> const n{"1", "x2", "x3", "x4", "x5", "x5^2", "x6", "x8", "x9"};
    return n;
}

RewriteSystem::RewriteSystem(std::vector<MultiPoly> const& relations) : by_pair_(100) {
    VarTablePtr const t = quadric_table();
    for (std::size_t k = 0; k < relations.size(); ++k) {
        MultiPoly const f = relations[k].rebase(t);
        std::vector<Exponents> heads;
        for (auto const& [e, c] : f.terms()) {
            bool const pure = total_degree(e) == 2 && fibre_degree(e) == 2;
            if (pure && c.is_one() && e[slot(5)] != 2)
                heads.push_back(e);
        }
        if (heads.size() != 1)
            throw Error("relation f" + std::to_string(k + 1) + " has " + std::to_string(heads.size()) +
                        " monic head candidates");
        Exponents const& h = heads.front();
        std::vector<int> idx;
        for (int i = 0; i < 10; ++i)
            for (std::uint32_t r = 0; r < h[slot(i)]; ++r)
                idx.push_back(i);
        std::size_t const key = static_cast<std::size_t>(10 * idx[0] + idx[1]);
        if (by_pair_[key])
            throw Error("relations f" + std::to_string(rules_[*by_pair_[key]].relation) + " and f" +
                        std::to_string(k + 1) + " share the head " + to_string(MultiPoly::monomial(t, h)));
        by_pair_[key] = rules_.size();
        rules_.push_back({k + 1, h, MultiPoly::monomial(t, h) - f});
    }
}

bool RewriteSystem::heads_cover() const {
    auto const& f = fibre_variables();
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = a; b < f.size(); ++b) {
            bool const has = by_pair_[static_cast<std::size_t>(10 * f[a] + f[b])].has_value();
            if (has == (f[a] == 5 && f[b] == 5))
                return false;
        }
    return rules_.size() == 27;
}

std::vector<MultiPoly> RewriteSystem::normal_form(MultiPoly const& p) const {
    VarTablePtr const t = quadric_table();
    MultiPoly work = p.rebase(t);
    std::vector<MultiPoly> coords(kModuleRank, MultiPoly(base_table()));

    // x5² itself is a basis element; higher powers use the monic rule
    // x5² = head − (replacement − x5²).
    std::optional<MultiPoly> x5_square;
    Exponents const x5x5 = pair_exponents(5, 5);
    for (Rule const& r : rules_)
        if (r.replacement.coefficient(x5x5).is_one()) {
            x5_square = MultiPoly::monomial(t, r.head) - (r.replacement - MultiPoly::monomial(t, x5x5));
            break;
        }

    std::size_t rewrites = 0;
    while (!work.is_zero()) {
        auto const [e, c] = work.leading_term();
        work.add_term(e, -c);
        if (auto pos = basis_position(e)) {
            coords[*pos].add_term(base_part(e), c);
            continue;
        }
        if (++rewrites > kMaxRewrites)
            throw Error("normal form did not terminate within " + std::to_string(kMaxRewrites) + " rewrites");

        std::optional<std::size_t> rule;
        Exponents divisor;
        auto const& f = fibre_variables();
        for (std::size_t a = 0; a < f.size() && !rule; ++a)
            for (std::size_t b = a; b < f.size() && !rule; ++b) {
                if (f[a] == 5 && f[b] == 5)
                    continue;
                std::uint32_t const need_a = (a == b) ? 2 : 1;
                if (e[slot(f[a])] >= need_a && e[slot(f[b])] >= 1) {
                    rule = by_pair_[static_cast<std::size_t>(10 * f[a] + f[b])];
                    divisor = pair_exponents(f[a], f[b]);
                    if (!rule)
                        throw Error("no rule for the quadratic x" + std::to_string(f[a]) + "*x" + std::to_string(f[b]));
                }
            }

        MultiPoly replacement(t);
        if (rule) {
            replacement = rules_[*rule].replacement;
        } else {
            // Only x5^k with k ≥ 3 times base factors reaches here.
            if (!x5_square)
                throw Error("no monic rule expresses x5^2");
            divisor = x5x5;
            replacement = *x5_square;
        }
        Exponents cofactor = e;
        for (std::size_t i = 0; i < cofactor.size(); ++i)
            cofactor[i] -= divisor[i];
        work += MultiPoly::monomial(t, cofactor, c) * replacement;
    }
    return coords;
}

MultiPoly RewriteSystem::expand(std::vector<MultiPoly> const& coords) {
    VarTablePtr const t = quadric_table();
    MultiPoly out(t);
    for (std::size_t j = 0; j < coords.size(); ++j)
        out += coords[j].rebase(t) * module_basis()[j];
    return out;
}

PolyMatrix multiplication_matrix(RewriteSystem const& rs, int i) {
    if (!is_fibre(i))
        throw ArityError("x" + std::to_string(i) + " is not a fibre variable");
    MultiPoly const xi = MultiPoly::variable(quadric_table(), "x" + std::to_string(i));
    PolyMatrix m(kModuleRank, kModuleRank, base_table());
    for (std::size_t j = 0; j < kModuleRank; ++j) {
        std::vector<MultiPoly> const col = rs.normal_form(xi * module_basis()[j]);
        for (std::size_t r = 0; r < kModuleRank; ++r)
            m(r, j) = col[r];
    }
    return m;
}

PolyMatrix evaluate_on_matrices(MultiPoly const& f, std::vector<int> const& indices,
                                std::vector<PolyMatrix> const& matrices) {
    MultiPoly const p = f.rebase(quadric_table());
    PolyMatrix out(kModuleRank, kModuleRank, base_table());
    for (auto const& [e, c] : p.terms()) {
        PolyMatrix term = PolyMatrix::identity(kModuleRank, base_table())
                              .scaled(MultiPoly::monomial(base_table(), base_part(e), c));
        for (std::size_t k = 0; k < indices.size(); ++k)
            for (std::uint32_t r = 0; r < e[slot(indices[k])]; ++r)
                term = term * matrices[k];
        out = out + term;
    }
    return out;
}

bool FreenessCertificate::commutation_ok() const {
    return commutators.size() == 21 &&
           std::all_of(commutators.begin(), commutators.end(), [](auto const& p) { return p.commute; });
}

bool FreenessCertificate::relations_ok() const {
    return !relations.empty() &&
           std::all_of(relations.begin(), relations.end(), [](auto const& r) { return r.vanishes; });
}

FreenessCertificate freeness_certificate(std::vector<MultiPoly> const& relations) {
    RewriteSystem const rs(relations);
    FreenessCertificate cert;
    cert.rule_count = rs.rules().size();
    cert.heads_cover = rs.heads_cover();
    for (int i : fibre_variables()) {
        cert.indices.push_back(i);
        cert.matrices.push_back(multiplication_matrix(rs, i));
    }
    for (std::size_t a = 0; a < cert.indices.size(); ++a)
        for (std::size_t b = a + 1; b < cert.indices.size(); ++b) {
            PolyMatrix const c = cert.matrices[a] * cert.matrices[b] - cert.matrices[b] * cert.matrices[a];
            auto const bad = first_nonzero(c);
            cert.commutators.push_back({cert.indices[a], cert.indices[b], !bad, bad.value_or("")});
        }
    for (std::size_t k = 0; k < relations.size(); ++k) {
        auto const bad = first_nonzero(evaluate_on_matrices(relations[k], cert.indices, cert.matrices));
        cert.relations.push_back({k + 1, !bad, bad.value_or("")});
    }
    return cert;
}

void dump_matrices(FreenessCertificate const& cert, std::filesystem::path const& dir) {
    std::filesystem::create_directories(dir);
    for (std::size_t k = 0; k < cert.indices.size(); ++k) {
        PolyFile file{base_table(), {}};
        PolyMatrix const& m = cert.matrices[k];
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                file.entries.push_back(
                    {"m" + std::to_string(r + 1) + "_" + std::to_string(c + 1), m(r, c), 0});
        std::filesystem::path const path = dir / ("M" + std::to_string(cert.indices[k]) + ".poly");
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw Error("cannot write " + path.string());
        out << "# multiplication by x" << cert.indices[k] << " on the basis 1 x2 x3 x4 x5 x5^2 x6 x8 x9\n"
            << write_poly_file(file);
    }
}

} // namespace bsv::freeness
