// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails. Usage: acceptance [fixtures-dir]

#include "bsv/ampleness.hpp"
#include "bsv/fiber.hpp"
#include "bsv/fixtures.hpp"
#include "bsv/freeness.hpp"
#include "bsv/quadrics.hpp"
#include "bsv/report.hpp"
#include "bsv/sections.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace bsv;
namespace fs = std::filesystem;

namespace {

fs::path g_fixtures;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::vector<MultiPoly> load(char const* file, char const* prefix, std::size_t n, VarTablePtr const& t) {
    return labeled_sequence(parse_poly_file(read_text_file(g_fixtures / file)), prefix, n, t);
}

Outcome membership_dimensions() {
    std::ostringstream d;
    bool ok = true;
    std::size_t const expected[] = {1, 4, 7};
    for (int a = 0; a < 3; ++a) {
        std::size_t const s = sections::s_membership_space(a).dimension();
        std::size_t const t = sections::t_membership_space(a).dimension();
        ok = ok && s == expected[a] && t == expected[a];
        d << " s" << a << "=" << s << " t" << a << "=" << t;
    }
    return {ok, d.str()};
}

Outcome intersection_cells() {
    std::ostringstream d;
    bool ok = true;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            std::size_t want;
            if (std::min(a, b) == 0 && std::max(a, b) < 3)
                want = 0;
            else if (a >= 1 && a <= 2 && b >= 1 && b <= 2)
                want = static_cast<std::size_t>(a + b - 1);
            else
                continue;
            std::size_t const got = sections::intersection_cell(a, b).dimension();
            if (got != want) {
                ok = false;
                d << " (" << a << "," << b << "): " << got << " != " << want;
            }
        }
    MultiPoly const g = parse_poly("u^2*w + z*v*w^2 + z^2*u*v^2", sections::tilde_frame().u_tilde.table());
    Subspace const line = Subspace::span({sections::cubic_coordinates(g)}, sections::kCubicFrameSize);
    bool const unique = sections::intersection_cell(1, 1).space == line;
    ok = ok && unique;
    d << " (1,1) spanned by expected form: " << (unique ? "yes" : "no");
    return {ok, d.str()};
}

Outcome st_generators() {
    auto const c = sections::st_basis_certificate(load("st_basis.poly", "b", 10, st_cubic_table()));
    std::ostringstream d;
    d << " membership=" << c.membership_ok() << " det=" << to_string(c.determinant) << " generation=" << c.generation_ok();
    return {c.ok(), d.str()};
}

Outcome local_sections() {
    auto const c = sections::local_section_space(load("local_basis.poly", "l", 10, t_cubic_table()));
    bool const members = std::all_of(c.listed_members.begin(), c.listed_members.end(), [](bool b) { return b; });
    bool const ok = members && c.kernel.dimension() == 12 && c.truncated_span.space == c.kernel.space &&
                    c.counted_dimension == 12;
    std::ostringstream d;
    d << " members=" << members << " dim K=" << c.kernel.dimension() << " count=" << c.counted_dimension;
    return {ok, d.str()};
}

Outcome relations_vanish() {
    auto const c = quadrics::table1_certificate(load("table1.poly", "f", 27, quadric_table()),
                                                load("st_basis.poly", "b", 10, st_cubic_table()));
    std::ostringstream d;
    d << " vanish=" << c.vanishing_ok() << " rank=" << c.rank;
    return {c.vanishing_ok() && c.rank == 27, d.str()};
}

Outcome flatness() {
    auto const c = freeness::freeness_certificate(load("table1.poly", "f", 27, quadric_table()));
    std::size_t const commuting = static_cast<std::size_t>(
        std::count_if(c.commutators.begin(), c.commutators.end(), [](auto const& p) { return p.commute; }));
    std::size_t const vanishing = static_cast<std::size_t>(
        std::count_if(c.relations.begin(), c.relations.end(), [](auto const& r) { return r.vanishes; }));
    std::ostringstream d;
    d << " commutators " << commuting << "/21, relations " << vanishing << "/27";
    return {c.matrices.size() == 7 && commuting == 21 && vanishing == 27, d.str()};
}

Outcome central_fiber() {
    auto const rel = load("table1.poly", "f", 27, quadric_table());
    auto const points = fiber::central_fiber_points(rel);
    auto const cone = fiber::reduced_cone_certificate(rel);
    std::vector<std::string> const all{"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"};
    std::size_t const full = fiber::tangent_dimension(0, fiber::central_fiber_equations(rel), all);
    std::size_t const reduced = fiber::tangent_dimension(0, cone.quadrics, {"x1", "x2", "x4", "x7"});
    bool const ok = points == std::vector<int>{0, 1, 7} && cone.ok() && full == 3 && reduced == 2;
    std::ostringstream d;
    d << " points=" << points.size() << " cone dim=" << cone.dimension << " tangent " << full << "/" << reduced;
    return {ok, d.str()};
}

Outcome torus_and_jacobians() {
    auto const rel = load("table1.poly", "f", 27, quadric_table());
    bool ok = fiber::torus_equivariance_check(rel).ok();
    std::ostringstream d;
    d << " homogeneous=" << ok;
    for (auto const& spec : fiber::fixed_point_specs()) {
        auto const r = fiber::smoothness_certificate(spec, rel);
        ok = ok && r.ok();
        d << " det(p" << spec.point << ")=" << to_string(r.determinant);
    }
    return {ok, d.str()};
}

Outcome ampleness_regions() {
    ampleness::IntersectionData const data(parse_intersection_table(read_text_file(g_fixtures / "intersections.tbl")));
    bool ok = true;
    std::ostringstream d;
    for (int stage = 1; stage <= 3; ++stage) {
        bool const s = ampleness::region_equivalence_certificate(data, stage).ok();
        ok = ok && s;
        d << " stage" << stage << "=" << s;
    }
    return {ok, d.str()};
}

Outcome twist_pattern() {
    ampleness::IntersectionData const data(parse_intersection_table(read_text_file(g_fixtures / "intersections.tbl")));
    std::size_t admissible = 0, good = 0;
    for (long an = 11; an <= 19; ++an)
        for (long bn = 11; bn <= 40; ++bn) {
            BigRational alpha(an, 20), beta(bn, 10);
            alpha.canonicalize();
            beta.canonicalize();
            auto const t = ampleness::contraction_twist_certificate(data, alpha, beta);
            if (!t.admissible)
                continue;
            ++admissible;
            good += t.pattern_ok();
        }
    std::ostringstream d;
    d << " " << good << "/" << admissible << " admissible grid points";
    return {admissible >= 20 && good == admissible, d.str()};
}

Outcome conic() {
    auto const c = fiber::conic_warmup_check();
    std::ostringstream d;
    d << " ideal=" << c.total_space_ok() << " fibres=" << c.fibres_ok();
    return {c.ok(), d.str()};
}

fs::path corrupted_copy(char const* tag, char const* file, std::string const& from, std::string const& to) {
    fs::path const dir = fs::temp_directory_path() / (std::string("bsv_acceptance_") + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (auto const& e : fs::directory_iterator(g_fixtures))
        fs::copy_file(e.path(), dir / e.path().filename());
    std::string text = read_text_file(dir / file);
    auto const pos = text.find(from);
    if (pos == std::string::npos)
        throw Error(std::string("corruption target not found in ") + file);
    text.replace(pos, from.size(), to);
    std::ofstream(dir / file, std::ios::binary) << text;
    return dir;
}

report::Status status_of(report::Report const& r, std::string const& name) {
    for (auto const& c : r.checks)
        if (c.name == name)
            return c.status;
    throw Error("missing check " + name);
}

Outcome negative_controls() {
    fs::path const rel_dir = corrupted_copy("table1", "table1.poly", "-3*z^2*x0*x4", "-3*z*x0*x4");
    report::Report const r1 = report::run({{"relations"}, rel_dir, std::nullopt});
    bool const rel_caught = status_of(r1, "table1_substitution") == report::Status::fail && report::exit_code(r1) == 1;

    fs::path const st_dir = corrupted_copy("st_basis", "st_basis.poly", "z*v*w^2 + z^2*u*v^2", "z^2*v*w^2 + z^2*u*v^2");
    report::Report const r2 = report::run({{"basis"}, st_dir, std::nullopt});
    bool const st_caught = status_of(r2, "st_basis_membership") == report::Status::fail && report::exit_code(r2) == 1;

    fs::remove_all(rel_dir);
    fs::remove_all(st_dir);
    std::ostringstream d;
    d << " table1 corruption caught=" << rel_caught << " st_basis corruption caught=" << st_caught;
    return {rel_caught && st_caught, d.str()};
}

} // namespace

int main(int argc, char** argv) {
    g_fixtures = argc > 1 ? fs::path(argv[1]) : fs::path(BSV_FIXTURE_DIR);
    std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
        {"membership dimensions", membership_dimensions},
        {"intersection cells", intersection_cells},
        {"S∩T generators", st_generators},
        {"local sections", local_sections},
        {"quadric relations", relations_vanish},
        {"multiplication matrices", flatness},
        {"central fiber", central_fiber},
        {"torus weights and Jacobians", torus_and_jacobians},
        {"ampleness regions", ampleness_regions},
        {"contraction twist", twist_pattern},
        {"conic warm-up", conic},
        {"negative controls", negative_controls},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (std::exception const& e) {
            o = {false, std::string(" error: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ":" << o.detail << "\n";
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria pass\n";
    return failures == 0 ? 0 : 1;
}
