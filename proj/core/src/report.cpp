#include "bsv/report.hpp"

#include "bsv/ampleness.hpp"
#include "bsv/fiber.hpp"
#include "bsv/freeness.hpp"
#include "bsv/quadrics.hpp"
#include "bsv/sections.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace bsv::report {

namespace {

using sections::SectionSpace;

std::string str(std::size_t n) { return std::to_string(n); }
std::string str(EisensteinRational const& x) { return to_string(x); }
std::string str(BigRational const& x) { return to_string(EisensteinRational(x)); }
std::string str(MultiPoly const& p) { return to_string(p); }
std::string str(bool b) { return b ? "true" : "false"; }

template <class Range, class F>
std::string join(Range const& r, F f, std::string const& sep = " ") {
    std::string out;
    for (auto const& x : r) {
        if (!out.empty())
            out += sep;
        out += f(x);
    }
    return out;
}

class Suite {
public:
    Suite(std::vector<CheckResult>& out, std::string name) : out_(out), name_(std::move(name)) {}

    void check(std::string name, std::string anchor, std::function<bool(Witness&)> const& body) {
        CheckResult r{name_, std::move(name), Status::error, std::move(anchor), {}};
        try {
            bool const ok = body(r.witness);
            r.status = ok ? Status::pass : Status::fail;
            if (!ok && r.witness.empty())
                r.witness.emplace_back("result", "false");
        } catch (std::exception const& e) {
            r.status = Status::error;
            r.witness = {{"error", e.what()}};
        }
        out_.push_back(std::move(r));
    }

private:
    std::vector<CheckResult>& out_;
    std::string name_;
};

/// Runs `make` once; later calls rethrow its failure as an Error.
template <class T>
class Lazy {
public:
    explicit Lazy(std::function<T()> make) : make_(std::move(make)) {}
    T const& get() {
        if (!done_) {
            done_ = true;
            try {
                value_.emplace(make_());
            } catch (std::exception const& e) {
                error_ = e.what();
            }
        }
        if (!value_)
            throw Error(error_);
        return *value_;
    }

private:
    std::function<T()> make_;
    bool done_ = false;
    std::optional<T> value_;
    std::string error_;
};

void basis_suite(std::vector<CheckResult>& out, FixtureSet const& fx) {
    Suite s(out, "basis");

    auto dims = [](std::function<SectionSpace(int)> space, Witness& w) {
        std::vector<std::size_t> const expected{1, 4, 7, 10};
        bool ok = true;
        for (int a = 0; a <= 3; ++a) {
            std::size_t const d = space(a).dimension();
            w.emplace_back("dim(" + std::to_string(a) + ")", str(d));
            ok = ok && d == expected[static_cast<std::size_t>(a)];
        }
        return ok;
    };
    s.check("s_membership_dimensions", "membership table for S", [&](Witness& w) {
        return dims(sections::s_membership_space, w);
    });
    s.check("t_membership_dimensions", "membership table for T", [&](Witness& w) {
        return dims(sections::t_membership_space, w);
    });

    s.check("intersection_cell_formula", "cells of S∩T: 0 when min(a,b)=0, a+b-1 otherwise", [&](Witness& w) {
        bool ok = true;
        std::vector<std::string> mismatches;
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                std::size_t const expected = std::min(a, b) == 0 ? 0 : static_cast<std::size_t>(a + b - 1);
                std::size_t const d = sections::intersection_cell(a, b).dimension();
                w.emplace_back("cell(" + std::to_string(a) + "," + std::to_string(b) + ")", str(d));
                if (d != expected) {
                    ok = false;
                    mismatches.push_back("(" + std::to_string(a) + "," + std::to_string(b) + "): " + str(d) +
                                         " != " + str(expected));
                }
            }
        VarTablePtr const t = sections::uvw_table();
        MultiPoly const gen = parse_poly("u^2*w + z*v*w^2 + z^2*u*v^2", t);
        Subspace const line = Subspace::span({sections::cubic_coordinates(gen)}, sections::kCubicFrameSize);
        bool const cell11 = sections::intersection_cell(1, 1).space == line;
        w.emplace_back("cell(1,1) spanned by u^2*w + z*v*w^2 + z^2*u*v^2", str(cell11));
        if (!mismatches.empty())
            w.emplace_back("mismatches", join(mismatches, [](auto const& x) { return x; }, "; "));
        return ok && cell11;
    });

    s.check("tilde_compatibility", "tilde coordinates and the cyclic shift", [&](Witness& w) {
        sections::TildeCompatibility const c = sections::tilde_compatibility_check();
        w.emplace_back("determinant", str(c.determinant));
        w.emplace_back("characters", join(c.characters, [](auto const& x) { return str(x); }));
        w.emplace_back("product_is_generator", str(c.product_is_generator));
        return c.ok();
    });

    Lazy<sections::STBasisCertificate> st([&] { return sections::st_basis_certificate(*fx.st_basis); });
    s.check("st_basis_membership", "generators of S∩T lie in their cells", [&](Witness& w) {
        auto const& c = st.get();
        for (auto const& g : c.generators)
            w.emplace_back("b" + str(g.index), "(" + std::to_string(g.a) + "," + std::to_string(g.b) + ") " +
                                                   (g.member ? "member" : "not member: " + g.detail));
        return c.membership_ok();
    });
    s.check("st_basis_determinant", "generators of S∩T are k[s,t]-independent", [&](Witness& w) {
        auto const& c = st.get();
        w.emplace_back("determinant", str(c.determinant));
        return c.freeness_ok();
    });
    s.check("st_basis_generation", "generators of S∩T span every cell up to (3,3)", [&](Witness& w) {
        auto const& c = st.get();
        for (auto const& cell : c.cells)
            if (!cell.equal || (cell.a == 3 && cell.b == 3))
                w.emplace_back("cell(" + std::to_string(cell.a) + "," + std::to_string(cell.b) + ")",
                               str(cell.generated_dimension) + " of " + str(cell.cell_dimension));
        return c.generation_ok();
    });

    Lazy<sections::LocalSectionCertificate> local([&] { return sections::local_section_space(*fx.local_basis); });
    s.check("local_chart_conditions", "sections over the blow-up charts", [&](Witness& w) {
        auto const& c = local.get();
        std::vector<std::string> failing;
        for (std::size_t i = 0; i < c.listed_members.size(); ++i)
            if (!c.listed_members[i])
                failing.push_back("l" + str(i + 1));
        w.emplace_back("listed", str(c.listed_members.size()));
        w.emplace_back("failing", failing.empty() ? "none" : join(failing, [](auto const& x) { return x; }));
        return failing.empty();
    });
    s.check("local_section_kernel", "sections over the blow-up charts form a free module", [&](Witness& w) {
        auto const& c = local.get();
        bool const same = c.kernel.space == c.truncated_span.space;
        w.emplace_back("kernel_dimension", str(c.kernel.dimension()));
        w.emplace_back("truncated_span_dimension", str(c.truncated_span.dimension()));
        w.emplace_back("counted_dimension", str(c.counted_dimension));
        w.emplace_back("kernel_equals_span", str(same));
        w.emplace_back("t_stable", str(c.t_stable));
        return c.kernel.dimension() == 12 && same && c.counted_dimension == 12 && c.t_stable;
    });
}

void relations_suite(std::vector<CheckResult>& out, FixtureSet const& fx) {
    Suite s(out, "relations");
    Lazy<quadrics::Table1Certificate> cert([&] { return quadrics::table1_certificate(*fx.relations, *fx.st_basis); });

    s.check("table1_frame", "quadric relations f1..f27 lie in the 165-frame", [&](Witness& w) {
        auto const& c = cert.get();
        for (auto const& r : c.rows)
            if (!r.in_frame)
                w.emplace_back("f" + str(r.index), r.frame_detail);
        w.emplace_back("rows", str(c.rows.size()));
        return c.frame_ok();
    });
    s.check("table1_substitution", "quadric relations f1..f27 vanish on the sections", [&](Witness& w) {
        auto const& c = cert.get();
        std::size_t zero = 0;
        for (auto const& r : c.rows) {
            if (r.residual.is_zero())
                ++zero;
            else
                w.emplace_back("residual f" + str(r.index), str(r.residual));
        }
        w.emplace_back("vanishing", str(zero) + " of " + str(c.rows.size()));
        return c.vanishing_ok();
    });
    s.check("table1_rank", "quadric relations f1..f27 are k(s,t)-independent", [&](Witness& w) {
        auto const& c = cert.get();
        w.emplace_back("rank", str(c.rank));
        return c.independence_ok();
    });
    s.check("relation_space", "kernel of the substitution on the 165-frame", [&](Witness& w) {
        auto const& c = cert.get();
        std::size_t inside = 0;
        for (auto const& r : c.rows)
            inside += r.in_kernel ? 1 : 0;
        w.emplace_back("kernel_dimension", str(c.kernel_dimension));
        w.emplace_back("rows_in_kernel", str(inside) + " of " + str(c.rows.size()));
        return inside == c.rows.size();
    });
}

void freeness_suite(std::vector<CheckResult>& out, FixtureSet const& fx,
                    std::optional<std::filesystem::path> const& dump) {
    Suite s(out, "freeness");
    Lazy<freeness::FreenessCertificate> cert([&] { return freeness::freeness_certificate(*fx.relations); });

    s.check("rewrite_heads", "one monic head per relation, all quadrics but x5^2", [&](Witness& w) {
        auto const& c = cert.get();
        w.emplace_back("rules", str(c.rule_count));
        w.emplace_back("heads_cover", str(c.heads_cover));
        return c.heads_cover;
    });
    s.check("commutators", "multiplication matrices commute pairwise", [&](Witness& w) {
        auto const& c = cert.get();
        std::size_t ok = 0;
        for (auto const& p : c.commutators) {
            if (p.commute)
                ++ok;
            else
                w.emplace_back("[M" + std::to_string(p.i) + ",M" + std::to_string(p.j) + "]", p.detail);
        }
        w.emplace_back("commuting_pairs", str(ok) + " of " + str(c.commutators.size()));
        return c.commutation_ok();
    });
    s.check("matrix_relations", "multiplication matrices satisfy f1..f27", [&](Witness& w) {
        auto const& c = cert.get();
        std::size_t ok = 0;
        for (auto const& r : c.relations) {
            if (r.vanishes)
                ++ok;
            else
                w.emplace_back("f" + str(r.index), r.detail);
        }
        w.emplace_back("vanishing", str(ok) + " of " + str(c.relations.size()));
        return c.relations_ok();
    });
    s.check("flatness", "free of rank 9, hence flat over the (s,t)-plane", [&](Witness& w) {
        auto const& c = cert.get();
        w.emplace_back("rank", str(freeness::kModuleRank));
        w.emplace_back("basis", join(freeness::module_basis_names(), [](auto const& x) { return x; }));
        if (dump) {
            freeness::dump_matrices(c, *dump);
            w.emplace_back("dumped", str(c.matrices.size()) + " matrices");
        }
        return c.flat();
    });
}

void fiber_suite(std::vector<CheckResult>& out, FixtureSet const& fx) {
    Suite s(out, "fiber");
    auto const& rel = *fx.relations;

    s.check("torus_equivariance", "torus action on the quadric relations", [&](Witness& w) {
        fiber::TorusCheck const c = fiber::torus_equivariance_check(rel);
        for (std::size_t i = 0; i < c.weights.size(); ++i)
            w.emplace_back("f" + str(i + 1), c.weights[i] ? "(" + std::to_string(c.weights[i]->first) + "," +
                                                                std::to_string(c.weights[i]->second) + ")"
                                                          : c.errors[i]);
        return c.ok();
    });
    s.check("central_fiber_points", "coordinate points on the central fiber", [&](Witness& w) {
        std::vector<int> const p = fiber::central_fiber_points(rel);
        w.emplace_back("points", join(p, [](int i) { return "p" + std::to_string(i); }));
        return p == std::vector<int>{0, 1, 7};
    });
    Lazy<fiber::ReducedCone> cone([&] { return fiber::reduced_cone_certificate(rel); });
    s.check("reduced_cone", "reduced central fiber is a cone over a twisted cubic", [&](Witness& w) {
        auto const& c = cone.get();
        w.emplace_back("quadric_space_dimension", str(c.dimension));
        w.emplace_back("free_of_x1", str(c.free_of_x1));
        for (std::size_t i = 0; i < c.quadrics.size(); ++i)
            w.emplace_back("from f" + str(c.sources[i]), str(c.quadrics[i]));
        if (c.c4) {
            w.emplace_back("c2", str(*c.c2));
            w.emplace_back("c4", str(*c.c4));
            w.emplace_back("c7", str(*c.c7));
        }
        w.emplace_back("parametrization", str(c.parametrization_ok));
        return c.ok();
    });
    s.check("tangent_dimensions", "Zariski tangent space at p0: fiber 3, reduced cone 2", [&](Witness& w) {
        std::size_t const full = fiber::tangent_dimension(
            0, fiber::central_fiber_equations(rel), {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"});
        std::size_t const reduced = fiber::tangent_dimension(0, cone.get().quadrics, {"x2", "x4", "x7", "x1"});
        w.emplace_back("fiber", str(full));
        w.emplace_back("reduced_cone", str(reduced));
        return full == 3 && reduced == 2;
    });
    for (auto const& spec : fiber::fixed_point_specs()) {
        std::string const p = "p" + std::to_string(spec.point);
        s.check("jacobian_" + p, "Jacobian criterion at " + p, [&](Witness& w) {
            fiber::SmoothnessResult const r = fiber::smoothness_certificate(spec, rel);
            w.emplace_back("equations", join(spec.equations, [](std::size_t k) { return "f" + str(k); }));
            w.emplace_back("variables", join(spec.variables, [](auto const& x) { return x; }));
            w.emplace_back("determinant", str(r.determinant));
            return r.ok();
        });
    }
    s.check("conic_warmup", "conic bundle s*x^2 + t*y^2 + z^2", [&](Witness& w) {
        fiber::ConicCheck const c = fiber::conic_warmup_check();
        char const* const names[] = {"x^2", "y^2", "z"};
        for (std::size_t i = 0; i < c.ideal_contains.size(); ++i)
            w.emplace_back(std::string("partials ideal contains ") + names[i], str(bool(c.ideal_contains[i])));
        w.emplace_back("hessian_determinant", str(c.hessian_determinant));
        std::size_t singular = 0;
        for (auto const& x : c.witnesses)
            singular += x.singular() ? 1 : 0;
        w.emplace_back("singular_fibres", str(singular) + " of " + str(c.witnesses.size()) + " sampled");
        return c.ok();
    });
}

void ampleness_suite(std::vector<CheckResult>& out, FixtureSet const& fx) {
    using namespace ampleness;
    Suite s(out, "ampleness");
    IntersectionData const data(*fx.intersections);

    for (int stage = 1; stage <= 3; ++stage)
        s.check("region_stage" + std::to_string(stage), "ample region at stage " + std::to_string(stage),
                [&, stage](Witness& w) {
                    RegionCertificate const c = region_equivalence_certificate(data, stage);
                    for (auto const& cc : c.curves)
                        w.emplace_back(cc.curve, str(cc.degree) + " ; " + to_string(cc.relation) + " ; " + cc.normalized);
                    w.emplace_back("clearing_factors_checked", str(c.clearing_ok));
                    return c.ok();
                });

    s.check("ample_examples", "strict positivity on every curve", [&](Witness& w) {
        AmpleResult const a = is_ample(data, 1, {1, 0, 0});
        AmpleResult const b = is_ample(data, 1, {BigRational(2, 3), 0, 0});
        AmpleResult const c = is_ample(data, 3, {BigRational(3, 4), 3, 2});
        w.emplace_back("stage1 alpha=1", str(a.ample));
        w.emplace_back("stage1 alpha=2/3", str(b.ample) + " vanishing " + join(b.vanishing, [](auto const& x) { return x; }));
        w.emplace_back("stage3 alpha=3/4 beta=3 gamma=2", str(c.ample));
        return a.ample && !b.ample && b.vanishing == std::vector<std::string>{"l_vw"} && c.ample;
    });

    auto twist_witness = [](TwistResult const& t, Witness& w, std::string const& tag) {
        w.emplace_back(tag + " gamma", str(t.gamma));
        w.emplace_back(tag + " m", str(t.m));
        w.emplace_back(tag + " degrees",
                       join(t.degrees, [](CurveDegree const& d) { return d.curve + ":" + str(d.degree); }));
    };
    s.check("contraction_twist_examples", "twist degrees for the contraction parameters", [&](Witness& w) {
        TwistResult const a = contraction_twist_certificate(data, BigRational(3, 5), 2);
        TwistResult const b = contraction_twist_certificate(data, BigRational(9, 10), BigRational(6, 5));
        TwistResult const c = contraction_twist_certificate(data, BigRational(1, 2), 2);
        twist_witness(a, w, "alpha=3/5 beta=2");
        twist_witness(b, w, "alpha=9/10 beta=6/5");
        w.emplace_back("alpha=1/2 beta=2", c.admissible ? "admissible" : "rejected: " + c.precondition);
        return a.pattern_ok() && a.gamma == BigRational(5, 4) && a.m == BigRational(1, 4) && b.pattern_ok() &&
               b.gamma == BigRational(25, 3) && b.m == BigRational(2, 3) && !c.admissible;
    });
    s.check("contraction_twist_grid", "twist vanishes exactly on d_u and l_vw", [&](Witness& w) {
        std::size_t admissible = 0;
        std::vector<std::string> bad;
        for (long an = 11; an <= 19; ++an)
            for (long bn = 11; bn <= 40; ++bn) {
                BigRational alpha(an, 20), beta(bn, 10);
                alpha.canonicalize();
                beta.canonicalize();
                TwistResult const t = contraction_twist_certificate(data, alpha, beta);
                if (!t.admissible)
                    continue;
                ++admissible;
                if (!t.pattern_ok())
                    bad.push_back("(" + str(alpha) + "," + str(beta) + ")");
            }
        w.emplace_back("admissible_points", str(admissible));
        if (!bad.empty())
            w.emplace_back("pattern_failures", join(bad, [](auto const& x) { return x; }));
        return admissible >= 20 && bad.empty();
    });
}

std::vector<std::string> needed_files(std::vector<std::string> const& suites) {
    std::set<std::string> need;
    for (auto const& s : suites) {
        if (s == "basis")
            need.insert({"st_basis.poly", "local_basis.poly"});
        else if (s == "relations")
            need.insert({"table1.poly", "st_basis.poly"});
        else if (s == "freeness" || s == "fiber")
            need.insert("table1.poly");
        else if (s == "ampleness")
            need.insert("intersections.tbl");
    }
    std::vector<std::string> out;
    for (char const* f : {"table1.poly", "st_basis.poly", "local_basis.poly", "intersections.tbl"})
        if (need.count(f))
            out.emplace_back(f);
    return out;
}

} // namespace

std::string to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    }
    return "error";
}

Summary Report::summary() const {
    Summary s;
    for (auto const& c : checks)
        (c.status == Status::pass ? s.pass : c.status == Status::fail ? s.fail : s.error) += 1;
    return s;
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.status == Status::pass; });
}

std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const n{"basis", "relations", "freeness", "fiber", "ampleness"};
    return n;
}

std::vector<std::string> resolve_suites(std::vector<std::string> const& requested) {
    std::set<std::string> want;
    for (auto const& r : requested) {
        if (r == "all") {
            want.insert(suite_names().begin(), suite_names().end());
            continue;
        }
        if (std::find(suite_names().begin(), suite_names().end(), r) == suite_names().end())
            throw Error("unknown suite '" + r + "'");
        want.insert(r);
    }
    if (want.empty())
        want.insert(suite_names().begin(), suite_names().end());
    std::vector<std::string> out;
    for (auto const& n : suite_names())
        if (want.count(n))
            out.push_back(n);
    return out;
}

FixtureSet load_fixtures(std::filesystem::path const& dir, std::vector<std::string> const& suites) {
    FixtureSet fx;
    for (auto const& name : needed_files(suites)) {
        std::filesystem::path const path = dir / name;
        std::string text;
        try {
            text = read_text_file(path);
        } catch (Error const& e) {
            throw FixtureError(e.what());
        }
        fx.files.push_back({name, checksum(text)});
        try {
            if (name == "intersections.tbl") {
                fx.intersections = parse_intersection_table(text);
                ampleness::IntersectionData const check(*fx.intersections);
            } else {
                PolyFile const f = parse_poly_file(text);
                if (name == "table1.poly")
                    fx.relations = labeled_sequence(f, "f", quadrics::kRelationCount, quadric_table());
                else if (name == "st_basis.poly")
                    fx.st_basis = labeled_sequence(f, "b", 10, st_cubic_table());
                else
                    fx.local_basis = labeled_sequence(f, "l", 10, t_cubic_table());
            }
        } catch (Error const& e) {
            throw FixtureError(path.string() + ": " + e.what());
        }
    }
    return fx;
}

Report run_suites(std::vector<std::string> const& suites, FixtureSet const& fixtures,
                  std::optional<std::filesystem::path> const& dump_matrices) {
    Report r;
    r.fixtures = fixtures.files;
    for (auto const& s : resolve_suites(suites)) {
        if (s == "basis")
            basis_suite(r.checks, fixtures);
        else if (s == "relations")
            relations_suite(r.checks, fixtures);
        else if (s == "freeness")
            freeness_suite(r.checks, fixtures, dump_matrices);
        else if (s == "fiber")
            fiber_suite(r.checks, fixtures);
        else if (s == "ampleness")
            ampleness_suite(r.checks, fixtures);
    }
    return r;
}

Report run(RunConfig const& config) {
    std::vector<std::string> const suites = resolve_suites(config.suites);
    FixtureSet const fx = load_fixtures(config.fixtures_dir, suites);
    return run_suites(suites, fx, config.dump_matrices);
}

std::string to_json(Report const& r) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["version"] = kReportVersion;
    doc["fixtures"] = json::array();
    for (auto const& f : r.fixtures)
        doc["fixtures"].push_back({{"path", f.path}, {"checksum", f.checksum}});
    doc["checks"] = json::array();
    for (auto const& c : r.checks) {
        json w = json::object();
        for (auto const& [k, v] : c.witness)
            w[k] = v;
        doc["checks"].push_back(
            {{"suite", c.suite}, {"name", c.name}, {"status", to_string(c.status)}, {"anchor", c.anchor}, {"witness", w}});
    }
    Summary const s = r.summary();
    doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"error", s.error}};
    return doc.dump(2) + "\n";
}

std::string to_text(Report const& r) {
    std::ostringstream os;
    os << "verification report v" << kReportVersion << "\n";
    for (auto const& f : r.fixtures)
        os << "fixture " << f.path << " crc32 " << f.checksum << "\n";
    for (auto const& c : r.checks) {
        std::string status = to_string(c.status);
        std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
        os << status << " " << c.suite << "/" << c.name << " -- " << c.anchor << "\n";
        for (auto const& [k, v] : c.witness)
            os << "    " << k << ": " << v << "\n";
    }
    Summary const s = r.summary();
    os << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.error << " error\n";
    return os.str();
}

int exit_code(Report const& r) {
    return r.all_pass() ? 0 : 1;
}

} // namespace bsv::report
