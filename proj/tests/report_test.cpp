#include "bsv/report.hpp"

#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>

using namespace bsv;
using namespace bsv::report;

namespace {

namespace fs = std::filesystem;

fs::path scratch_copy(char const* tag) {
    fs::path const dir = fs::temp_directory_path() / (std::string("bsv_report_") + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (char const* f : {"table1.poly", "st_basis.poly", "local_basis.poly", "intersections.tbl"})
        fs::copy_file(test::fixture_path(f), dir / f);
    return dir;
}

void replace_in(fs::path const& file, std::string const& from, std::string const& to) {
    std::string text = read_text_file(file);
    auto const pos = text.find(from);
    ASSERT_NE(pos, std::string::npos) << from;
    text.replace(pos, from.size(), to);
    std::ofstream(file, std::ios::binary) << text;
}

CheckResult const& find(Report const& r, std::string const& name) {
    for (auto const& c : r.checks)
        if (c.name == name)
            return c;
    throw std::runtime_error("no check " + name);
}

TEST(Report, ResolveSuites) {
    EXPECT_EQ(resolve_suites({}), suite_names());
    EXPECT_EQ(resolve_suites({"all"}), suite_names());
    EXPECT_EQ(resolve_suites({"fiber", "basis", "fiber"}), (std::vector<std::string>{"basis", "fiber"}));
    EXPECT_THROW(resolve_suites({"geometry"}), Error);
}

TEST(Report, JsonIsDeterministicAndWellFormed) {
    RunConfig const cfg{{"relations", "fiber", "ampleness"}, BSV_FIXTURE_DIR, std::nullopt};
    std::string const a = to_json(run(cfg));
    std::string const b = to_json(run(cfg));
    EXPECT_EQ(a, b);
    auto const doc = nlohmann::json::parse(a);
    EXPECT_EQ(doc.at("version"), "1");
    ASSERT_EQ(doc.at("fixtures").size(), 3u);
    for (auto const& f : doc.at("fixtures"))
        EXPECT_EQ(f.at("checksum").get<std::string>().size(), 8u);
    std::size_t pass = 0;
    for (auto const& c : doc.at("checks")) {
        for (char const* k : {"suite", "name", "status", "anchor", "witness"})
            EXPECT_TRUE(c.contains(k)) << k;
        pass += c.at("status") == "pass";
    }
    EXPECT_EQ(doc.at("summary").at("pass").get<std::size_t>(), pass);
    EXPECT_EQ(pass, doc.at("checks").size());
}

TEST(Report, TextFormatListsEveryCheck) {
    Report const r = run({{"ampleness"}, BSV_FIXTURE_DIR, std::nullopt});
    std::string const text = to_text(r);
    for (auto const& c : r.checks)
        EXPECT_NE(text.find("PASS ampleness/" + c.name), std::string::npos);
    EXPECT_EQ(exit_code(r), 0);
}

TEST(Report, KnownCellFormulaFailure) {
    Report const r = run({{"basis"}, BSV_FIXTURE_DIR, std::nullopt});
    EXPECT_EQ(find(r, "intersection_cell_formula").status, Status::fail);
    EXPECT_EQ(find(r, "st_basis_membership").status, Status::pass);
    EXPECT_EQ(exit_code(r), 1);
}

TEST(Report, CorruptedRelationFlipsChecks) {
    fs::path const dir = scratch_copy("rel");
    replace_in(dir / "table1.poly", "-3*z^2*x0*x4", "-3*z*x0*x4");
    Report const r = run({{"relations"}, dir, std::nullopt});
    EXPECT_EQ(find(r, "table1_substitution").status, Status::fail);
    EXPECT_EQ(exit_code(r), 1);
    fs::remove_all(dir);
}

TEST(Report, MissingFixtureIsAFixtureError) {
    fs::path const dir = scratch_copy("missing");
    fs::remove(dir / "intersections.tbl");
    EXPECT_THROW(run({{"ampleness"}, dir, std::nullopt}), FixtureError);
    // Suites that do not need the file still run.
    EXPECT_NO_THROW(run({{"relations"}, dir, std::nullopt}));
    fs::remove_all(dir);
}

TEST(Report, MalformedFixtureNamesFileAndLine) {
    fs::path const dir = scratch_copy("malformed");
    replace_in(dir / "table1.poly", "x2^2", "x2^^2");
    try {
        run({{"relations"}, dir, std::nullopt});
        FAIL();
    } catch (FixtureError const& e) {
        EXPECT_NE(std::string(e.what()).find("table1.poly"), std::string::npos);
    }
    fs::remove_all(dir);
}

TEST(Report, DumpMatricesWritesSevenFiles) {
    fs::path const out = fs::temp_directory_path() / "bsv_report_dump";
    fs::remove_all(out);
    Report const r = run({{"freeness"}, BSV_FIXTURE_DIR, out});
    EXPECT_EQ(exit_code(r), 0);
    std::size_t n = 0;
    for (auto const& e : fs::directory_iterator(out))
        n += e.path().extension() == ".poly";
    EXPECT_EQ(n, 7u);
    fs::remove_all(out);
}

} // namespace
