#include "bsv/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

std::filesystem::path fixture_dir(std::string const& flag) {
    if (!flag.empty())
        return flag;
    if (char const* env = std::getenv("VERIFY_FIXTURES"); env && *env)
        return env;
    return "fixtures";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the Brauer-Severi bundle computations"};
    app.require_subcommand(1);

    std::vector<std::string> suites;
    std::string format = "json";
    std::string out_path;
    std::string fixtures;
    std::string dump_dir;

    CLI::App* run = app.add_subcommand("run", "Run verification suites");
    run->add_option("--suite", suites, "basis, relations, freeness, fiber, ampleness or all (repeatable)");
    run->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    run->add_option("--out", out_path, "Write the report here instead of stdout");
    run->add_option("--fixtures", fixtures, "Fixture directory (default: $VERIFY_FIXTURES, then ./fixtures)");
    run->add_option("--dump-matrices", dump_dir, "Write the multiplication matrices of the freeness suite here");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bsv::report::RunConfig config;
    config.suites = suites;
    config.fixtures_dir = fixture_dir(fixtures);
    if (!dump_dir.empty())
        config.dump_matrices = dump_dir;

    bsv::report::Report report;
    try {
        report = bsv::report::run(config);
    } catch (bsv::report::FixtureError const& e) {
        std::cerr << "verify: fixture error: " << e.what() << "\n";
        return 2;
    } catch (bsv::Error const& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }

    std::string const text = format == "json" ? bsv::report::to_json(report) : bsv::report::to_text(report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!(out << text)) {
            std::cerr << "verify: cannot write " << out_path << "\n";
            return 2;
        }
    }
    return bsv::report::exit_code(report);
}
