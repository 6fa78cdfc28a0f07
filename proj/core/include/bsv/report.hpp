#pragma once

// Verification suites over the shipped fixtures and the deterministic
// report they produce.

#include "bsv/errors.hpp"
#include "bsv/fixtures.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsv::report {

inline constexpr char const* kReportVersion = "1";

enum class Status { pass, fail, error };
std::string to_string(Status s);

using Witness = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
    std::string suite;
    std::string name;
    Status status = Status::error;
    std::string anchor;
    Witness witness;
};

struct FixtureInfo {
    std::string path;
    std::string checksum;
};

struct Summary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t error = 0;
};

struct Report {
    std::vector<FixtureInfo> fixtures;
    std::vector<CheckResult> checks;

    Summary summary() const;
    bool all_pass() const;
};

/// Suites in execution order.
std::vector<std::string> const& suite_names();

/// Unreadable or malformed fixture; the message names the file (and line).
class FixtureError : public Error {
public:
    using Error::Error;
};

struct FixtureSet {
    std::vector<FixtureInfo> files;
    std::optional<std::vector<MultiPoly>> relations;    // table1.poly, f1..f27
    std::optional<std::vector<MultiPoly>> st_basis;     // st_basis.poly, b1..b10
    std::optional<std::vector<MultiPoly>> local_basis;  // local_basis.poly, l1..l10
    std::optional<IntersectionTable> intersections;     // intersections.tbl
};

/// Loads the fixtures the given suites need. Throws FixtureError.
FixtureSet load_fixtures(std::filesystem::path const& dir, std::vector<std::string> const& suites);

struct RunConfig {
    std::vector<std::string> suites;  // may contain "all"; empty means all
    std::filesystem::path fixtures_dir;
    std::optional<std::filesystem::path> dump_matrices;
};

/// Normalizes the suite list to execution order. Throws Error for unknown names.
std::vector<std::string> resolve_suites(std::vector<std::string> const& requested);

/// Runs the suites. Throws FixtureError on fixture problems.
Report run(RunConfig const& config);
Report run_suites(std::vector<std::string> const& suites, FixtureSet const& fixtures,
                  std::optional<std::filesystem::path> const& dump_matrices = std::nullopt);

std::string to_json(Report const& r);
std::string to_text(Report const& r);

/// 0 when every check passes, 1 otherwise.
int exit_code(Report const& r);

} // namespace bsv::report
