#pragma once

// Text fixtures: labeled polynomial files and the intersection-number table.
//
// Polynomial files:
//
//     # comment
//     vars: s t x0 x1 x2
//     f1: -3*z^2*x0*x4 - x1*x3 + x2^2
//         + 0            (indented lines continue the previous entry)
//
// Intersection tables, one row per (stage, divisor):
//
//     stage3 E3 d_u:1 e_u:-1 l_vw:-2 c_u:0 f2_u:1 f_u:-1

#include "bsv/poly.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bsv {

struct LabeledPoly {
    std::string label;
    MultiPoly poly;
    std::size_t line;
};

struct PolyFile {
    VarTablePtr table;
    std::vector<LabeledPoly> entries;
};

/// Throws ParseError with line/column (duplicate labels, undeclared
/// variables, missing header, empty file).
PolyFile parse_poly_file(std::string_view text);
/// Canonical serialization; parse_poly_file(write_poly_file(f)) == f.
std::string write_poly_file(PolyFile const& f);

/// Reads a whole file; throws Error naming the path when unreadable.
std::string read_text_file(std::filesystem::path const& path);

/// Extracts entries `<prefix>1` .. `<prefix>count` in index order, rebased
/// onto `table`. Throws ParseError for missing or unexpected labels.
std::vector<MultiPoly> labeled_sequence(PolyFile const& f, std::string_view prefix, std::size_t count,
                                        VarTablePtr const& table);

/// Stage-tagged intersection numbers. Column order within a stage follows
/// the first row of that stage.
struct IntersectionTable {
    struct Stage {
        std::vector<std::string> curves;
        std::vector<std::string> divisors;
        std::map<std::string, std::map<std::string, long>> numbers;  // divisor -> curve -> value
    };
    std::map<int, Stage> stages;
};

IntersectionTable parse_intersection_table(std::string_view text);
std::string write_intersection_table(IntersectionTable const& t);

/// CRC-32 of the bytes, as 8 lowercase hex digits.
std::string checksum(std::string_view bytes);

// Canonical variable tables of the fixtures.
VarTablePtr quadric_table();     // s t x0 .. x9
VarTablePtr st_cubic_table();    // s t u v w
VarTablePtr t_cubic_table();     // t u v w

} // namespace bsv
