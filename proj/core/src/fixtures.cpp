#include "bsv/fixtures.hpp"

#include "bsv/errors.hpp"

#include <boost/crc.hpp>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace bsv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool is_blank_or_comment(std::string_view line) {
    std::string_view const t = trim(line);
    return t.empty() || t.front() == '#';
}

bool valid_label(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

} // namespace

PolyFile parse_poly_file(std::string_view text) {
    auto const lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && is_blank_or_comment(lines[i]))
        ++i;
    if (i == lines.size())
        throw ParseError("empty polynomial file: expected a 'vars:' header", 1, 1);

    std::string_view header = trim(lines[i]);
    if (header.substr(0, 5) != "vars:")
        throw ParseError("expected 'vars:' header", i + 1, 1);
    VarTablePtr table;
    try {
        table = VarTable::make(header.substr(5));
    } catch (Error const& e) {
        throw ParseError(e.what(), i + 1, 1);
    }
    if (table->size() == 0)
        throw ParseError("'vars:' header declares no variables", i + 1, 1);
    if (table->find("z"))
        throw ParseError("'z' denotes the cube root of unity and cannot be declared as a variable", i + 1, 1);

    PolyFile out{table, {}};
    std::set<std::string> seen;

    struct Pending {
        std::string label;
        std::string body;
        std::size_t line;
        std::size_t column;
    };
    std::vector<Pending> blocks;
    for (++i; i < lines.size(); ++i) {
        std::string_view const line = lines[i];
        if (is_blank_or_comment(line))
            continue;
        if (std::isspace(static_cast<unsigned char>(line.front()))) {
            if (blocks.empty())
                throw ParseError("continuation line without a preceding entry", i + 1, 1);
            blocks.back().body += " ";
            blocks.back().body += std::string(trim(line));
            continue;
        }
        std::size_t const colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("expected 'label: polynomial'", i + 1, 1);
        std::string const label(trim(line.substr(0, colon)));
        if (!valid_label(label))
            throw ParseError("invalid label '" + label + "'", i + 1, 1);
        if (!seen.insert(label).second)
            throw ParseError("duplicate label '" + label + "'", i + 1, 1);
        blocks.push_back({label, std::string(line.substr(colon + 1)), i + 1, colon + 1});
    }
    if (blocks.empty())
        throw ParseError("polynomial file has a header but no entries", lines.size(), 1);

    for (auto const& b : blocks) {
        if (trim(b.body).empty())
            throw ParseError("entry '" + b.label + "' has an empty polynomial", b.line, b.column + 1);
        out.entries.push_back({b.label, parse_poly(b.body, table, b.line, b.column), b.line});
    }
    return out;
}

std::string write_poly_file(PolyFile const& f) {
    std::string out = "vars:";
    for (auto const& n : f.table->names())
        out += " " + n;
    out += "\n";
    for (auto const& e : f.entries)
        out += e.label + ": " + to_string(e.poly) + "\n";
    return out;
}

std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read fixture file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<MultiPoly> labeled_sequence(PolyFile const& f, std::string_view prefix, std::size_t count,
                                        VarTablePtr const& table) {
    std::vector<std::optional<MultiPoly>> slots(count);
    for (auto const& e : f.entries) {
        std::string_view label = e.label;
        std::size_t index = 0;
        bool ok = label.substr(0, prefix.size()) == prefix;
        if (ok) {
            std::string_view const digits = label.substr(prefix.size());
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
            ok = ec == std::errc() && ptr == digits.data() + digits.size() && index >= 1 && index <= count &&
                 digits.front() != '0';
        }
        if (!ok)
            throw ParseError("unexpected label '" + e.label + "' (expected " + std::string(prefix) + "1.." +
                                 std::string(prefix) + std::to_string(count) + ")",
                             e.line, 1);
        try {
            slots[index - 1] = e.poly.rebase(table);
        } catch (ArityError const& err) {
            throw ParseError(std::string("arity error: ") + err.what(), e.line, 1);
        }
    }
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k < count; ++k) {
        if (!slots[k])
            throw ParseError("missing entry '" + std::string(prefix) + std::to_string(k + 1) + "'");
        out.push_back(std::move(*slots[k]));
    }
    return out;
}

IntersectionTable parse_intersection_table(std::string_view text) {
    IntersectionTable out;
    auto const lines = split_lines(text);
    std::set<std::pair<int, std::string>> seen_rows;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (is_blank_or_comment(lines[i]))
            continue;
        std::istringstream in{std::string(lines[i])};
        std::string stage_tag, divisor;
        in >> stage_tag >> divisor;
        if (stage_tag.size() != 6 || stage_tag.substr(0, 5) != "stage" || !std::isdigit(stage_tag[5]))
            throw ParseError("expected 'stageN' tag, got '" + stage_tag + "'", i + 1, 1);
        int const stage = stage_tag[5] - '0';
        if (divisor.empty())
            throw ParseError("missing divisor name", i + 1, 1);
        if (!seen_rows.insert({stage, divisor}).second)
            throw ParseError("duplicate row for " + stage_tag + " " + divisor, i + 1, 1);

        auto& st = out.stages[stage];
        std::vector<std::string> curves;
        std::map<std::string, long> row;
        for (std::string cell; in >> cell;) {
            std::size_t const colon = cell.find(':');
            if (colon == std::string::npos || colon == 0)
                throw ParseError("expected 'curve:integer', got '" + cell + "'", i + 1, 1);
            std::string const curve = cell.substr(0, colon);
            std::string const value = cell.substr(colon + 1);
            long v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc() || ptr != value.data() + value.size())
                throw ParseError("intersection number '" + value + "' is not an integer", i + 1, 1);
            if (row.count(curve))
                throw ParseError("duplicate curve '" + curve + "' in row", i + 1, 1);
            row[curve] = v;
            curves.push_back(curve);
        }
        if (curves.empty())
            throw ParseError("row without intersection numbers", i + 1, 1);
        if (st.curves.empty())
            st.curves = curves;
        else if (st.curves != curves)
            throw ParseError("curve columns differ from earlier rows of " + stage_tag, i + 1, 1);
        st.divisors.push_back(divisor);
        st.numbers[divisor] = std::move(row);
    }
    if (out.stages.empty())
        throw ParseError("empty intersection table", 1, 1);
    return out;
}

std::string write_intersection_table(IntersectionTable const& t) {
    std::string out;
    for (auto const& [stage, st] : t.stages)
        for (auto const& d : st.divisors) {
            out += "stage" + std::to_string(stage) + " " + d;
            for (auto const& c : st.curves)
                out += " " + c + ":" + std::to_string(st.numbers.at(d).at(c));
            out += "\n";
        }
    return out;
}

std::string checksum(std::string_view bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
    return buf;
}

VarTablePtr quadric_table() {
    static VarTablePtr const t = VarTable::make("s t x0 x1 x2 x3 x4 x5 x6 x7 x8 x9");
    return t;
}

VarTablePtr st_cubic_table() {
    static VarTablePtr const t = VarTable::make("s t u v w");
    return t;
}

VarTablePtr t_cubic_table() {
    static VarTablePtr const t = VarTable::make("t u v w");
    return t;
}

} // namespace bsv
