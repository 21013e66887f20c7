#ifndef EDK_PROPERTY_IO_HPP
#define EDK_PROPERTY_IO_HPP

// Line-oriented text format shared by property files and graph files:
//
//   # comment
//   multicolor r=3              (or: directed palette=tourn)
//   graph n=3
//   1 1                         row 0: colors of pairs (0,1) (0,2)
//   2                           row 1: color of pair (1,2)
//
// Directed rows use the symbols o - > < where > on pair (i,j), i<j, is the arc i->j.

#include "edk/color.hpp"
#include "edk/graph.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace edk {

using AnyFamily = std::variant<MulticolorFamily, DirectedFamily>;

namespace detail {

struct Line {
    int number;
    std::string text;
};

inline std::vector<Line> significant_lines(std::string_view text, bool keep_blank) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string t = trim(raw);
        if (!t.empty() || keep_blank) out.push_back({number, std::move(t)});
        start = end + 1;
    }
    return out;
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] inline void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

/// Parses "key=value" and returns value, or fails.
inline std::string keyed(const std::string& token, std::string_view key, int line) {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 || token[key.size()] != '=') {
        fail(line, "expected '" + std::string(key) + "=<value>', got '" + token + "'");
    }
    return token.substr(key.size() + 1);
}

inline long parse_int(const std::string& s, int line) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "expected an integer, got '" + s + "'");
    return v;
}

struct Header {
    bool directed = false;
    int r = 0;
    Palette palette;
};

inline Header parse_header(const Line& l) {
    auto tok = split_ws(l.text);
    Header h;
    if (tok.size() == 2 && tok[0] == "multicolor") {
        h.r = static_cast<int>(parse_int(keyed(tok[1], "r", l.number), l.number));
        if (h.r < 2 || h.r > 8) fail(l.number, "r must be in 2..8");
    } else if (tok.size() == 2 && tok[0] == "directed") {
        h.directed = true;
        try {
            h.palette = Palette::of(parse_palette_kind(keyed(tok[1], "palette", l.number)));
        } catch (const ParseError& e) {
            fail(l.number, e.what());
        }
    } else {
        fail(l.number, "expected 'multicolor r=<int>' or 'directed palette=<name>'");
    }
    return h;
}

inline bool is_header(const Line& l) {
    return l.text.rfind("multicolor", 0) == 0 || l.text.rfind("directed", 0) == 0;
}

/// Reads one "graph n=" block starting at lines[pos]; advances pos.
template <class Kind>
CompleteGraph<Kind> parse_block(const std::vector<Line>& lines, std::size_t& pos, const Header& header) {
    const Line& head = lines[pos];
    auto tok = split_ws(head.text);
    if (tok.size() != 2 || tok[0] != "graph") fail(head.number, "expected 'graph n=<int>'");
    const long n = parse_int(keyed(tok[1], "n", head.number), head.number);
    if (n < 1) fail(head.number, "graph must have at least one vertex");
    if (n > 64) fail(head.number, "graph too large for this format (n > 64)");
    ++pos;

    std::vector<typename Kind::color_type> upper;
    for (long i = 0; i + 1 < n; ++i) {
        if (pos >= lines.size() || lines[pos].text.empty()) {
            fail(pos < lines.size() ? lines[pos].number : head.number,
                 "graph n=" + std::to_string(n) + " needs " + std::to_string(n - 1) + " rows");
        }
        const Line& row = lines[pos++];
        auto cells = split_ws(row.text);
        if (static_cast<long>(cells.size()) != n - 1 - i) {
            fail(row.number, "row " + std::to_string(i) + " needs " + std::to_string(n - 1 - i) + " entries, got " +
                                 std::to_string(cells.size()));
        }
        for (const auto& cell : cells) {
            if constexpr (Kind::directed) {
                Arc a;
                try {
                    a = parse_arc(cell);
                } catch (const ParseError& e) {
                    fail(row.number, e.what());
                }
                if (!header.palette.allows(a)) {
                    fail(row.number, "color '" + cell + "' not in palette " + palette_name(header.palette.kind));
                }
                upper.push_back(a);
            } else {
                long c = parse_int(cell, row.number);
                if (c < 1 || c > header.r) {
                    fail(row.number, "color out of range: " + cell + " (r=" + std::to_string(header.r) + ")");
                }
                upper.push_back(static_cast<std::uint8_t>(c));
            }
        }
    }
    return from_upper_triangle<Kind>(static_cast<std::size_t>(n), Kind::directed ? 4 : header.r, upper);
}

}  // namespace detail

inline AnyFamily parse_property(std::string_view text) {
    auto lines = detail::significant_lines(text, true);
    std::size_t pos = 0;
    auto skip_blank = [&] {
        while (pos < lines.size() && lines[pos].text.empty()) ++pos;
    };
    skip_blank();
    if (pos == lines.size()) throw ParseError("line 1: empty property file");
    const auto header = detail::parse_header(lines[pos++]);

    auto read_all = [&]<class Kind>(Family<Kind>& family) {
        for (skip_blank(); pos < lines.size(); skip_blank()) {
            family.forbidden.push_back(detail::parse_block<Kind>(lines, pos, header));
        }
        if (family.forbidden.empty()) {
            throw ParseError("line " + std::to_string(lines.back().number) + ": no forbidden graphs declared");
        }
    };

    if (header.directed) {
        DirectedFamily family;
        family.palette = header.palette;
        read_all(family);
        family.validate();
        return family;
    }
    MulticolorFamily family;
    family.r = header.r;
    read_all(family);
    family.validate();
    return family;
}

/// A graph file: an optional header line followed by exactly one graph block.
/// `num_colors` is r for multicolor graphs; `palette` restricts directed ones.
template <class Kind>
CompleteGraph<Kind> parse_graph(std::string_view text, int num_colors, Palette palette = Palette::of(PaletteKind::full)) {
    auto lines = detail::significant_lines(text, true);
    std::size_t pos = 0;
    auto skip_blank = [&] {
        while (pos < lines.size() && lines[pos].text.empty()) ++pos;
    };
    skip_blank();
    if (pos == lines.size()) throw ParseError("line 1: empty graph file");
    detail::Header header;
    header.directed = Kind::directed;
    header.r = num_colors;
    header.palette = palette;
    if (detail::is_header(lines[pos])) {
        auto declared = detail::parse_header(lines[pos]);
        if (declared.directed != Kind::directed) detail::fail(lines[pos].number, "graph kind does not match property");
        if (!Kind::directed && declared.r != num_colors) detail::fail(lines[pos].number, "graph r does not match property");
        ++pos;
    }
    skip_blank();
    if (pos == lines.size()) throw ParseError("no graph block");
    auto g = detail::parse_block<Kind>(lines, pos, header);
    skip_blank();
    if (pos != lines.size()) detail::fail(lines[pos].number, "graph file holds more than one graph");
    return g;
}

template <class Kind>
std::string format_graph(const CompleteGraph<Kind>& g) {
    std::string out = "graph n=" + std::to_string(g.size()) + "\n";
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (j > i + 1) out += ' ';
            if constexpr (Kind::directed) {
                out += arc_symbol(g.color(i, j));
            } else {
                out += std::to_string(g.color(i, j));
            }
        }
        out += '\n';
    }
    return out;
}

inline std::string format_header(const MulticolorFamily& f) { return "multicolor r=" + std::to_string(f.r) + "\n"; }
inline std::string format_header(const DirectedFamily& f) { return "directed palette=" + palette_name(f.palette.kind) + "\n"; }

template <class Kind>
std::string format_family(const Family<Kind>& family) {
    std::string out = format_header(family);
    for (std::size_t i = 0; i < family.forbidden.size(); ++i) {
        if (i) out += '\n';
        out += format_graph(family.forbidden[i]);
    }
    return out;
}

}  // namespace edk

#endif  // EDK_PROPERTY_IO_HPP
