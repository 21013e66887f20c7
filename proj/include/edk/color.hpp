#ifndef EDK_COLOR_HPP
#define EDK_COLOR_HPP

#include "edk/rational.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace edk {

/// Bitmask over color indices. Bit i is the color with index i.
using ColorSet = std::uint8_t;

constexpr int popcount(ColorSet s) noexcept { return std::popcount(static_cast<unsigned>(s)); }
constexpr bool contains(ColorSet s, unsigned index) noexcept { return (s >> index) & 1u; }

/// Pair colors of a digraph, stored relative to the vertex order of the pair:
/// for i < j, `forward` means the single arc i->j and `backward` the arc j->i.
enum class Arc : std::uint8_t { none = 0, both = 1, forward = 2, backward = 3 };

constexpr ColorSet arc_bits = 0b1100;

/// Edge-colorings of complete graphs with colors 1..r.
struct Multicolor {
    using color_type = std::uint8_t;
    static constexpr bool directed = false;
    static constexpr color_type reverse(color_type c) noexcept { return c; }
    static constexpr unsigned index(color_type c) noexcept { return c - 1u; }
    static constexpr color_type from_index(unsigned i) noexcept { return static_cast<color_type>(i + 1); }
    static constexpr ColorSet reverse_set(ColorSet s) noexcept { return s; }
};

/// Simple digraphs as colorings of pairs with {o, -, ->, <-}.
struct Directed {
    using color_type = Arc;
    static constexpr bool directed = true;
    static constexpr Arc reverse(Arc a) noexcept {
        switch (a) {
        case Arc::forward: return Arc::backward;
        case Arc::backward: return Arc::forward;
        default: return a;
        }
    }
    static constexpr unsigned index(Arc a) noexcept { return static_cast<unsigned>(a); }
    static constexpr Arc from_index(unsigned i) noexcept { return static_cast<Arc>(i); }
    static constexpr ColorSet reverse_set(ColorSet s) noexcept {
        const ColorSet fwd = (s >> 2) & 1u;
        const ColorSet bwd = (s >> 3) & 1u;
        return static_cast<ColorSet>((s & 0b0011) | (fwd << 3) | (bwd << 2));
    }
};

template <class Kind>
constexpr ColorSet bit(typename Kind::color_type c) noexcept {
    return static_cast<ColorSet>(1u << Kind::index(c));
}

inline char arc_symbol(Arc a) {
    switch (a) {
    case Arc::none: return 'o';
    case Arc::both: return '-';
    case Arc::forward: return '>';
    case Arc::backward: return '<';
    }
    return '?';
}

inline Arc parse_arc(std::string_view token) {
    if (token == "o" || token == "○") return Arc::none;
    if (token == "-" || token == "−") return Arc::both;
    if (token == ">" || token == "→") return Arc::forward;
    if (token == "<" || token == "←") return Arc::backward;
    throw ParseError("unknown arc symbol '" + std::string(token) + "'");
}

enum class PaletteKind { full, compl_, orien, undir, tourn };

/// Allowed pair colors of a digraph universe. Arrows always come in pairs.
struct Palette {
    PaletteKind kind = PaletteKind::full;
    ColorSet allowed = 0b1111;

    static constexpr ColorSet allowed_for(PaletteKind kind) noexcept {
        switch (kind) {
        case PaletteKind::full: return 0b1111;
        case PaletteKind::compl_: return 0b1110;
        case PaletteKind::orien: return 0b1101;
        case PaletteKind::undir: return 0b0011;
        case PaletteKind::tourn: return 0b1100;
        }
        return 0;
    }

    static constexpr Palette of(PaletteKind kind) noexcept { return Palette{kind, allowed_for(kind)}; }

    static Palette from_colors(ColorSet allowed) {
        if (contains(allowed, 2) != contains(allowed, 3)) {
            throw DomainError("palette must contain both arrows or neither");
        }
        for (auto k : {PaletteKind::full, PaletteKind::compl_, PaletteKind::orien, PaletteKind::undir,
                       PaletteKind::tourn}) {
            if (allowed_for(k) == allowed) {
                return of(k);
            }
        }
        throw DomainError("color set is not one of the five palettes");
    }

    bool allows(Arc a) const noexcept { return contains(allowed, Directed::index(a)); }
    bool has_none() const noexcept { return contains(allowed, 0); }
    bool has_both() const noexcept { return contains(allowed, 1); }
    bool has_arrows() const noexcept { return (allowed & arc_bits) != 0; }

    friend bool operator==(const Palette&, const Palette&) = default;
};

inline std::string palette_name(PaletteKind kind) {
    switch (kind) {
    case PaletteKind::full: return "full";
    case PaletteKind::compl_: return "compl";
    case PaletteKind::orien: return "orien";
    case PaletteKind::undir: return "undir";
    case PaletteKind::tourn: return "tourn";
    }
    return "?";
}

inline PaletteKind parse_palette_kind(std::string_view name) {
    if (name == "full") return PaletteKind::full;
    if (name == "compl") return PaletteKind::compl_;
    if (name == "orien") return PaletteKind::orien;
    if (name == "undir") return PaletteKind::undir;
    if (name == "tourn") return PaletteKind::tourn;
    throw ParseError("unknown palette '" + std::string(name) + "'");
}

/// Renders a color set as "{1,3}" (multicolor) or "{o,>}" (directed).
template <class Kind>
std::string format_color_set(ColorSet s) {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < 8; ++i) {
        if (!contains(s, i)) continue;
        if (!first) out += ',';
        first = false;
        if constexpr (Kind::directed) {
            out += arc_symbol(static_cast<Arc>(i));
        } else {
            out += std::to_string(i + 1);
        }
    }
    return out + "}";
}

}  // namespace edk

#endif  // EDK_COLOR_HPP
