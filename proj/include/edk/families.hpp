#ifndef EDK_FAMILIES_HPP
#define EDK_FAMILIES_HPP

// Small named graphs and properties used by the verification suite, demos and tests.

#include "edk/graph.hpp"

#include <cstdint>
#include <vector>

namespace edk::families {

/// Triangle with pair colors (0,1)=a, (0,2)=b, (1,2)=c.
inline ColoredGraph triangle(int r, std::uint8_t a, std::uint8_t b, std::uint8_t c) { return colored_graph(3, r, {a, b, c}); }

inline MulticolorFamily forb(int r, std::vector<ColoredGraph> graphs) {
    MulticolorFamily f;
    f.r = r;
    f.forbidden = std::move(graphs);
    f.validate();
    return f;
}

inline DirectedFamily forb(PaletteKind palette, std::vector<DiGraph> graphs) {
    DirectedFamily f;
    f.palette = Palette::of(palette);
    f.forbidden = std::move(graphs);
    f.validate();
    return f;
}

/// r=3, no triangle colored 1,1,2 and none colored 2,2,3.
inline MulticolorFamily two_bichromatic() { return forb(3, {triangle(3, 1, 1, 2), triangle(3, 2, 2, 3)}); }

/// r=3, no triangle colored 1,1,2.
inline MulticolorFamily one_bichromatic() { return forb(3, {triangle(3, 1, 1, 2)}); }

/// K5 whose two color classes are 5-cycles: color 1 on i~i+1, color 2 on the chords.
inline ColoredGraph pentagon_pair() {
    ColoredGraph g(5, 2, 2);
    for (std::size_t i = 0; i < 5; ++i) g.set_color(i, (i + 1) % 5, 1);
    return g;
}

inline MulticolorFamily no_pentagon_pair() { return forb(2, {pentagon_pair()}); }

inline MulticolorFamily mono_triangle(int r, std::uint8_t color = 1) { return forb(r, {monochromatic(3, r, color)}); }

inline MulticolorFamily two_mono_triangles() { return forb(3, {monochromatic(3, 3, 1), monochromatic(3, 3, 2)}); }

/// Every triangle using exactly two of the three colors.
inline MulticolorFamily all_bichromatic() {
    std::vector<ColoredGraph> gs;
    for (std::uint8_t a = 1; a <= 3; ++a) {
        for (std::uint8_t b = 1; b <= 3; ++b) {
            if (a != b) gs.push_back(triangle(3, a, a, b));
        }
    }
    return forb(3, std::move(gs));
}

inline MulticolorFamily rainbow() { return forb(3, {triangle(3, 1, 2, 3)}); }

/// 0 -> 1 -> 2 -> 0.
inline DiGraph cyclic_triangle() { return digraph(3, {Arc::forward, Arc::backward, Arc::forward}); }

/// Transitive tournament on n vertices: i -> j whenever i < j.
inline DiGraph transitive_tournament(std::size_t n) { return DiGraph(n, 4, Arc::forward); }

inline DiGraph transitive_triangle() { return transitive_tournament(3); }

/// Quadratic-residue tournament on Z_7: i -> j iff j - i is 1, 2 or 4 mod 7.
inline DiGraph paley7() {
    DiGraph g(7, 4, Arc::forward);
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = i + 1; j < 7; ++j) {
            const std::size_t d = (j - i) % 7;
            g.set_color(i, j, (d == 1 || d == 2 || d == 4) ? Arc::forward : Arc::backward);
        }
    }
    return g;
}

}  // namespace edk::families

#endif  // EDK_FAMILIES_HPP
