// Walks through one property end to end: spectrum, bounds, an edit and the exact distance.

#include "edk/distfun.hpp"
#include "edk/editing.hpp"
#include "edk/families.hpp"
#include "edk/oracle.hpp"
#include "edk/property_io.hpp"

#include <iostream>

using namespace edk;

int main() {
    // 3-colorings of K_n with no rainbow triangle
    const auto family = families::rainbow();
    std::cout << format_family(family) << "\n";

    const auto weak = clique_spectrum(family, Mode::weak);
    std::cout << "weak chromatic number: " << chi_of(weak) << "\n";
    std::cout << "Turan lower bound: " << dist_lower_turan(family).value << "\n";

    const auto p = DensityVector({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    const auto bound = dist_upper(family, p, 2);
    std::cout << "dist_upper at (1/2,1/4,1/4): " << bound.value << " from\n" << format_type(*bound.type);

    const auto best = dist_max_upper(family, 2);
    std::cout << "max over densities: " << best.bound.value << " at (";
    for (std::size_t i = 0; i < best.argmax.entries().size(); ++i) std::cout << (i ? "," : "") << best.argmax[i];
    std::cout << ")\n\n";

    // a random 3-graph at density p, edited with the certificate, against the exact answer
    const std::size_t n = 8;
    const auto g = sample_rgraph(n, p, 7);
    const auto edited = edit_by_type(g, *bound.type, bound.weights, 11);
    const auto exact = exact_dist(g, family);
    std::cout << "n=" << n << ": editor changed " << edited.changes << " pairs (member: " << std::boolalpha
              << is_member(edited.graph, family) << "), exact distance " << exact.edits << ", expected "
              << expected_changes(m_matrix(*bound.type, color_density(g)), bound.weights, n).get_d() << "\n";
}
