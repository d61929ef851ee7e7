#pragma once

#include <string>
#include <vector>

#include "graphlogic/decomposition.hpp"
#include "graphlogic/graph.hpp"

namespace graphlogic::tw {

enum class ColoringVariant { Proper, Star, Cd, Edge, Rainbow, Total, Equitable };
ColoringVariant coloring_variant_from_name(const std::string& name);
std::string coloring_variant_name(ColoringVariant v);
bool coloring_variant_uses_edges(ColoringVariant v);     // edge / rainbow / total
bool coloring_variant_uses_vertices(ColoringVariant v);  // all but edge / rainbow

struct ColoringResult {
    ColoringVariant variant{};
    int k = 0;
    bool feasible = false;
    std::vector<int> vertex_colors;  // indexed by vertex id
    std::vector<int> edge_colors;    // indexed by canonical edge order
    bool certified = false;
};

// Proper vertex coloring by DP over bag colorings (k^bag states).
ColoringResult solve_coloring_dp(const Graph& g, const NiceDecomposition& nd, int k);
// Chromatic-number mode: smallest k with a proper coloring.
ColoringResult minimize_k_coloring_dp(const Graph& g, const NiceDecomposition& nd);

struct ColoringOptions {
    int vertex_cap = 10;  // exhaustive vertex variants refused beyond this n
    int edge_cap = 10;    // exhaustive edge variants refused beyond this m
    Deadline deadline;
};

// Exhaustive search (canonical color strings, lexicographically least
// feasible assignment) for star, cd, edge, rainbow, total, equitable.
ColoringResult solve_coloring_exact(const Graph& g, ColoringVariant variant, int k,
                                    const ColoringOptions& opts = {});
// Smallest feasible k, incrementing from 1.
ColoringResult minimize_k_coloring_exact(const Graph& g, ColoringVariant variant,
                                         const ColoringOptions& opts = {});

}  // namespace graphlogic::tw
