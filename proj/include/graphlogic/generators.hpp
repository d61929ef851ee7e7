#pragma once

#include <cstdint>
#include <random>

#include "graphlogic/decomposition.hpp"
#include "graphlogic/graph.hpp"

namespace graphlogic {

// Deterministic RNG wrapper. mt19937's output sequence is pinned by the
// standard, and we avoid std::uniform_*_distribution so results are
// bit-identical across library implementations.
class Rng {
public:
    explicit Rng(uint32_t seed) : engine_(seed) {}

    uint32_t below(uint32_t n) { return n == 0 ? 0 : engine_() % n; }

    double unit() { return static_cast<double>(engine_()) / 4294967296.0; }

private:
    std::mt19937 engine_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
// Star K1,(n-1): vertex 0 is the center.
Graph star_graph(int n);
Graph complete_graph(int n);
Graph gnp_graph(int n, double p, uint32_t seed);

// Random partial 2-tree together with the width-<=2 decomposition the
// construction yields (valid for the graph even after edges are dropped).
struct PartialTwoTree {
    Graph graph;
    tw::TreeDecomposition decomposition;
};
PartialTwoTree partial_two_tree(int n, uint32_t seed, double keep_probability = 0.85);

}  // namespace graphlogic
