#include "graphlogic/generators.hpp"

#include <algorithm>

namespace graphlogic {

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph::from_edges(n, es);
}

Graph star_graph(int n) {
    if (n < 1) throw InputError("star needs at least 1 vertex");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.emplace_back(0, i);
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph gnp_graph(int n, double p, uint32_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw InputError("bad gnp parameters");
    Rng rng(seed);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

PartialTwoTree partial_two_tree(int n, uint32_t seed, double keep_probability) {
    if (n < 1) throw InputError("partial 2-tree needs at least 1 vertex");
    Rng rng(seed);
    PartialTwoTree out;
    out.decomposition.n = n;
    if (n <= 2) {
        std::vector<Edge> es;
        if (n == 2) es.emplace_back(0, 1);
        out.graph = Graph::from_edges(n, es);
        VertexSet bag;
        for (int i = 0; i < n; ++i) bag.push_back(i);
        out.decomposition.bags.push_back(bag);
        return out;
    }
    // grow a 2-tree: each new vertex hangs off an existing edge
    std::vector<Edge> tree_edges{{0, 1}, {0, 2}, {1, 2}};
    std::vector<int> edge_bag{0, 0, 0};  // bag index where each edge lives
    out.decomposition.bags.push_back({0, 1, 2});
    for (int v = 3; v < n; ++v) {
        uint32_t pick = rng.below(static_cast<uint32_t>(tree_edges.size()));
        auto [a, b] = tree_edges[pick];
        VertexSet bag = canonical_vertex_set({a, b, v});
        out.decomposition.bags.push_back(bag);
        int bag_id = static_cast<int>(out.decomposition.bags.size()) - 1;
        out.decomposition.tree_edges.emplace_back(bag_id, edge_bag[pick]);
        tree_edges.push_back(make_edge(v, a));
        edge_bag.push_back(bag_id);
        tree_edges.push_back(make_edge(v, b));
        edge_bag.push_back(bag_id);
    }
    // drop edges to get a *partial* 2-tree; the decomposition stays valid
    std::vector<Edge> kept;
    for (const auto& e : tree_edges)
        if (rng.unit() < keep_probability) kept.push_back(e);
    out.graph = Graph::from_edges(n, kept);
    return out;
}

}  // namespace graphlogic
