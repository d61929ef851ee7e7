#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphlogic/errors.hpp"

namespace graphlogic {

// Unordered vertex pair, normalized so first < second.
using Edge = std::pair<int, int>;
// Strictly increasing vertex ids.
using VertexSet = std::vector<int>;
// Normalized edges in lexicographic order, no repeats.
using EdgeSet = std::vector<Edge>;

Edge make_edge(int u, int v);
VertexSet canonical_vertex_set(std::vector<int> vs);
EdgeSet canonical_edge_set(std::vector<Edge> es);

// Simple undirected graph over dense vertex ids 0..n-1.
// Immutable once built; all mutation goes through copy-producing free functions.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Collapses duplicate edges; rejects self-loops and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const EdgeSet& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }
    bool has_edge(int u, int v) const;
    // Index into edges() for the pair {u,v}, or -1.
    int edge_index(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    EdgeSet edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> matrix_;  // n*n adjacency, only kept for small n

    void rebuild();
    static constexpr int kMatrixLimit = 1500;
};

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const VertexSet& vs);
Graph delete_edges(const Graph& g, const EdgeSet& es);
// Induced subgraph on the vertices outside vs (relabels by sorted rank).
Graph delete_vertices(const Graph& g, const VertexSet& vs);
bool is_connected(const Graph& g);

VertexSet all_vertices(const Graph& g);
// Sorted vertices of 0..n-1 not in vs.
VertexSet complement_vertex_set(int n, const VertexSet& vs);

}  // namespace graphlogic
