#include "graphlogic/graph.hpp"

#include <algorithm>
#include <string>

namespace graphlogic {

Edge make_edge(int u, int v) {
    if (u == v) throw InputError("self-loop {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    if (u > v) std::swap(u, v);
    return {u, v};
}

VertexSet canonical_vertex_set(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

EdgeSet canonical_edge_set(std::vector<Edge> es) {
    for (auto& e : es) e = make_edge(e.first, e.second);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    rebuild();
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g;
    if (n < 0) throw InputError("negative vertex count");
    g.n_ = n;
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} out of range for n=" + std::to_string(n));
        es.push_back(make_edge(u, v));
    }
    g.edges_ = canonical_edge_set(std::move(es));
    g.rebuild();
    return g;
}

void Graph::rebuild() {
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    matrix_.clear();
    if (n_ <= kMatrixLimit) {
        matrix_.assign(static_cast<size_t>(n_) * n_, 0);
        for (const auto& [u, v] : edges_) {
            matrix_[static_cast<size_t>(u) * n_ + v] = 1;
            matrix_[static_cast<size_t>(v) * n_ + u] = 1;
        }
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    if (!matrix_.empty()) return matrix_[static_cast<size_t>(u) * n_ + v] != 0;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (!has_edge(u, v)) return -1;
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
    std::vector<int> rank(g.vertex_count(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        if (!g.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
        if (i > 0 && vs[i - 1] >= v) throw InputError("vertex set not strictly increasing");
        rank[v] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges())
        if (rank[u] >= 0 && rank[v] >= 0) es.emplace_back(rank[u], rank[v]);
    return Graph::from_edges(static_cast<int>(vs.size()), es);
}

Graph delete_edges(const Graph& g, const EdgeSet& es) {
    for (const auto& [u, v] : es)
        if (!g.has_edge(u, v))
            throw InputError("pair {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    EdgeSet doomed = canonical_edge_set(es);
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const auto& e : g.edges())
        if (!std::binary_search(doomed.begin(), doomed.end(), e)) kept.push_back(e);
    return Graph::from_edges(g.vertex_count(), kept);
}

Graph delete_vertices(const Graph& g, const VertexSet& vs) {
    return induced_subgraph(g, complement_vertex_set(g.vertex_count(), vs));
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

VertexSet all_vertices(const Graph& g) {
    VertexSet vs(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) vs[i] = i;
    return vs;
}

VertexSet complement_vertex_set(int n, const VertexSet& vs) {
    VertexSet out;
    out.reserve(n);
    size_t i = 0;
    for (int v = 0; v < n; ++v) {
        if (i < vs.size() && vs[i] == v) {
            ++i;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace graphlogic
