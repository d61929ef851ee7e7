#include "graphlogic/coloring.hpp"

#include <algorithm>
#include <map>

#include "graphlogic/catalog.hpp"
#include "graphlogic/evaluator.hpp"

namespace graphlogic::tw {

ColoringVariant coloring_variant_from_name(const std::string& name) {
    if (name == "proper" || name == "coloring") return ColoringVariant::Proper;
    if (name == "star") return ColoringVariant::Star;
    if (name == "cd") return ColoringVariant::Cd;
    if (name == "edge") return ColoringVariant::Edge;
    if (name == "rainbow") return ColoringVariant::Rainbow;
    if (name == "total") return ColoringVariant::Total;
    if (name == "equitable") return ColoringVariant::Equitable;
    throw InputError("unknown coloring variant '" + name + "'");
}

std::string coloring_variant_name(ColoringVariant v) {
    switch (v) {
        case ColoringVariant::Proper: return "proper";
        case ColoringVariant::Star: return "star";
        case ColoringVariant::Cd: return "cd";
        case ColoringVariant::Edge: return "edge";
        case ColoringVariant::Rainbow: return "rainbow";
        case ColoringVariant::Total: return "total";
        case ColoringVariant::Equitable: return "equitable";
    }
    return "?";
}

bool coloring_variant_uses_edges(ColoringVariant v) {
    return v == ColoringVariant::Edge || v == ColoringVariant::Rainbow || v == ColoringVariant::Total;
}

bool coloring_variant_uses_vertices(ColoringVariant v) {
    return v != ColoringVariant::Edge && v != ColoringVariant::Rainbow;
}

namespace {

void certify_with_formula(const Graph& g, ColoringResult& r) {
    if (!r.feasible) return;
    if (g.vertex_count() == 0) {  // every clause is vacuous
        r.certified = true;
        return;
    }
    logic::Structure m;
    m.graph = &g;
    if (coloring_variant_uses_vertices(r.variant)) {
        for (int c = 0; c < r.k; ++c) {
            VertexSet cls;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (r.vertex_colors[v] == c) cls.push_back(v);
            m.vertex_sets["C" + std::to_string(c + 1)] = std::move(cls);
        }
    }
    if (coloring_variant_uses_edges(r.variant)) {
        for (int c = 0; c < r.k; ++c) {
            EdgeSet cls;
            for (int e = 0; e < g.edge_count(); ++e)
                if (r.edge_colors[e] == c) cls.push_back(g.edges()[e]);
            m.edge_sets["T" + std::to_string(c + 1)] = std::move(cls);
        }
    }
    logic::Formula f = logic::coloring_formula(coloring_variant_name(r.variant), r.k);
    if (!logic::evaluate(f, m)) throw InternalError("coloring rejected by the defining predicate");
    r.certified = true;
}

// ---- proper coloring DP over a nice decomposition ----

struct DpEntry {
    std::string from1, from2;
    int8_t decision = -1;  // introduce: the color given to the vertex
};
using DpTable = std::map<std::string, DpEntry>;

}  // namespace

ColoringResult solve_coloring_dp(const Graph& g, const NiceDecomposition& nd, int k) {
    if (k < 1) throw InputError("color count must be positive");
    validate_nice(g, nd);
    ColoringResult r;
    r.variant = ColoringVariant::Proper;
    r.k = k;
    // state budget: k^bag per node
    double states = 1;
    for (int i = 0; i < nd.width() + 1; ++i) states *= k;
    if (states > 4e6)
        throw CapExceeded("coloring DP needs k^bag = " + std::to_string(static_cast<long>(states)) +
                          " states; raise the decomposition quality or lower k");
    std::vector<DpTable> tables(nd.nodes.size());
    for (size_t i = 0; i < nd.nodes.size(); ++i) {
        const NiceNode& node = nd.nodes[i];
        switch (node.type) {
            case NiceNode::Type::Leaf:
                tables[i].emplace("", DpEntry{});
                break;
            case NiceNode::Type::Introduce: {
                const NiceNode& child = nd.nodes[node.left];
                const auto& bag = node.bag;
                const int p = static_cast<int>(
                    std::lower_bound(bag.begin(), bag.end(), node.vertex) - bag.begin());
                std::vector<int> nbr_pos;
                for (size_t j = 0; j < child.bag.size(); ++j)
                    if (g.has_edge(node.vertex, child.bag[j])) nbr_pos.push_back(static_cast<int>(j));
                for (const auto& [ckey, centry] : tables[node.left]) {
                    for (int c = 0; c < k; ++c) {
                        bool clash = false;
                        for (int j : nbr_pos)
                            if (ckey[j] == c) clash = true;
                        if (clash) continue;
                        std::string key = ckey;
                        key.insert(key.begin() + p, static_cast<char>(c));
                        tables[i].emplace(std::move(key),
                                          DpEntry{ckey, {}, static_cast<int8_t>(c)});
                    }
                }
                break;
            }
            case NiceNode::Type::Forget: {
                const NiceNode& child = nd.nodes[node.left];
                const auto& cbag = child.bag;
                const int p = static_cast<int>(
                    std::lower_bound(cbag.begin(), cbag.end(), node.vertex) - cbag.begin());
                for (const auto& [ckey, centry] : tables[node.left]) {
                    std::string key = ckey;
                    key.erase(key.begin() + p);
                    tables[i].emplace(std::move(key), DpEntry{ckey, {}, -1});
                }
                break;
            }
            case NiceNode::Type::Join: {
                const DpTable& right = tables[node.right];
                for (const auto& [akey, aentry] : tables[node.left]) {
                    if (right.count(akey))
                        tables[i].emplace(akey, DpEntry{akey, akey, -1});
                }
                break;
            }
        }
    }
    auto root_it = tables[nd.root].find("");
    if (root_it == tables[nd.root].end()) {
        r.feasible = false;
        return r;
    }
    r.feasible = true;
    r.vertex_colors.assign(g.vertex_count(), -1);
    std::vector<std::pair<size_t, std::string>> stack{{static_cast<size_t>(nd.root), ""}};
    while (!stack.empty()) {
        auto [node_id, key] = stack.back();
        stack.pop_back();
        const NiceNode& node = nd.nodes[node_id];
        const DpEntry& e = tables[node_id].at(key);
        switch (node.type) {
            case NiceNode::Type::Leaf: break;
            case NiceNode::Type::Introduce:
                r.vertex_colors[node.vertex] = e.decision;
                stack.emplace_back(node.left, e.from1);
                break;
            case NiceNode::Type::Forget:
                stack.emplace_back(node.left, e.from1);
                break;
            case NiceNode::Type::Join:
                stack.emplace_back(node.left, e.from1);
                stack.emplace_back(node.right, e.from2);
                break;
        }
    }
    certify_with_formula(g, r);
    return r;
}

ColoringResult minimize_k_coloring_dp(const Graph& g, const NiceDecomposition& nd) {
    if (g.vertex_count() == 0) {
        ColoringResult r;
        r.variant = ColoringVariant::Proper;
        r.k = 0;
        r.feasible = true;
        r.certified = true;
        return r;
    }
    for (int k = 1; k <= g.vertex_count(); ++k) {
        ColoringResult r = solve_coloring_dp(g, nd, k);
        if (r.feasible) return r;
    }
    throw InternalError("a graph is always n-colorable");
}

namespace {

// ---- exhaustive solvers over canonical color strings ----
//
// Enumeration is restricted-growth (a fresh color may only follow all smaller
// ones), which visits exactly one representative per color permutation and
// finds the lexicographically least feasible assignment first.
class ExactColoring {
public:
    ExactColoring(const Graph& g, ColoringVariant variant, int k, const ColoringOptions& opts)
        : g_(g), variant_(variant), k_(k), opts_(opts) {
        const int n = g.vertex_count();
        const int m = g.edge_count();
        if (coloring_variant_uses_vertices(variant) && n > opts.vertex_cap)
            throw CapExceeded("exhaustive " + coloring_variant_name(variant) +
                              " coloring refused: n=" + std::to_string(n) + " exceeds cap " +
                              std::to_string(opts.vertex_cap));
        if (coloring_variant_uses_edges(variant) && m > opts.edge_cap)
            throw CapExceeded("exhaustive " + coloring_variant_name(variant) +
                              " coloring refused: m=" + std::to_string(m) + " exceeds cap " +
                              std::to_string(opts.edge_cap));
        vertex_count_ = coloring_variant_uses_vertices(variant) ? n : 0;
        edge_count_ = coloring_variant_uses_edges(variant) ? m : 0;
        colors_.assign(vertex_count_ + edge_count_, -1);
        if (variant == ColoringVariant::Star) prepare_star();
        if (variant == ColoringVariant::Edge || variant == ColoringVariant::Total)
            prepare_edge_adjacency();
        if (variant == ColoringVariant::Rainbow) prepare_paths();
    }

    bool solve() {
        if (variant_ == ColoringVariant::Rainbow) {
            for (long c : pair_alive_)
                if (c == 0) return false;  // some pair has no path at all
        }
        return extend(0, 0);
    }

    std::vector<int> vertex_colors() const {
        return {colors_.begin(), colors_.begin() + vertex_count_};
    }
    std::vector<int> edge_colors() const { return {colors_.begin() + vertex_count_, colors_.end()}; }

private:
    const Graph& g_;
    ColoringVariant variant_;
    int k_;
    const ColoringOptions& opts_;
    int vertex_count_ = 0;  // elements 0..vertex_count_-1 are vertices
    int edge_count_ = 0;    // then edges in canonical order
    std::vector<int> colors_;

    // star: paths on four vertices indexed by their largest vertex
    std::vector<std::vector<std::array<int, 4>>> star_paths_;
    // edge/total: adjacent earlier edges per edge index
    std::vector<std::vector<int>> edge_adj_;
    // rainbow: simple paths as edge-index lists, grouped per vertex pair
    std::vector<std::vector<int>> paths_;
    std::vector<int> path_pair_;
    std::vector<char> path_dead_;
    std::vector<long> pair_alive_;
    std::vector<std::vector<int>> paths_of_edge_;

    void prepare_star() {
        const int n = g_.vertex_count();
        star_paths_.assign(n, {});
        for (int y = 0; y < n; ++y)
            for (int x : g_.neighbors(y))
                for (int z : g_.neighbors(y)) {
                    if (x == z) continue;
                    for (int w : g_.neighbors(z)) {
                        if (w == y || w == x) continue;
                        // path x-y-z-w; store once per direction class
                        if (x > w) continue;
                        int mx = std::max(std::max(x, y), std::max(z, w));
                        star_paths_[mx].push_back({x, y, z, w});
                    }
                }
    }

    void prepare_edge_adjacency() {
        const int m = g_.edge_count();
        edge_adj_.assign(m, {});
        for (int e = 0; e < m; ++e)
            for (int f = 0; f < e; ++f) {
                auto [a, b] = g_.edges()[e];
                auto [c, d] = g_.edges()[f];
                if (a == c || a == d || b == c || b == d) edge_adj_[e].push_back(f);
            }
    }

    void prepare_paths() {
        const int n = g_.vertex_count();
        const int m = g_.edge_count();
        paths_of_edge_.assign(m, {});
        int pair_id = 0;
        for (int s = 0; s < n; ++s)
            for (int t = s + 1; t < n; ++t, ++pair_id) {
                std::vector<int> path_edges;
                std::vector<char> visited(n, 0);
                visited[s] = 1;
                dfs_paths(s, t, pair_id, path_edges, visited);
            }
        pair_alive_.assign(pair_id, 0);
        for (int p = 0; p < static_cast<int>(paths_.size()); ++p) ++pair_alive_[path_pair_[p]];
        path_dead_.assign(paths_.size(), 0);
    }

    void dfs_paths(int at, int target, int pair_id, std::vector<int>& path_edges,
                   std::vector<char>& visited) {
        if (at == target) {
            int id = static_cast<int>(paths_.size());
            paths_.push_back(path_edges);
            path_pair_.push_back(pair_id);
            for (int e : path_edges) paths_of_edge_[e].push_back(id);
            return;
        }
        for (int w : g_.neighbors(at)) {
            if (visited[w]) continue;
            visited[w] = 1;
            path_edges.push_back(g_.edge_index(at, w));
            dfs_paths(w, target, pair_id, path_edges, visited);
            path_edges.pop_back();
            visited[w] = 0;
        }
    }

    bool vertex_ok(int v, int c) const {
        // proper vertex coloring against earlier vertices
        for (int w : g_.neighbors(v))
            if (w < v && colors_[w] == c) return false;
        if (variant_ == ColoringVariant::Star) {
            for (const auto& p : star_paths_[v]) {
                int cx = p[0] == v ? c : colors_[p[0]];
                int cy = p[1] == v ? c : colors_[p[1]];
                int cz = p[2] == v ? c : colors_[p[2]];
                int cw = p[3] == v ? c : colors_[p[3]];
                if (cx == cz && cy == cw) return false;  // bicolored P4
            }
        }
        if (variant_ == ColoringVariant::Equitable) {
            int size = 1;
            for (int w = 0; w < v; ++w)
                if (colors_[w] == c) ++size;
            if (size > (g_.vertex_count() + k_ - 1) / k_) return false;
        }
        return true;
    }

    bool cd_final_ok() const {
        const int n = g_.vertex_count();
        for (int c = 0; c < k_; ++c) {
            std::vector<int> cls;
            for (int v = 0; v < n; ++v)
                if (colors_[v] == c) cls.push_back(v);
            if (cls.size() <= 1) continue;  // empty ok; singleton dominates itself
            bool dominated = false;
            for (int u = 0; u < n && !dominated; ++u) {
                if (colors_[u] == c) continue;
                bool all = true;
                for (int v : cls)
                    if (!g_.has_edge(u, v)) all = false;
                dominated = all;
            }
            if (!dominated) return false;
        }
        return true;
    }

    bool equitable_final_ok() const {
        std::vector<int> sizes(k_, 0);
        for (int v = 0; v < vertex_count_; ++v) ++sizes[colors_[v]];
        auto [mn, mx] = std::minmax_element(sizes.begin(), sizes.end());
        return *mx - *mn <= 1;
    }

    bool final_ok() const {
        switch (variant_) {
            case ColoringVariant::Cd: return cd_final_ok();
            case ColoringVariant::Equitable: return equitable_final_ok();
            default: return true;
        }
    }

    bool edge_ok(int eidx, int c) const {
        const int e = eidx - vertex_count_;
        if (variant_ == ColoringVariant::Edge || variant_ == ColoringVariant::Total) {
            for (int f : edge_adj_[e])
                if (colors_[vertex_count_ + f] == c) return false;
        }
        if (variant_ == ColoringVariant::Total) {
            auto [u, v] = g_.edges()[e];
            if (colors_[u] == c || colors_[v] == c) return false;
        }
        return true;
    }

    bool extend(int i, int used) {
        opts_.deadline.check("coloring search");
        if (i == static_cast<int>(colors_.size())) return final_ok();
        const int limit = std::min(k_ - 1, used);  // restricted growth
        const bool is_vertex = i < vertex_count_;
        for (int c = 0; c <= limit; ++c) {
            if (is_vertex ? !vertex_ok(i, c) : !edge_ok(i, c)) continue;
            colors_[i] = c;
            if (variant_ == ColoringVariant::Rainbow) {
                std::vector<int> killed;
                if (rainbow_apply(i, c, killed)) {
                    if (extend(i + 1, std::max(used, c + 1))) return true;
                }
                rainbow_undo(killed);
            } else {
                if (extend(i + 1, std::max(used, c + 1))) return true;
            }
            colors_[i] = -1;
        }
        return false;
    }

    bool rainbow_apply(int eidx, int c, std::vector<int>& killed) {
        const int e = eidx - vertex_count_;
        bool ok = true;
        for (int pid : paths_of_edge_[e]) {
            if (path_dead_[pid]) continue;
            bool clash = false;
            for (int f : paths_[pid]) {
                int fc = colors_[vertex_count_ + f];
                if (f != e && fc == c) clash = true;
            }
            if (!clash) continue;
            path_dead_[pid] = 1;
            killed.push_back(pid);
            if (--pair_alive_[path_pair_[pid]] == 0) ok = false;
        }
        return ok;
    }

    void rainbow_undo(const std::vector<int>& killed) {
        for (int pid : killed) {
            path_dead_[pid] = 0;
            ++pair_alive_[path_pair_[pid]];
        }
    }
};

}  // namespace

ColoringResult solve_coloring_exact(const Graph& g, ColoringVariant variant, int k,
                                    const ColoringOptions& opts) {
    if (k < 1) throw InputError("color count must be positive");
    if (variant == ColoringVariant::Proper)
        throw InputError("use the decomposition solver for plain proper coloring");
    ColoringResult r;
    r.variant = variant;
    r.k = k;
    ExactColoring search(g, variant, k, opts);
    if (!search.solve()) {
        r.feasible = false;
        return r;
    }
    r.feasible = true;
    r.vertex_colors = search.vertex_colors();
    r.edge_colors = search.edge_colors();
    certify_with_formula(g, r);
    return r;
}

ColoringResult minimize_k_coloring_exact(const Graph& g, ColoringVariant variant,
                                         const ColoringOptions& opts) {
    int max_k = 0;
    if (coloring_variant_uses_vertices(variant)) max_k += g.vertex_count();
    if (coloring_variant_uses_edges(variant)) max_k += g.edge_count();
    if (max_k == 0) {
        // nothing to color; only rainbow can still fail (unlinkable vertex pairs)
        ColoringResult r = solve_coloring_exact(g, variant, 1, opts);
        r.k = 0;
        return r;
    }
    ColoringResult last;
    for (int k = 1; k <= max_k; ++k) {
        last = solve_coloring_exact(g, variant, k, opts);
        if (last.feasible) return last;
    }
    return last;  // infeasible at every k (e.g. rainbow on a disconnected graph)
}

}  // namespace graphlogic::tw
