#pragma once

// Brute-force oracles used to pin expected values. They share nothing with the
// library's solver paths: everything here works on bitmasks and exhaustive
// enumeration only.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "graphlogic/graph.hpp"

namespace oracle {

using graphlogic::Graph;

inline bool adj(const Graph& g, int u, int v) { return g.has_edge(u, v); }

// ---- induced-pattern scans ----

inline bool mask_is_p4(const Graph& g, const std::vector<int>& s) {
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (adj(g, s[i], s[j])) ++edges, ++deg[i], ++deg[j];
    if (edges != 3) return false;
    return std::count(deg, deg + 4, 1) == 2 && std::count(deg, deg + 4, 2) == 2;
}

inline bool mask_is_2k2(const Graph& g, const std::vector<int>& s) {
    int edges = 0;
    int deg[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (adj(g, s[i], s[j])) ++edges, ++deg[i], ++deg[j];
    return edges == 2 && std::count(deg, deg + 4, 1) == 4;
}

inline bool mask_is_c4(const Graph& g, const std::vector<int>& s) {
    int edges = 0;
    int deg[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (adj(g, s[i], s[j])) ++edges, ++deg[i], ++deg[j];
    return edges == 4 && std::count(deg, deg + 4, 2) == 4;
}

template <typename Fn>
void for_each_ksubset(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool has_induced_p4(const Graph& g) {
    bool found = false;
    for_each_ksubset(g.vertex_count(), 4, [&](const std::vector<int>& s) {
        if (mask_is_p4(g, s)) found = true;
    });
    return found;
}

inline bool has_induced_2k2(const Graph& g) {
    bool found = false;
    for_each_ksubset(g.vertex_count(), 4, [&](const std::vector<int>& s) {
        if (mask_is_2k2(g, s)) found = true;
    });
    return found;
}

inline bool has_induced_c4(const Graph& g) {
    bool found = false;
    for_each_ksubset(g.vertex_count(), 4, [&](const std::vector<int>& s) {
        if (mask_is_c4(g, s)) found = true;
    });
    return found;
}

inline bool has_induced_c5(const Graph& g) {
    bool found = false;
    for_each_ksubset(g.vertex_count(), 5, [&](const std::vector<int>& s) {
        int edges = 0;
        bool all2 = true;
        for (int i = 0; i < 5; ++i) {
            int d = 0;
            for (int j = 0; j < 5; ++j)
                if (i != j && adj(g, s[i], s[j])) ++d;
            if (d != 2) all2 = false;
            edges += d;
        }
        if (all2 && edges == 10) found = true;
    });
    return found;
}

inline bool brute_is_cograph(const Graph& g) { return !has_induced_p4(g); }
inline bool brute_is_split(const Graph& g) {
    return !has_induced_2k2(g) && !has_induced_c4(g) && !has_induced_c5(g);
}
inline bool brute_is_threshold(const Graph& g) {
    return !has_induced_2k2(g) && !has_induced_c4(g) && !has_induced_p4(g);
}

// ---- exhaustive transitive-orientation search ----
//
// Every transitive orientation is acyclic, hence induced by some vertex order;
// trying all n! orders exhausts all candidates. Transitivity holds iff
// out(v) ⊆ out(u) for every oriented edge u→v.
inline bool brute_is_comparability(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 31 && g.edge_count() == 0) return true;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[perm[i]] = i;
        std::vector<uint64_t> out(n, 0);
        for (const auto& [u, v] : g.edges()) {
            if (pos[u] < pos[v])
                out[u] |= 1ull << v;
            else
                out[v] |= 1ull << u;
        }
        bool ok = true;
        for (const auto& [u, v] : g.edges()) {
            int a = pos[u] < pos[v] ? u : v;
            int b = a == u ? v : u;
            if ((out[b] & ~out[a]) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool brute_is_permutation(const Graph& g) {
    return brute_is_comparability(g) && brute_is_comparability(graphlogic::complement(g));
}

// ---- interval-model searches ----

// Gilmore-Hoffman style: list all maximal cliques, then try every ordering,
// requiring the cliques containing each vertex to be consecutive. Interval
// graphs have at most n maximal cliques.
inline bool brute_is_interval_by_cliques(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<uint64_t> cliques;
    for (uint64_t s = 1; s < (1ull << n); ++s) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u) {
            if (!(s >> u & 1)) continue;
            for (int v = u + 1; v < n && clique; ++v)
                if ((s >> v & 1) && !adj(g, u, v)) clique = false;
        }
        if (!clique) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w) {
            if (s >> w & 1) continue;
            bool extends = true;
            for (int u = 0; u < n && extends; ++u)
                if ((s >> u & 1) && !adj(g, u, w)) extends = false;
            if (extends) maximal = false;
        }
        if (maximal) cliques.push_back(s);
    }
    if (static_cast<int>(cliques.size()) > n) return false;
    std::sort(cliques.begin(), cliques.end());
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int first = -1, last = -1;
            for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
                if (cliques[i] >> v & 1) {
                    if (first == -1) first = i;
                    last = i;
                }
            for (int i = first; i <= last && ok; ++i)
                if (!(cliques[i] >> v & 1)) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(cliques.begin(), cliques.end()));
    return false;
}

// Endpoint-sequence search: lay out 2n interval endpoints left to right.
// Opening a vertex requires adjacency with everything currently open; closing
// requires having met every neighbor.
inline bool brute_is_interval_by_model(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    // openings must cover adjacency exactly: track misses by checking, when a
    // vertex closes, that it met all its neighbors
    struct Rec {
        const Graph& g;
        int n;
        std::vector<char> state;       // 0 unopened, 1 open, 2 closed
        std::vector<uint64_t> met;     // vertices overlapped so far
        std::vector<int> open_order;

        explicit Rec(const Graph& gg) : g(gg), n(gg.vertex_count()), state(n, 0), met(n, 0) {}

        bool run(int placed) {
            if (placed == 2 * n) return true;
            // close
            for (int v = 0; v < n; ++v) {
                if (state[v] != 1) continue;
                uint64_t need = 0;
                for (int w : g.neighbors(v)) need |= 1ull << w;
                if ((met[v] & need) != need) continue;  // unmet neighbor: cannot close yet
                state[v] = 2;
                auto it = std::find(open_order.begin(), open_order.end(), v);
                open_order.erase(it);
                if (run(placed + 1)) return true;
                open_order.push_back(v);
                state[v] = 1;
            }
            // open
            for (int v = 0; v < n; ++v) {
                if (state[v] != 0) continue;
                bool ok = true;
                for (int w : open_order)
                    if (!adj(g, v, w)) ok = false;  // overlap would create a non-edge
                if (!ok) continue;
                state[v] = 1;
                for (int w : open_order) {
                    met[w] |= 1ull << v;
                    met[v] |= 1ull << w;
                }
                open_order.push_back(v);
                if (run(placed + 1)) return true;
                // open_order may have been permuted by deeper close/undo steps
                open_order.erase(std::find(open_order.begin(), open_order.end(), v));
                for (int w : open_order) met[w] &= ~(1ull << v);
                met[v] = 0;
                state[v] = 0;
            }
            return false;
        }
    } rec(g);
    return rec.run(0);
}

// ---- cycle scans ----

inline bool mask_induces_cycle_brute(const Graph& g, uint64_t mask) {
    const int n = g.vertex_count();
    int size = __builtin_popcountll(mask);
    if (size < 3) return false;
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (!(mask >> v & 1)) continue;
        if (start == -1) start = v;
        int d = 0;
        for (int w = 0; w < n; ++w)
            if (w != v && (mask >> w & 1) && adj(g, v, w)) ++d;
        if (d != 2) return false;
    }
    // connectivity by closure
    uint64_t seen = 1ull << start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < n; ++v) {
            if (!(seen >> v & 1)) continue;
            for (int w = 0; w < n; ++w)
                if ((mask >> w & 1) && !(seen >> w & 1) && adj(g, v, w)) {
                    seen |= 1ull << w;
                    grew = true;
                }
        }
    }
    return seen == mask;
}

inline bool brute_no_induced_cycle_longer(const Graph& g, int bound) {
    const int n = g.vertex_count();
    for (uint64_t s = 0; s < (1ull << n); ++s) {
        if (__builtin_popcountll(s) <= bound) continue;
        if (mask_induces_cycle_brute(g, s)) return false;
    }
    return true;
}

inline bool brute_is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    for (uint64_t s = 0; s < (1ull << n); ++s) {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (((s >> u) & 1) == ((s >> v) & 1)) ok = false;
        if (ok) return true;
    }
    return n == 0;
}

inline bool brute_is_chordal(const Graph& g) { return brute_no_induced_cycle_longer(g, 3); }
inline bool brute_is_chordal_bipartite(const Graph& g) {
    return brute_is_bipartite(g) && brute_no_induced_cycle_longer(g, 4);
}

// ---- subset-minimization oracles ----

inline bool mask_dominates(const Graph& g, uint64_t s) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s >> v & 1) continue;
        bool dom = false;
        for (int w : g.neighbors(v))
            if (s >> w & 1) dom = true;
        if (!dom) return false;
    }
    return true;
}

inline bool mask_total_dominates(const Graph& g, uint64_t s) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool dom = false;
        for (int w : g.neighbors(v))
            if (s >> w & 1) dom = true;
        if (!dom) return false;
    }
    return true;
}

inline bool mask_connected_brute(const Graph& g, uint64_t s) {
    if (s == 0) return true;
    int start = __builtin_ctzll(s);
    uint64_t seen = 1ull << start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!(seen >> v & 1)) continue;
            for (int w : g.neighbors(v))
                if ((s >> w & 1) && !(seen >> w & 1)) {
                    seen |= 1ull << w;
                    grew = true;
                }
        }
    }
    return seen == s;
}

// generic min-|S| over all vertex subsets; -1 when infeasible
template <typename Pred>
int min_subset_size(const Graph& g, Pred&& pred) {
    const int n = g.vertex_count();
    int best = -1;
    for (uint64_t s = 0; s < (1ull << n); ++s) {
        if (!pred(s)) continue;
        int pc = __builtin_popcountll(s);
        if (best == -1 || pc < best) best = pc;
    }
    return best;
}

inline int brute_min_dom(const Graph& g) {
    return min_subset_size(g, [&](uint64_t s) { return mask_dominates(g, s); });
}
inline int brute_min_total_dom(const Graph& g) {
    return min_subset_size(g, [&](uint64_t s) { return mask_total_dominates(g, s); });
}
inline int brute_min_connected_dom(const Graph& g) {
    return min_subset_size(
        g, [&](uint64_t s) { return mask_dominates(g, s) && mask_connected_brute(g, s); });
}
inline int brute_min_total_outer_connected_dom(const Graph& g) {
    const uint64_t all = g.vertex_count() ? (1ull << g.vertex_count()) - 1 : 0;
    return min_subset_size(g, [&](uint64_t s) {
        return mask_total_dominates(g, s) && mask_connected_brute(g, all & ~s);
    });
}
inline int brute_min_cycle_dom(const Graph& g) {
    return min_subset_size(
        g, [&](uint64_t s) { return mask_dominates(g, s) && mask_induces_cycle_brute(g, s); });
}
inline int brute_min_perfect_dom(const Graph& g) {
    return min_subset_size(g, [&](uint64_t s) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (s >> v & 1) continue;
            int d = 0;
            for (int w : g.neighbors(v))
                if (s >> w & 1) ++d;
            if (d != 1) return false;
        }
        return true;
    });
}
inline int brute_min_clique_dom(const Graph& g) {
    return min_subset_size(g, [&](uint64_t s) {
        if (!mask_dominates(g, s)) return false;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (!(s >> u & 1)) continue;
            for (int v = u + 1; v < g.vertex_count(); ++v)
                if ((s >> v & 1) && !adj(g, u, v)) return false;
        }
        return true;
    });
}

// minimum vertices to delete so that `good` holds on the residual
template <typename Good>
int brute_min_node_deletion(const Graph& g, Good&& good) {
    const int n = g.vertex_count();
    for (int size = 0; size <= n; ++size) {
        bool found = false;
        for_each_ksubset(n, size, [&](const std::vector<int>& idx) {
            if (found) return;
            graphlogic::VertexSet vs(idx.begin(), idx.end());
            if (good(graphlogic::delete_vertices(g, vs))) found = true;
        });
        if (found) return size;
    }
    return n;
}

template <typename Good>
int brute_min_edge_deletion(const Graph& g, Good&& good) {
    const int m = g.edge_count();
    for (int size = 0; size <= m; ++size) {
        bool found = false;
        for_each_ksubset(m, size, [&](const std::vector<int>& idx) {
            if (found) return;
            graphlogic::EdgeSet es;
            for (int i : idx) es.push_back(g.edges()[i]);
            if (good(graphlogic::delete_edges(g, es))) found = true;
        });
        if (found) return size;
    }
    return m;
}

// ---- plain-loop coloring oracles (full k^n / k^m scans, no pruning) ----

inline bool proper_ok(const Graph& g, const std::vector<int>& col) {
    for (const auto& [u, v] : g.edges())
        if (col[u] == col[v]) return false;
    return true;
}

template <typename Check>
bool exists_assignment(int elements, int k, Check&& check) {
    std::vector<int> col(elements, 0);
    while (true) {
        if (check(const_cast<const std::vector<int>&>(col))) return true;
        int i = elements - 1;
        while (i >= 0 && col[i] == k - 1) col[i--] = 0;
        if (i < 0) return false;
        ++col[i];
    }
}

inline bool star_ok(const Graph& g, const std::vector<int>& col) {
    if (!proper_ok(g, col)) return false;
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y : g.neighbors(x))
            for (int z : g.neighbors(y)) {
                if (z == x) continue;
                for (int w : g.neighbors(z)) {
                    if (w == y || w == x) continue;
                    if (col[x] == col[z] && col[y] == col[w]) return false;
                }
            }
    return true;
}

inline bool cd_ok(const Graph& g, int k, const std::vector<int>& col) {
    if (g.vertex_count() == 0) return true;
    const int n = g.vertex_count();
    for (const auto& [u, v] : g.edges())
        if (col[u] == col[v]) return false;
    for (int c = 0; c < k; ++c) {
        std::vector<int> cls;
        for (int v = 0; v < n; ++v)
            if (col[v] == c) cls.push_back(v);
        if (cls.size() <= 1) continue;
        bool dom = false;
        for (int u = 0; u < n && !dom; ++u) {
            if (col[u] == c) continue;
            bool all = true;
            for (int v : cls)
                if (!adj(g, u, v)) all = false;
            dom = all;
        }
        if (!dom) return false;
    }
    return true;
}

inline bool edge_coloring_ok(const Graph& g, const std::vector<int>& col) {
    const int m = g.edge_count();
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            auto [a, b] = g.edges()[e];
            auto [c, d] = g.edges()[f];
            if ((a == c || a == d || b == c || b == d) && col[e] == col[f]) return false;
        }
    return true;
}

inline bool rainbow_pair_ok(const Graph& g, const std::vector<int>& col, int s, int t,
                            uint64_t visited, uint64_t used_colors, int at) {
    if (at == t) return true;
    for (int w : g.neighbors(at)) {
        if (visited >> w & 1) continue;
        int c = col[g.edge_index(at, w)];
        if (used_colors >> c & 1) continue;
        if (rainbow_pair_ok(g, col, s, t, visited | (1ull << w), used_colors | (1ull << c), w))
            return true;
    }
    return false;
}

inline bool rainbow_ok(const Graph& g, const std::vector<int>& col) {
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!rainbow_pair_ok(g, col, s, t, 1ull << s, 0, s)) return false;
    return true;
}

inline bool total_ok(const Graph& g, const std::vector<int>& col) {
    // col = vertex colors then edge colors in canonical order
    const int n = g.vertex_count();
    const int m = g.edge_count();
    for (const auto& [u, v] : g.edges())
        if (col[u] == col[v]) return false;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        if (col[n + e] == col[u] || col[n + e] == col[v]) return false;
        for (int f = e + 1; f < m; ++f) {
            auto [c, d] = g.edges()[f];
            if ((u == c || u == d || v == c || v == d) && col[n + e] == col[n + f]) return false;
        }
    }
    return true;
}

inline bool equitable_ok(const Graph& g, int k, const std::vector<int>& col) {
    if (!proper_ok(g, col)) return false;
    std::vector<int> sizes(k, 0);
    for (int c : col) ++sizes[c];
    auto [mn, mx] = std::minmax_element(sizes.begin(), sizes.end());
    return *mx - *mn <= 1;
}

// smallest k for which a checker accepts some assignment; -1 when none up to max_k
template <typename CheckAtK>
int brute_min_k(int elements, int max_k, CheckAtK&& check_at_k) {
    for (int k = 1; k <= std::max(max_k, 1); ++k)
        if (check_at_k(k)) return k;
    return -1;
}

}  // namespace oracle
