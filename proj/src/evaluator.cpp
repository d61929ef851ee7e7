#include "graphlogic/evaluator.hpp"

#include <algorithm>
#include <unordered_map>

namespace graphlogic::logic {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool mask_connected(const Graph& g, const std::vector<char>& in) {
    const int n = g.vertex_count();
    DisjointSet ds(n);
    for (const auto& [u, v] : g.edges())
        if (in[u] && in[v]) ds.unite(u, v);
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (!in[v]) continue;
        if (root == -1)
            root = ds.find(v);
        else if (ds.find(v) != root)
            return false;
    }
    return true;  // empty or singleton included
}

bool mask_induces_cycle(const Graph& g, const std::vector<char>& in) {
    int size = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!in[v]) continue;
        ++size;
        int deg = 0;
        for (int w : g.neighbors(v))
            if (in[w]) ++deg;
        if (deg != 2) return false;
    }
    return size >= 3 && mask_connected(g, in);
}

class Evaluator {
public:
    Evaluator(const Graph& g, const EvalOptions& opts) : g_(g), opts_(opts), n_(g.vertex_count()) {}

    const Graph& g_;
    const EvalOptions& opts_;
    int n_;
    std::unordered_map<std::string, int> vertex_env;
    std::unordered_map<std::string, int> edge_env;  // index into g.edges()
    std::unordered_map<std::string, std::vector<char>> vset_env;
    std::unordered_map<std::string, std::vector<char>> eset_env;
    std::unordered_map<std::string, std::vector<char>> orient_env;  // n*n

    int vertex_of(const std::string& name) const {
        auto it = vertex_env.find(name);
        if (it == vertex_env.end()) throw InputError("unbound vertex variable '" + name + "'");
        return it->second;
    }

    const std::vector<char>& vset_of(const std::string& name) const {
        auto it = vset_env.find(name);
        if (it == vset_env.end()) throw InputError("unbound vertex-set variable '" + name + "'");
        return it->second;
    }

    const std::vector<char>& eset_of(const std::string& name) const {
        auto it = eset_env.find(name);
        if (it == eset_env.end()) throw InputError("unbound edge-set variable '" + name + "'");
        return it->second;
    }

    bool eval(const Node& nd) {
        switch (nd.op) {
            case Op::True: return true;
            case Op::False: return false;
            case Op::Not: return !eval(*nd.children[0]);
            case Op::And: return eval(*nd.children[0]) && eval(*nd.children[1]);
            case Op::Or: return eval(*nd.children[0]) || eval(*nd.children[1]);
            case Op::Implies: return !eval(*nd.children[0]) || eval(*nd.children[1]);
            case Op::Iff: return eval(*nd.children[0]) == eval(*nd.children[1]);
            case Op::Forall: return eval_quantifier(nd, true);
            case Op::Exists: return eval_quantifier(nd, false);
            case Op::Adjacent: return g_.has_edge(vertex_of(nd.terms[0]), vertex_of(nd.terms[1]));
            case Op::Equal:
            case Op::NotEqual: {
                bool eq;
                if (auto it = vertex_env.find(nd.terms[0]); it != vertex_env.end()) {
                    eq = it->second == vertex_of(nd.terms[1]);
                } else {
                    auto a = edge_env.find(nd.terms[0]);
                    auto b = edge_env.find(nd.terms[1]);
                    if (a == edge_env.end() || b == edge_env.end())
                        throw InputError("unbound variable in equality");
                    eq = a->second == b->second;
                }
                return nd.op == Op::Equal ? eq : !eq;
            }
            case Op::Member: {
                if (auto it = vertex_env.find(nd.terms[0]); it != vertex_env.end())
                    return vset_of(nd.set_names[0])[it->second] != 0;
                auto e = edge_env.find(nd.terms[0]);
                if (e == edge_env.end()) throw InputError("unbound variable '" + nd.terms[0] + "'");
                return eset_of(nd.set_names[0])[e->second] != 0;
            }
            case Op::PairMember: {
                int a = vertex_of(nd.terms[0]);
                int b = vertex_of(nd.terms[1]);
                if (auto it = orient_env.find(nd.set_names[0]); it != orient_env.end())
                    return it->second[static_cast<size_t>(a) * n_ + b] != 0;
                if (a == b) return false;
                int idx = g_.edge_index(a, b);
                if (idx < 0) return false;  // edge-set variables range over E(G)
                return eset_of(nd.set_names[0])[idx] != 0;
            }
            case Op::Card: {
                long count = 0;
                if (auto it = vset_env.find(nd.set_names[0]); it != vset_env.end())
                    count = std::count(it->second.begin(), it->second.end(), 1);
                else
                    count = std::count(eset_of(nd.set_names[0]).begin(),
                                       eset_of(nd.set_names[0]).end(), 1);
                switch (nd.cmp) {
                    case Cmp::Le: return count <= nd.int_arg;
                    case Cmp::Lt: return count < nd.int_arg;
                    case Cmp::Eq: return count == nd.int_arg;
                    case Cmp::Ge: return count >= nd.int_arg;
                    case Cmp::Gt: return count > nd.int_arg;
                    case Cmp::Ne: return count != nd.int_arg;
                }
                return false;
            }
            case Op::CardDiffLe1: {
                auto card = [&](const std::string& name) -> long {
                    if (auto it = vset_env.find(name); it != vset_env.end())
                        return std::count(it->second.begin(), it->second.end(), 1);
                    return std::count(eset_of(name).begin(), eset_of(name).end(), 1);
                };
                long a = card(nd.set_names[0]);
                long b = card(nd.set_names[1]);
                return (a > b ? a - b : b - a) <= 1;
            }
            case Op::Connected: return mask_connected(g_, vset_of(nd.set_names[0]));
            case Op::CoConnected: {
                std::vector<char> out(n_, 0);
                const auto& in = vset_of(nd.set_names[0]);
                for (int v = 0; v < n_; ++v) out[v] = in[v] ? 0 : 1;
                return mask_connected(g_, out);
            }
            case Op::InducesCycle: return mask_induces_cycle(g_, vset_of(nd.set_names[0]));
            case Op::RainbowConnected: return rainbow_connected(nd.set_names);
            case Op::NoInducedCycleAbove: return no_induced_cycle_above(nd.int_arg);
        }
        throw InternalError("evaluator: unhandled node");
    }

private:
    bool eval_quantifier(const Node& nd, bool universal) {
        switch (nd.var_sort) {
            case VarSort::Vertex: {
                for (int v = 0; v < n_; ++v) {
                    vertex_env[nd.var] = v;
                    bool r = eval(*nd.children[0]);
                    if (r != universal) {
                        vertex_env.erase(nd.var);
                        return !universal;
                    }
                }
                vertex_env.erase(nd.var);
                return universal;
            }
            case VarSort::Edge: {
                const int m = g_.edge_count();
                for (int e = 0; e < m; ++e) {
                    edge_env[nd.var] = e;
                    bool r = eval(*nd.children[0]);
                    if (r != universal) {
                        edge_env.erase(nd.var);
                        return !universal;
                    }
                }
                edge_env.erase(nd.var);
                return universal;
            }
            case VarSort::VertexSet:
            case VarSort::EdgeSet: {
                const bool vertex_mode = nd.var_sort == VarSort::VertexSet;
                const int bits = vertex_mode ? n_ : g_.edge_count();
                if (bits > opts_.set_quantifier_cap)
                    throw CapExceeded("set quantifier over " + std::to_string(bits) +
                                      " elements exceeds cap " +
                                      std::to_string(opts_.set_quantifier_cap));
                auto& env = vertex_mode ? vset_env : eset_env;
                std::vector<char> mask(bits, 0);
                const uint64_t total = 1ull << bits;
                for (uint64_t s = 0; s < total; ++s) {
                    if ((s & 0xfff) == 0) opts_.deadline.check("set quantification");
                    for (int i = 0; i < bits; ++i) mask[i] = (s >> i) & 1 ? 1 : 0;
                    env[nd.var] = mask;
                    bool r = eval(*nd.children[0]);
                    if (r != universal) {
                        env.erase(nd.var);
                        return !universal;
                    }
                }
                env.erase(nd.var);
                return universal;
            }
            case VarSort::Orientation:
                throw InputError("orientation variables cannot be quantified");
        }
        throw InternalError("evaluator: unhandled quantifier sort");
    }

    // every edge must lie in exactly one class; then every vertex pair needs a
    // vertex-simple path whose edge colors are pairwise distinct
    bool rainbow_connected(const std::vector<std::string>& classes) {
        const int m = g_.edge_count();
        const int k = static_cast<int>(classes.size());
        std::vector<int> color(m, -1);
        for (int c = 0; c < k; ++c) {
            const auto& mask = eset_of(classes[c]);
            for (int e = 0; e < m; ++e) {
                if (!mask[e]) continue;
                if (color[e] != -1) return false;  // overlapping classes
                color[e] = c;
            }
        }
        for (int e = 0; e < m; ++e)
            if (color[e] == -1) return false;  // uncolored edge
        std::vector<char> on_path(n_, 0);
        std::vector<char> used(k, 0);
        for (int s = 0; s < n_; ++s)
            for (int t = s + 1; t < n_; ++t) {
                std::fill(on_path.begin(), on_path.end(), 0);
                std::fill(used.begin(), used.end(), 0);
                on_path[s] = 1;
                if (!rainbow_dfs(s, t, color, on_path, used)) return false;
            }
        return true;
    }

    bool rainbow_dfs(int at, int target, const std::vector<int>& color, std::vector<char>& on_path,
                     std::vector<char>& used) {
        if (at == target) return true;
        opts_.deadline.check("rainbow path search");
        for (int w : g_.neighbors(at)) {
            if (on_path[w]) continue;
            int c = color[g_.edge_index(at, w)];
            if (used[c]) continue;
            on_path[w] = 1;
            used[c] = 1;
            if (rainbow_dfs(w, target, color, on_path, used)) {
                on_path[w] = 0;
                used[c] = 0;
                return true;
            }
            on_path[w] = 0;
            used[c] = 0;
        }
        return false;
    }

    bool no_induced_cycle_above(int k) {
        if (n_ > opts_.cycle_scan_cap)
            throw CapExceeded("induced-cycle scan over n=" + std::to_string(n_) + " exceeds cap " +
                              std::to_string(opts_.cycle_scan_cap));
        std::vector<char> mask(n_, 0);
        const uint64_t total = 1ull << n_;
        for (uint64_t s = 0; s < total; ++s) {
            if ((s & 0xfff) == 0) opts_.deadline.check("induced-cycle scan");
            int pop = __builtin_popcountll(s);
            if (pop <= k) continue;
            for (int i = 0; i < n_; ++i) mask[i] = (s >> i) & 1 ? 1 : 0;
            if (mask_induces_cycle(g_, mask)) return false;
        }
        return true;
    }
};

std::vector<char> vertex_mask(const Graph& g, const VertexSet& vs) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (int v : vs) {
        if (!g.has_vertex(v)) throw InputError("set member " + std::to_string(v) + " out of range");
        mask[v] = 1;
    }
    return mask;
}

std::vector<char> edge_mask(const Graph& g, const EdgeSet& es) {
    std::vector<char> mask(g.edge_count(), 0);
    for (const auto& [u, v] : es) {
        int idx = g.edge_index(u, v);
        if (idx < 0)
            throw InputError("pair {" + std::to_string(u) + "," + std::to_string(v) +
                             "} is not an edge of the graph");
        mask[idx] = 1;
    }
    return mask;
}

}  // namespace

bool evaluate(const Formula& f, const Structure& m, const EvalOptions& opts) {
    if (m.graph == nullptr) throw InputError("structure has no graph");
    const Graph& g = *m.graph;
    Evaluator ev(g, opts);
    const int n = g.vertex_count();
    for (const FreeVar& fv : f.free_vars()) {
        switch (fv.sort) {
            case VarSort::Vertex: {
                auto it = m.vertex_vars.find(fv.name);
                if (it == m.vertex_vars.end())
                    throw InputError("free vertex variable '" + fv.name + "' unbound");
                if (!g.has_vertex(it->second)) throw InputError("binding out of range");
                ev.vertex_env[fv.name] = it->second;
                break;
            }
            case VarSort::Edge: {
                auto it = m.edge_vars.find(fv.name);
                if (it == m.edge_vars.end())
                    throw InputError("free edge variable '" + fv.name + "' unbound");
                int idx = g.edge_index(it->second.first, it->second.second);
                if (idx < 0) throw InputError("edge binding is not an edge");
                ev.edge_env[fv.name] = idx;
                break;
            }
            case VarSort::VertexSet: {
                auto it = m.vertex_sets.find(fv.name);
                if (it == m.vertex_sets.end())
                    throw InputError("free vertex-set variable '" + fv.name + "' unbound");
                ev.vset_env[fv.name] = vertex_mask(g, it->second);
                break;
            }
            case VarSort::EdgeSet: {
                auto it = m.edge_sets.find(fv.name);
                if (it == m.edge_sets.end())
                    throw InputError("free edge-set variable '" + fv.name + "' unbound");
                ev.eset_env[fv.name] = edge_mask(g, it->second);
                break;
            }
            case VarSort::Orientation: {
                auto it = m.orientations.find(fv.name);
                if (it == m.orientations.end())
                    throw InputError("free orientation symbol '" + fv.name + "' unbound");
                std::vector<char> mat(static_cast<size_t>(n) * n, 0);
                for (auto [a, b] : it->second) {
                    if (!g.has_vertex(a) || !g.has_vertex(b) || a == b)
                        throw InputError("bad orientation pair");
                    if (mat[static_cast<size_t>(b) * n + a])
                        throw InputError("orientation contains both directions of a pair");
                    mat[static_cast<size_t>(a) * n + b] = 1;
                }
                ev.orient_env[fv.name] = std::move(mat);
                break;
            }
        }
    }
    return ev.eval(f.root());
}

namespace {

// lexicographic combinations of {0..n-1} of size k; returns false when the
// visitor stops the enumeration
template <typename Fn>
bool for_each_combination(int n, int k, const Deadline& deadline, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return true;
    while (true) {
        deadline.check("subset enumeration");
        if (!fn(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

MinSetResult min_satisfying_set(const Formula& f, const Graph& g, const MinSetOptions& opts) {
    const auto frees = f.free_vars();
    const FreeVar* set_var = nullptr;
    for (const auto& fv : frees) {
        if (fv.sort == VarSort::VertexSet || fv.sort == VarSort::EdgeSet) {
            if (set_var) throw InputError("formula has more than one free set variable");
            set_var = &fv;
        } else if (fv.sort == VarSort::Orientation) {
            throw InputError("formula quantifies an orientation; minimize via the recognition/"
                             "modification modules instead");
        } else {
            throw InputError("free element variable '" + fv.name + "' must be bound");
        }
    }
    if (!set_var) throw InputError("formula has no free set variable");

    MinSetResult result;
    result.sort = set_var->sort;
    Structure m;
    m.graph = &g;

    if (set_var->sort == VarSort::VertexSet) {
        const int n = g.vertex_count();
        if (n > opts.vertex_cap)
            throw CapExceeded("min_satisfying_set over vertex subsets refused: n=" +
                              std::to_string(n) + " exceeds cap " + std::to_string(opts.vertex_cap));
        for (int size = 0; size <= n; ++size) {
            bool found = !for_each_combination(n, size, opts.eval.deadline, [&](const std::vector<int>& idx) {
                m.vertex_sets[set_var->name] = VertexSet(idx.begin(), idx.end());
                if (evaluate(f, m, opts.eval)) {
                    result.satisfiable = true;
                    result.vertices = m.vertex_sets[set_var->name];
                    result.size = size;
                    return false;
                }
                return true;
            });
            if (found) return result;
        }
        return result;  // unsatisfiable
    }

    const int mcount = g.edge_count();
    if (mcount > opts.edge_cap)
        throw CapExceeded("min_satisfying_set over edge subsets refused: m=" + std::to_string(mcount) +
                          " exceeds cap " + std::to_string(opts.edge_cap));
    for (int size = 0; size <= mcount; ++size) {
        bool found = !for_each_combination(mcount, size, opts.eval.deadline, [&](const std::vector<int>& idx) {
            EdgeSet es;
            es.reserve(idx.size());
            for (int i : idx) es.push_back(g.edges()[i]);
            m.edge_sets[set_var->name] = es;
            if (evaluate(f, m, opts.eval)) {
                result.satisfiable = true;
                result.edges = std::move(es);
                result.size = size;
                return false;
            }
            return true;
        });
        if (found) return result;
    }
    return result;
}

}  // namespace graphlogic::logic
