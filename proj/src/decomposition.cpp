#include "graphlogic/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace graphlogic::tw {

int TreeDecomposition::width() const {
    size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

void validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int n = g.vertex_count();
    if (td.n != n) throw InputError("decomposition is for n=" + std::to_string(td.n) + ", graph has n=" + std::to_string(n));
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) throw InputError("decomposition has no bags");
    for (const auto& b : td.bags) {
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= n) throw InputError("bag vertex out of range");
            if (i > 0 && b[i - 1] >= b[i]) throw InputError("bag not strictly increasing");
        }
    }
    // tree shape
    std::vector<std::vector<int>> bt(nb);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= nb || b < 0 || b >= nb || a == b) throw InputError("bad tree edge");
        bt[a].push_back(b);
        bt[b].push_back(a);
    }
    if (static_cast<int>(td.tree_edges.size()) != nb - 1) throw InputError("bag graph is not a tree (edge count)");
    std::vector<int> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : bt[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    if (reached != nb) throw InputError("bag graph is not a tree (disconnected)");
    // vertex coverage + running intersection (bags holding v form a connected subtree)
    std::vector<std::vector<int>> holder(n);
    for (int b = 0; b < nb; ++b)
        for (int v : td.bags[b]) holder[v].push_back(b);
    for (int v = 0; v < n; ++v) {
        if (holder[v].empty()) throw InputError("vertex " + std::to_string(v) + " in no bag");
        std::vector<char> inset(nb, 0);
        for (int b : holder[v]) inset[b] = 1;
        std::vector<int> st{holder[v][0]};
        std::vector<char> vis(nb, 0);
        vis[holder[v][0]] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : bt[x])
                if (inset[y] && !vis[y]) {
                    vis[y] = 1;
                    ++cnt;
                    st.push_back(y);
                }
        }
        if (cnt != static_cast<int>(holder[v].size()))
            throw InputError("running intersection violated at vertex " + std::to_string(v));
    }
    // edge coverage
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (int b : holder[u]) {
            const auto& bag = td.bags[b];
            if (std::binary_search(bag.begin(), bag.end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} in no bag");
    }
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "min-degree") return Strategy::MinDegree;
    if (name == "min-fill") return Strategy::MinFill;
    if (name == "exact-small") return Strategy::ExactSmall;
    throw InputError("unknown decomposition strategy '" + name + "'");
}

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw InputError("elimination order length mismatch");
    TreeDecomposition td;
    td.n = n;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    // simulate elimination on an evolving fill graph
    std::vector<std::set<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) throw InputError("bad elimination order");
        pos[order[i]] = i;
    }
    td.bags.resize(n);
    std::vector<int> bag_of(n);  // vertex -> its elimination bag index
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        bag_of[v] = i;
        VertexSet bag{v};
        for (int w : adj[v]) bag.push_back(w);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = bag;
        // connect to the bag of the earliest-eliminated remaining neighbor
        int best = -1;
        for (int w : adj[v])
            if (best == -1 || pos[w] < pos[best]) best = w;
        if (best != -1) {
            td.tree_edges.emplace_back(i, pos[best]);
        } else if (i + 1 < n) {
            td.tree_edges.emplace_back(i, i + 1);
        }
        // make the remaining neighborhood a clique, drop v
        std::vector<int> nbrs(adj[v].begin(), adj[v].end());
        for (size_t a = 0; a < nbrs.size(); ++a)
            for (size_t b = a + 1; b < nbrs.size(); ++b) {
                adj[nbrs[a]].insert(nbrs[b]);
                adj[nbrs[b]].insert(nbrs[a]);
            }
        for (int w : nbrs) adj[w].erase(v);
        adj[v].clear();
    }
    return td;
}

namespace {

std::vector<int> greedy_order(const Graph& g, bool min_fill) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long score;
            if (min_fill) {
                score = 0;
                std::vector<int> nb(adj[v].begin(), adj[v].end());
                for (size_t a = 0; a < nb.size(); ++a)
                    for (size_t b = a + 1; b < nb.size(); ++b)
                        if (!adj[nb[a]].count(nb[b])) ++score;
            } else {
                score = static_cast<long>(adj[v].size());
            }
            if (best == -1 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        order.push_back(best);
        gone[best] = 1;
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        for (int w : nb) adj[w].erase(best);
        adj[best].clear();
    }
    return order;
}

// Held-Karp style treewidth DP over elimination prefixes.
// q(S, v) = # of vertices outside S∪{v} reachable from v through S.
int eliminated_degree(const Graph& g, uint32_t S, int v) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{v};
    seen[v] = 1;
    int count = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(x)) {
            if (seen[w]) continue;
            seen[w] = 1;
            if (S & (1u << w)) {
                stack.push_back(w);  // pass through eliminated vertices
            } else if (w != v) {
                ++count;
            }
        }
    }
    return count;
}

std::vector<int> exact_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    if (n > 30) throw CapExceeded("exact-small decomposition limited to n <= 30");
    const uint32_t full = (1u << n) - 1;
    std::vector<int> best(full + 1, 0);
    std::vector<int8_t> choice(full + 1, -1);
    for (uint32_t S = 1; S <= full; ++S) {
        int bw = n;  // upper bound
        int bc = -1;
        for (int v = 0; v < n; ++v) {
            if (!(S & (1u << v))) continue;
            uint32_t rest = S & ~(1u << v);
            int w = std::max(best[rest], eliminated_degree(g, rest, v));
            if (w < bw) {
                bw = w;
                bc = v;
            }
        }
        best[S] = bw;
        choice[S] = static_cast<int8_t>(bc);
        if (S == full) break;
    }
    // choice[S] is the vertex eliminated last within S; peel from the full set.
    std::vector<int> order(n);
    uint32_t S = full;
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[S];
        order[i] = v;
        S &= ~(1u << v);
    }
    return order;
}

}  // namespace

TreeDecomposition decompose(const Graph& g, Strategy strategy, const DecomposeOptions& opts) {
    std::vector<int> order;
    switch (strategy) {
        case Strategy::MinDegree:
            order = greedy_order(g, false);
            break;
        case Strategy::MinFill:
            order = greedy_order(g, true);
            break;
        case Strategy::ExactSmall:
            if (g.vertex_count() > opts.exact_cap)
                throw CapExceeded("exact-small decomposition capped at n <= " + std::to_string(opts.exact_cap) +
                                  ", got n = " + std::to_string(g.vertex_count()));
            order = exact_order(g);
            break;
    }
    TreeDecomposition td = decomposition_from_elimination(g, order);
    validate_decomposition(g, td);  // mandatory checker
    return td;
}

TreeDecomposition read_td(std::istream& in) {
    std::string line;
    int line_no = 0;
    TreeDecomposition td;
    int nb = -1;
    bool header = false;
    std::vector<char> seen_bag;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "s") {
            std::string td_word;
            int width_plus_1;
            if (!(ss >> td_word >> nb >> width_plus_1 >> td.n) || td_word != "td" || nb < 0)
                throw ParseError("expected 's td <#bags> <width+1> <n>'", line_no);
            td.bags.assign(nb, {});
            seen_bag.assign(nb, 0);
            header = true;
        } else if (tag == "b") {
            if (!header) throw ParseError("bag line before header", line_no);
            int id;
            if (!(ss >> id) || id < 1 || id > nb) throw ParseError("bad bag id", line_no);
            if (seen_bag[id - 1]) throw ParseError("duplicate bag id", line_no);
            seen_bag[id - 1] = 1;
            VertexSet bag;
            int v;
            while (ss >> v) {
                if (v < 1 || v > td.n) throw ParseError("bag vertex out of range", line_no);
                bag.push_back(v - 1);
            }
            td.bags[id - 1] = canonical_vertex_set(std::move(bag));
        } else {
            if (!header) throw ParseError("tree edge before header", line_no);
            int a = 0, b = 0;
            std::istringstream ss2(line);
            if (!(ss2 >> a >> b) || a < 1 || a > nb || b < 1 || b > nb)
                throw ParseError("bad tree edge line", line_no);
            td.tree_edges.emplace_back(a - 1, b - 1);
        }
    }
    if (!header) throw ParseError("missing 's td' header", 1);
    return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << td.n << '\n';
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

TreeDecomposition read_td_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_td(in);
}

void write_td_file(const std::string& path, const TreeDecomposition& td) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    write_td(out, td);
}

int NiceDecomposition::width() const {
    size_t mx = 0;
    for (const auto& nd : nodes) mx = std::max(mx, nd.bag.size());
    return static_cast<int>(mx) - 1;
}

namespace {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NiceNode::Type t, int vertex, VertexSet bag, int left = -1, int right = -1) {
        nodes.push_back({t, vertex, std::move(bag), left, right});
        return static_cast<int>(nodes.size()) - 1;
    }

    // Chain from an empty leaf up to `target`.
    int leaf_chain(const VertexSet& target) {
        int cur = add(NiceNode::Type::Leaf, -1, {});
        VertexSet bag;
        for (int v : target) {
            bag.push_back(v);
            cur = add(NiceNode::Type::Introduce, v, bag, cur);
        }
        return cur;
    }

    // Forget everything in `from` not in `to`, then introduce the rest.
    int morph(int cur, const VertexSet& from, const VertexSet& to) {
        VertexSet bag = from;
        for (int v : from) {
            if (!std::binary_search(to.begin(), to.end(), v)) {
                bag.erase(std::find(bag.begin(), bag.end(), v));
                cur = add(NiceNode::Type::Forget, v, bag, cur);
            }
        }
        for (int v : to) {
            if (!std::binary_search(bag.begin(), bag.end(), v)) {
                bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
                cur = add(NiceNode::Type::Introduce, v, bag, cur);
            }
        }
        return cur;
    }
};

}  // namespace

NiceDecomposition make_nice(const TreeDecomposition& td) {
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) throw InputError("decomposition has no bags");
    std::vector<std::vector<int>> bt(nb);
    for (auto [a, b] : td.tree_edges) {
        bt[a].push_back(b);
        bt[b].push_back(a);
    }
    NiceBuilder nb_builder;
    // post-order build rooted at bag 0
    std::vector<int> parent(nb, -2);
    std::vector<int> order;
    order.reserve(nb);
    std::vector<int> stack{0};
    parent[0] = -1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : bt[x])
            if (parent[y] == -2) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    std::vector<int> top(nb, -1);  // nice node whose bag == td bag
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int t = *it;
        std::vector<int> kids;
        for (int y : bt[t])
            if (parent[y] == t) kids.push_back(y);
        int cur;
        if (kids.empty()) {
            cur = nb_builder.leaf_chain(td.bags[t]);
        } else {
            std::vector<int> arms;
            for (int c : kids) arms.push_back(nb_builder.morph(top[c], td.bags[c], td.bags[t]));
            cur = arms[0];
            for (size_t i = 1; i < arms.size(); ++i)
                cur = nb_builder.add(NiceNode::Type::Join, -1, td.bags[t], cur, arms[i]);
        }
        top[t] = cur;
    }
    // forget the root bag down to empty
    int cur = nb_builder.morph(top[0], td.bags[0], {});
    NiceDecomposition nd;
    nd.nodes = std::move(nb_builder.nodes);
    nd.root = cur;
    return nd;
}

void validate_nice(const Graph& g, const NiceDecomposition& nd) {
    if (nd.root < 0 || nd.root >= static_cast<int>(nd.nodes.size())) throw InputError("bad nice root");
    if (!nd.nodes[nd.root].bag.empty()) throw InputError("nice root bag must be empty");
    TreeDecomposition td;
    td.n = g.vertex_count();
    for (const auto& node : nd.nodes) td.bags.push_back(node.bag);
    for (size_t i = 0; i < nd.nodes.size(); ++i) {
        const auto& node = nd.nodes[i];
        auto diff_one = [&](const VertexSet& big, const VertexSet& small, int v) {
            VertexSet expect = small;
            expect.insert(std::upper_bound(expect.begin(), expect.end(), v), v);
            return big == expect;
        };
        switch (node.type) {
            case NiceNode::Type::Leaf:
                if (!node.bag.empty() || node.left != -1 || node.right != -1)
                    throw InputError("bad leaf node");
                break;
            case NiceNode::Type::Introduce:
                if (node.left == -1 || node.right != -1 ||
                    !diff_one(node.bag, nd.nodes[node.left].bag, node.vertex))
                    throw InputError("introduce node must add exactly its vertex");
                break;
            case NiceNode::Type::Forget:
                if (node.left == -1 || node.right != -1 ||
                    !diff_one(nd.nodes[node.left].bag, node.bag, node.vertex))
                    throw InputError("forget node must drop exactly its vertex");
                break;
            case NiceNode::Type::Join:
                if (node.left == -1 || node.right == -1 || nd.nodes[node.left].bag != node.bag ||
                    nd.nodes[node.right].bag != node.bag)
                    throw InputError("join children must share the join bag");
                break;
        }
        if (node.left != -1) td.tree_edges.emplace_back(static_cast<int>(i), node.left);
        if (node.right != -1) td.tree_edges.emplace_back(static_cast<int>(i), node.right);
    }
    validate_decomposition(g, td);  // coverage + running intersection on the node tree
}

}  // namespace graphlogic::tw
