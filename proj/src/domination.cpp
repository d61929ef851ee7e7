#include "graphlogic/domination.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "graphlogic/catalog.hpp"
#include "graphlogic/evaluator.hpp"

namespace graphlogic::tw {

DomVariant dom_variant_from_name(const std::string& name) {
    if (name == "dom") return DomVariant::Dom;
    if (name == "total_dom") return DomVariant::TotalDom;
    if (name == "connected_dom") return DomVariant::ConnectedDom;
    if (name == "total_outer_connected_dom") return DomVariant::TotalOuterConnectedDom;
    if (name == "cycle_dom") return DomVariant::CycleDom;
    if (name == "perfect_dom") return DomVariant::PerfectDom;
    if (name == "clique_dom") return DomVariant::CliqueDom;
    throw InputError("unknown domination variant '" + name + "'");
}

std::string dom_variant_name(DomVariant v) {
    switch (v) {
        case DomVariant::Dom: return "dom";
        case DomVariant::TotalDom: return "total_dom";
        case DomVariant::ConnectedDom: return "connected_dom";
        case DomVariant::TotalOuterConnectedDom: return "total_outer_connected_dom";
        case DomVariant::CycleDom: return "cycle_dom";
        case DomVariant::PerfectDom: return "perfect_dom";
        case DomVariant::CliqueDom: return "clique_dom";
    }
    return "?";
}

bool dom_variant_has_dp(DomVariant v) {
    return v == DomVariant::Dom || v == DomVariant::TotalDom || v == DomVariant::ConnectedDom;
}

namespace {

bool induced_connected(const Graph& g, const std::vector<char>& in) {
    const int n = g.vertex_count();
    int start = -1, members = 0;
    for (int v = 0; v < n; ++v)
        if (in[v]) {
            if (start == -1) start = v;
            ++members;
        }
    if (members <= 1) return true;
    std::deque<int> q{start};
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push_back(w);
            }
    }
    return reached == members;
}

std::vector<char> to_mask(const Graph& g, const VertexSet& s) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (int v : s) {
        if (!g.has_vertex(v)) throw InputError("set member out of range");
        mask[v] = 1;
    }
    return mask;
}

void certify_with_formula(const Graph& g, DominationResult& r) {
    if (!r.feasible) return;
    logic::Structure m;
    m.graph = &g;
    m.vertex_sets["S"] = r.set;
    if (!logic::evaluate(logic::catalog_formula(dom_variant_name(r.variant)), m))
        throw InternalError("solver output rejected by the defining predicate");
    r.certified = true;
}

// ---- nice-decomposition dynamic programming ----
//
// States are byte strings over the bag positions. Per variant:
//   dom:           0 in S, 1 out+dominated, 2 out+undominated
//   total_dom:     0 in S+dominated, 1 in S+undominated, 2 out+dominated, 3 out+undominated
//   connected_dom: 0..14 in S with a normalized block id, 20 out+dominated,
//                  21 out+undominated, plus one trailing byte: 1 once a solution
//                  component has been sealed by a forget
struct Entry {
    int cost = 0;
    std::string from1, from2;
    int8_t decision = -1;  // introduce: 1 when the vertex joined S
};
using Table = std::map<std::string, Entry>;

constexpr char kOutDom = 20;
constexpr char kOutUndom = 21;

bool dp_in_set(DomVariant variant, char st) {
    switch (variant) {
        case DomVariant::Dom: return st == 0;
        case DomVariant::TotalDom: return st == 0 || st == 1;
        default: return st < 20;
    }
}

// renormalize connected-dom block ids by first occurrence (statuses only,
// trailing completed byte excluded)
void normalize_blocks(std::string& st) {
    std::array<int8_t, 32> map;
    map.fill(-1);
    int next = 0;
    for (char& c : st) {
        if (c >= 20) continue;
        if (map[static_cast<int>(c)] == -1) map[static_cast<int>(c)] = static_cast<int8_t>(next++);
        c = static_cast<char>(map[static_cast<int>(c)]);
    }
}

class DomDP {
public:
    DomDP(const Graph& g, const NiceDecomposition& nd, DomVariant variant)
        : g_(g), nd_(nd), variant_(variant) {}

    DominationResult run() {
        validate_nice(g_, nd_);
        if (connected_mode() && nd_.width() + 1 > 14)
            throw CapExceeded("connected-domination DP limited to width <= 13");
        tables_.assign(nd_.nodes.size(), {});
        for (size_t i = 0; i < nd_.nodes.size(); ++i) {
            const NiceNode& node = nd_.nodes[i];
            switch (node.type) {
                case NiceNode::Type::Leaf: leaf(i); break;
                case NiceNode::Type::Introduce: introduce(i); break;
                case NiceNode::Type::Forget: forget(i); break;
                case NiceNode::Type::Join: join(i); break;
            }
        }
        return finish();
    }

private:
    const Graph& g_;
    const NiceDecomposition& nd_;
    DomVariant variant_;
    std::vector<Table> tables_;

    bool connected_mode() const { return variant_ == DomVariant::ConnectedDom; }

    void insert(Table& t, std::string key, int cost, std::string from1, std::string from2 = {},
                int8_t decision = -1) {
        auto it = t.find(key);
        if (it != t.end() && it->second.cost <= cost) return;
        t[std::move(key)] = Entry{cost, std::move(from1), std::move(from2), decision};
    }

    void leaf(size_t i) {
        std::string key;
        if (connected_mode()) key.push_back(0);  // completed = false
        insert(tables_[i], std::move(key), 0, {});
    }

    void introduce(size_t i) {
        const NiceNode& node = nd_.nodes[i];
        const NiceNode& child = nd_.nodes[node.left];
        const int v = node.vertex;
        const auto& bag = node.bag;
        const auto& cbag = child.bag;
        const int p = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
        // positions of v's neighbors in the child bag
        std::vector<int> nbr_pos;
        for (size_t j = 0; j < cbag.size(); ++j)
            if (g_.has_edge(v, cbag[j])) nbr_pos.push_back(static_cast<int>(j));

        for (const auto& [ckey, centry] : tables_[node.left]) {
            const std::string statuses = connected_mode() ? ckey.substr(0, ckey.size() - 1) : ckey;
            const char completed = connected_mode() ? ckey.back() : 0;
            bool has_in_neighbor = false;
            for (int j : nbr_pos)
                if (dp_in_set(variant_, statuses[j])) has_in_neighbor = true;

            // v stays out
            {
                std::string st = statuses;
                char mine;
                if (variant_ == DomVariant::Dom)
                    mine = has_in_neighbor ? 1 : 2;
                else if (variant_ == DomVariant::TotalDom)
                    mine = has_in_neighbor ? 2 : 3;
                else
                    mine = has_in_neighbor ? kOutDom : kOutUndom;
                st.insert(st.begin() + p, mine);
                if (connected_mode()) st.push_back(completed);
                insert(tables_[i], std::move(st), centry.cost, ckey, {}, 0);
            }

            // v joins S
            if (connected_mode() && completed) continue;  // a sealed component forbids growth
            {
                std::string st = statuses;
                char mine;
                if (variant_ == DomVariant::Dom) {
                    mine = 0;
                    for (int j : nbr_pos)
                        if (st[j] == 2) st[j] = 1;
                } else if (variant_ == DomVariant::TotalDom) {
                    mine = has_in_neighbor ? 0 : 1;
                    for (int j : nbr_pos) {
                        if (st[j] == 3) st[j] = 2;
                        if (st[j] == 1) st[j] = 0;
                    }
                } else {
                    mine = 15;  // fresh block, fixed below
                    for (int j : nbr_pos)
                        if (st[j] == kOutUndom) st[j] = kOutDom;
                }
                st.insert(st.begin() + p, mine);
                if (connected_mode()) {
                    // merge v's block with adjacent in-set blocks
                    std::vector<char> merge;
                    for (int j : nbr_pos) {
                        int jp = j >= p ? j + 1 : j;  // positions shifted by the insert
                        if (st[jp] < 20) merge.push_back(st[jp]);
                    }
                    for (char& c : st)
                        if (c < 20 && std::find(merge.begin(), merge.end(), c) != merge.end()) c = 15;
                    normalize_blocks(st);
                    st.push_back(completed);
                }
                insert(tables_[i], std::move(st), centry.cost + 1, ckey, {}, 1);
            }
        }
    }

    void forget(size_t i) {
        const NiceNode& node = nd_.nodes[i];
        const NiceNode& child = nd_.nodes[node.left];
        const int v = node.vertex;
        const auto& cbag = child.bag;
        const int p = static_cast<int>(std::lower_bound(cbag.begin(), cbag.end(), v) - cbag.begin());

        for (const auto& [ckey, centry] : tables_[node.left]) {
            std::string statuses = connected_mode() ? ckey.substr(0, ckey.size() - 1) : ckey;
            char completed = connected_mode() ? ckey.back() : 0;
            const char st_v = statuses[p];
            // a vertex leaving the bags can never gain a dominator
            if (variant_ == DomVariant::Dom && st_v == 2) continue;
            if (variant_ == DomVariant::TotalDom && (st_v == 1 || st_v == 3)) continue;
            if (connected_mode() && st_v == kOutUndom) continue;
            statuses.erase(statuses.begin() + p);
            if (connected_mode() && st_v < 20) {
                bool block_alive = false;
                for (char c : statuses)
                    if (c == st_v) block_alive = true;
                if (!block_alive) {
                    // the component sealed; any other open block can never
                    // reconnect to it
                    bool others = false;
                    for (char c : statuses)
                        if (c < 20) others = true;
                    if (others || completed) continue;
                    completed = 1;
                }
                normalize_blocks(statuses);
            }
            if (connected_mode()) statuses.push_back(completed);
            insert(tables_[i], std::move(statuses), centry.cost, ckey);
        }
    }

    void join(size_t i) {
        const NiceNode& node = nd_.nodes[i];
        const auto& bag = node.bag;
        const int bag_size = static_cast<int>(bag.size());
        // group right-child states by their in-set pattern
        std::map<std::string, std::vector<const std::pair<const std::string, Entry>*>> right;
        for (const auto& kv : tables_[node.right]) {
            std::string pat(bag_size, 0);
            const std::string& key = kv.first;
            for (int j = 0; j < bag_size; ++j) pat[j] = dp_in_set(variant_, key[j]) ? 1 : 0;
            right[pat].push_back(&kv);
        }
        for (const auto& [akey, aentry] : tables_[node.left]) {
            std::string pat(bag_size, 0);
            int in_count = 0;
            for (int j = 0; j < bag_size; ++j) {
                pat[j] = dp_in_set(variant_, akey[j]) ? 1 : 0;
                in_count += pat[j];
            }
            auto it = right.find(pat);
            if (it == right.end()) continue;
            for (const auto* bkv : it->second) {
                const std::string& bkey = bkv->first;
                const Entry& bentry = bkv->second;
                if (connected_mode() && akey.back() && bkey.back()) continue;  // two sealed pieces
                std::string st(bag_size, 0);
                DisjointBlocks blocks(bag_size);
                for (int j = 0; j < bag_size; ++j) {
                    if (pat[j]) {
                        st[j] = 0;  // block ids resolved below
                        continue;
                    }
                    switch (variant_) {
                        case DomVariant::Dom:
                            st[j] = (akey[j] == 1 || bkey[j] == 1) ? 1 : 2;
                            break;
                        case DomVariant::TotalDom:
                            st[j] = (akey[j] == 2 || bkey[j] == 2) ? 2 : 3;
                            break;
                        default:
                            st[j] = (akey[j] == kOutDom || bkey[j] == kOutDom) ? kOutDom : kOutUndom;
                            break;
                    }
                }
                if (variant_ == DomVariant::TotalDom) {
                    for (int j = 0; j < bag_size; ++j)
                        if (pat[j]) st[j] = (akey[j] == 0 || bkey[j] == 0) ? 0 : 1;
                }
                if (connected_mode()) {
                    // union the two block partitions on the shared in-set vertices
                    for (int a = 0; a < bag_size; ++a)
                        for (int b = a + 1; b < bag_size; ++b) {
                            if (!pat[a] || !pat[b]) continue;
                            if (akey[a] == akey[b] || bkey[a] == bkey[b]) blocks.unite(a, b);
                        }
                    std::map<int, char> root_block;
                    char next = 0;
                    for (int j = 0; j < bag_size; ++j) {
                        if (!pat[j]) continue;
                        int r = blocks.find(j);
                        auto rit = root_block.find(r);
                        if (rit == root_block.end()) rit = root_block.emplace(r, next++).first;
                        st[j] = rit->second;
                    }
                    st.push_back(akey.back() || bkey.back() ? 1 : 0);
                }
                insert(tables_[i], std::move(st), aentry.cost + bentry.cost - in_count, akey, bkey);
            }
        }
    }

    struct DisjointBlocks {
        std::vector<int> parent;
        explicit DisjointBlocks(int n) : parent(n) {
            for (int i = 0; i < n; ++i) parent[i] = i;
        }
        int find(int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        }
        void unite(int a, int b) { parent[find(a)] = find(b); }
    };

    DominationResult finish() {
        DominationResult r;
        r.variant = variant_;
        const Table& root = tables_[nd_.root];
        const Entry* best = nullptr;
        std::string best_key;
        for (const auto& [key, entry] : root) {
            if (connected_mode()) {
                bool completed = key.back() != 0;
                if (!completed && g_.vertex_count() > 0) continue;
            }
            if (!best || entry.cost < best->cost) {
                best = &entry;
                best_key = key;
            }
        }
        if (!best) {
            r.feasible = false;
            return r;
        }
        r.feasible = true;
        r.size = best->cost;
        // walk the provenance chain to recover the set
        std::vector<int> members;
        std::vector<std::pair<size_t, std::string>> stack{{static_cast<size_t>(nd_.root), best_key}};
        while (!stack.empty()) {
            auto [node_id, key] = stack.back();
            stack.pop_back();
            const NiceNode& node = nd_.nodes[node_id];
            const Entry& e = tables_[node_id].at(key);
            switch (node.type) {
                case NiceNode::Type::Leaf: break;
                case NiceNode::Type::Introduce:
                    if (e.decision == 1) members.push_back(node.vertex);
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
        r.set = canonical_vertex_set(std::move(members));
        if (static_cast<int>(r.set.size()) != r.size)
            throw InternalError("domination DP cost does not match the recovered set");
        certify_with_formula(g_, r);
        return r;
    }
};

}  // namespace

DominationResult solve_domination_dp(const Graph& g, const NiceDecomposition& nd, DomVariant variant) {
    if (!dom_variant_has_dp(variant))
        throw InputError("no dynamic program for " + dom_variant_name(variant) +
                         "; use the exact solver");
    DomDP dp(g, nd, variant);
    return dp.run();
}

bool dominates(const Graph& g, const VertexSet& s) {
    auto in = to_mask(g, s);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in[v]) continue;
        bool dominated = false;
        for (int w : g.neighbors(v))
            if (in[w]) dominated = true;
        if (!dominated) return false;
    }
    return true;
}

bool satisfies_dom_variant(const Graph& g, DomVariant variant, const VertexSet& s) {
    auto in = to_mask(g, s);
    const int n = g.vertex_count();
    auto total = [&] {
        for (int v = 0; v < n; ++v) {
            bool dominated = false;
            for (int w : g.neighbors(v))
                if (in[w]) dominated = true;
            if (!dominated) return false;
        }
        return true;
    };
    switch (variant) {
        case DomVariant::Dom:
            return dominates(g, s);
        case DomVariant::TotalDom:
            return total();
        case DomVariant::ConnectedDom:
            return dominates(g, s) && induced_connected(g, in);
        case DomVariant::TotalOuterConnectedDom: {
            std::vector<char> out(n);
            for (int v = 0; v < n; ++v) out[v] = in[v] ? 0 : 1;
            return total() && induced_connected(g, out);
        }
        case DomVariant::CycleDom: {
            if (s.size() < 3 || !dominates(g, s)) return false;
            for (int v : s) {
                int d = 0;
                for (int w : g.neighbors(v))
                    if (in[w]) ++d;
                if (d != 2) return false;
            }
            return induced_connected(g, in);
        }
        case DomVariant::PerfectDom: {
            for (int v = 0; v < n; ++v) {
                if (in[v]) continue;
                int d = 0;
                for (int w : g.neighbors(v))
                    if (in[w]) ++d;
                if (d != 1) return false;
            }
            return true;
        }
        case DomVariant::CliqueDom: {
            if (!dominates(g, s)) return false;
            for (size_t a = 0; a < s.size(); ++a)
                for (size_t b = a + 1; b < s.size(); ++b)
                    if (!g.has_edge(s[a], s[b])) return false;
            return true;
        }
    }
    throw InternalError("bad variant");
}

DominationResult solve_domination_exact(const Graph& g, DomVariant variant,
                                        const ExactSolveOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.cap)
        throw CapExceeded("exact domination refused: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(opts.cap));
    DominationResult r;
    r.variant = variant;
    for (int size = 0; size <= n && !r.feasible; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        if (size > n) break;
        while (true) {
            opts.deadline.check("domination search");
            VertexSet s(idx.begin(), idx.end());
            if (satisfies_dom_variant(g, variant, s)) {
                r.feasible = true;
                r.set = std::move(s);
                r.size = size;
                break;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    certify_with_formula(g, r);
    return r;
}

}  // namespace graphlogic::tw
