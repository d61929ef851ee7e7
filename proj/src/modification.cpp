#include "graphlogic/modification.hpp"

#include <algorithm>

namespace graphlogic::modification {

using recognition::GraphClass;
using recognition::Violation;

Mode mode_from_name(const std::string& name) {
    if (name == "node") return Mode::Node;
    if (name == "edge") return Mode::Edge;
    throw InputError("unknown deletion mode '" + name + "'");
}

std::string mode_name(Mode m) { return m == Mode::Node ? "node" : "edge"; }

std::string method_name(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::ApproxPacking: return "approx-packing";
        case Method::HeuristicConflict: return "heuristic-conflict";
    }
    return "?";
}

bool supports(GraphClass cls, Mode mode, Method method) {
    switch (method) {
        case Method::Exact:
            if (mode == Mode::Node)
                return recognition::is_pattern_class(cls) || recognition::is_orientation_class(cls);
            return cls == GraphClass::Cograph || cls == GraphClass::Split ||
                   cls == GraphClass::Threshold || cls == GraphClass::Comparability;
        case Method::ApproxPacking:
            return recognition::is_pattern_class(cls);
        case Method::HeuristicConflict:
            if (mode == Mode::Node) return recognition::is_orientation_class(cls);
            return cls == GraphClass::Comparability;
    }
    return false;
}

namespace {

void certify(DeletionResult& r, const Graph& g) {
    Graph residual = r.mode == Mode::Node ? delete_vertices(g, r.vertex_solution)
                                          : delete_edges(g, r.edge_solution);
    if (!recognition::is_in_class(residual, r.cls).member)
        throw InternalError("deletion result failed recognizer certification");
    r.certified = true;
}

template <typename Fn>
bool for_each_combination(int n, int k, const Deadline& deadline, Fn&& fn) {
    if (k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        deadline.check("deletion search");
        if (!fn(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

DeletionResult exact_node_deletion(const Graph& g, GraphClass cls, const SearchOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.node_cap)
        throw CapExceeded("exact node deletion refused: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(opts.node_cap));
    DeletionResult r;
    r.cls = cls;
    r.mode = Mode::Node;
    r.method = Method::Exact;
    for (int size = 0; size <= n; ++size) {
        bool found = !for_each_combination(n, size, opts.deadline, [&](const std::vector<int>& idx) {
            VertexSet s(idx.begin(), idx.end());
            if (recognition::is_in_class(delete_vertices(g, s), cls).member) {
                r.vertex_solution = std::move(s);
                r.size = size;
                return false;
            }
            return true;
        });
        if (found) break;
    }
    certify(r, g);
    return r;
}

DeletionResult exact_edge_deletion(const Graph& g, GraphClass cls, const SearchOptions& opts) {
    if (!supports(cls, Mode::Edge, Method::Exact))
        throw InputError("edge deletion toward " + recognition::class_name(cls) +
                         " is not formulated");
    const int m = g.edge_count();
    if (m > opts.edge_cap)
        throw CapExceeded("exact edge deletion refused: m=" + std::to_string(m) + " exceeds cap " +
                          std::to_string(opts.edge_cap));
    DeletionResult r;
    r.cls = cls;
    r.mode = Mode::Edge;
    r.method = Method::Exact;
    for (int size = 0; size <= m; ++size) {
        bool found = !for_each_combination(m, size, opts.deadline, [&](const std::vector<int>& idx) {
            EdgeSet s;
            s.reserve(idx.size());
            for (int i : idx) s.push_back(g.edges()[i]);
            if (recognition::is_in_class(delete_edges(g, s), cls).member) {
                r.edge_solution = std::move(s);
                r.size = size;
                return false;
            }
            return true;
        });
        if (found) break;
    }
    certify(r, g);
    return r;
}

namespace {

// maximal vertex-disjoint collection, scanning canonical violation order
std::vector<Violation> disjoint_packing(const Graph& g, GraphClass cls) {
    std::vector<Violation> kept;
    std::vector<char> used(g.vertex_count(), 0);
    recognition::for_each_violation(g, cls, [&](const Violation& v) {
        for (int x : v.hit_vertices)
            if (used[x]) return true;
        for (int x : v.hit_vertices) used[x] = 1;
        kept.push_back(v);
        return true;
    });
    return kept;
}

}  // namespace

DeletionResult approx_node_deletion(const Graph& g, GraphClass cls) {
    if (!recognition::is_pattern_class(cls))
        throw InputError("packing approximation needs a finite pattern set; " +
                         recognition::class_name(cls) + " has none");
    DeletionResult r;
    r.cls = cls;
    r.mode = Mode::Node;
    r.method = Method::ApproxPacking;
    int t = 0;
    for (auto p : recognition::class_patterns(cls)) t = std::max(t, recognition::pattern(p).order);
    r.ratio_bound = t;
    auto kept = disjoint_packing(g, cls);
    std::vector<int> s;
    for (const auto& v : kept) s.insert(s.end(), v.hit_vertices.begin(), v.hit_vertices.end());
    r.vertex_solution = canonical_vertex_set(std::move(s));
    r.size = static_cast<int>(r.vertex_solution.size());
    r.rounds = kept.empty() ? 0 : 1;
    certify(r, g);
    return r;
}

DeletionResult approx_edge_deletion(const Graph& g, GraphClass cls) {
    if (!recognition::is_pattern_class(cls))
        throw InputError("packing approximation needs a finite pattern set; " +
                         recognition::class_name(cls) + " has none");
    DeletionResult r;
    r.cls = cls;
    r.mode = Mode::Edge;
    r.method = Method::ApproxPacking;
    Graph cur = g;
    std::vector<Edge> removed;
    // deleting edges can create fresh violations, so iterate to a fixpoint
    while (!recognition::is_in_class(cur, cls).member) {
        auto kept = disjoint_packing(cur, cls);
        std::vector<Edge> doomed;
        for (const auto& v : kept) doomed.insert(doomed.end(), v.hit_edges.begin(), v.hit_edges.end());
        EdgeSet step = canonical_edge_set(std::move(doomed));
        if (step.empty()) throw InternalError("edge packing round made no progress");
        cur = delete_edges(cur, step);
        removed.insert(removed.end(), step.begin(), step.end());
        ++r.rounds;
    }
    r.edge_solution = canonical_edge_set(std::move(removed));
    r.size = static_cast<int>(r.edge_solution.size());
    certify(r, g);
    return r;
}

DeletionResult heuristic_orientation_deletion(const Graph& g, GraphClass cls, Mode mode) {
    if (!supports(cls, mode, Method::HeuristicConflict))
        throw InputError("conflict heuristic does not support " + recognition::class_name(cls) +
                         " in " + mode_name(mode) + " mode");
    DeletionResult r;
    r.cls = cls;
    r.mode = mode;
    r.method = Method::HeuristicConflict;
    Graph cur = g;
    std::vector<int> orig(g.vertex_count());  // current id -> original id
    for (int i = 0; i < g.vertex_count(); ++i) orig[i] = i;
    std::vector<int> doomed_vertices;
    std::vector<Edge> doomed_edges;
    while (true) {
        auto d = recognition::is_in_class(cur, cls);
        if (d.member) break;
        ++r.rounds;
        const Violation& w = *d.witness;
        if (mode == Mode::Edge) {
            // conflicted edge; comparability conflicts are always on real edges
            Edge e = w.hit_edges.at(0);
            doomed_edges.push_back(make_edge(orig[e.first], orig[e.second]));
            cur = delete_edges(cur, {e});
        } else {
            for (int v : w.hit_vertices) doomed_vertices.push_back(orig[v]);
            cur = delete_vertices(cur, w.hit_vertices);
            std::vector<int> next;
            for (int i = 0; i < static_cast<int>(orig.size()); ++i)
                if (!std::binary_search(w.hit_vertices.begin(), w.hit_vertices.end(), i))
                    next.push_back(orig[i]);
            orig = std::move(next);
        }
    }
    if (mode == Mode::Node) {
        r.vertex_solution = canonical_vertex_set(std::move(doomed_vertices));
        r.size = static_cast<int>(r.vertex_solution.size());
    } else {
        r.edge_solution = canonical_edge_set(std::move(doomed_edges));
        r.size = static_cast<int>(r.edge_solution.size());
    }
    certify(r, g);
    return r;
}

RatioAudit audit_ratio(const Graph& g, GraphClass cls, Mode mode, const SearchOptions& opts) {
    DeletionResult approx;
    if (recognition::is_pattern_class(cls))
        approx = mode == Mode::Node ? approx_node_deletion(g, cls) : approx_edge_deletion(g, cls);
    else
        approx = heuristic_orientation_deletion(g, cls, mode);
    DeletionResult exact =
        mode == Mode::Node ? exact_node_deletion(g, cls, opts) : exact_edge_deletion(g, cls, opts);
    RatioAudit audit;
    audit.approx_size = approx.size;
    audit.exact_size = exact.size;
    audit.ratio = exact.size == 0 ? (approx.size == 0 ? 1.0 : static_cast<double>(approx.size))
                                  : static_cast<double>(approx.size) / exact.size;
    return audit;
}

}  // namespace graphlogic::modification
