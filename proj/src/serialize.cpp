#include "graphlogic/serialize.hpp"

namespace graphlogic {

using nlohmann::json;

json to_json(const EdgeSet& es) {
    json out = json::array();
    for (const auto& [u, v] : es) out.push_back(json::array({u, v}));
    return out;
}

json to_json(const recognition::Violation& v) {
    json out;
    out["kind"] = v.kind == recognition::Violation::Kind::PatternEmbedding ? "pattern-embedding"
                                                                           : "transitivity-conflict";
    out["pattern"] = v.pattern.empty() ? json() : json(v.pattern);
    out["vertices"] = v.vertices;
    out["hitVertices"] = v.hit_vertices;
    out["hitEdges"] = to_json(v.hit_edges);
    if (v.kind == recognition::Violation::Kind::TransitivityConflict) {
        json chain = json::array();
        for (auto [a, b] : v.forcing_chain) chain.push_back(json::array({a, b}));
        out["forcingChain"] = chain;
        out["inComplement"] = v.complement_conflict;
    }
    return out;
}

json to_json(const modification::DeletionResult& r) {
    json out;
    out["class"] = recognition::class_name(r.cls);
    out["mode"] = modification::mode_name(r.mode);
    out["method"] = modification::method_name(r.method);
    out["solution"] = r.mode == modification::Mode::Node ? json(r.vertex_solution)
                                                         : to_json(r.edge_solution);
    out["size"] = r.size;
    out["certified"] = r.certified;
    out["ratioBound"] = r.ratio_bound ? json(*r.ratio_bound) : json();
    out["rounds"] = r.rounds;
    return out;
}

json to_json(const tw::DominationResult& r) {
    json out;
    out["variant"] = tw::dom_variant_name(r.variant);
    if (!r.feasible) {
        out["infeasible"] = true;
        return out;
    }
    out["set"] = r.set;
    out["size"] = r.size;
    out["certified"] = r.certified;
    return out;
}

json to_json(const tw::ColoringResult& r) {
    json out;
    out["variant"] = tw::coloring_variant_name(r.variant);
    out["k"] = r.k;
    if (!r.feasible) {
        out["infeasible"] = true;
        return out;
    }
    if (tw::coloring_variant_uses_vertices(r.variant)) out["colors"] = r.vertex_colors;
    if (tw::coloring_variant_uses_edges(r.variant)) out["edgeColors"] = r.edge_colors;
    out["certified"] = r.certified;
    return out;
}

}  // namespace graphlogic
