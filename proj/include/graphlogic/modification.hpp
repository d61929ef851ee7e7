#pragma once

#include <optional>
#include <string>

#include "graphlogic/graph.hpp"
#include "graphlogic/recognition.hpp"

namespace graphlogic::modification {

enum class Mode { Node, Edge };
Mode mode_from_name(const std::string& name);
std::string mode_name(Mode m);

enum class Method { Exact, ApproxPacking, HeuristicConflict };
std::string method_name(Method m);

struct DeletionResult {
    recognition::GraphClass cls{};
    Mode mode{};
    Method method{};
    VertexSet vertex_solution;  // node mode
    EdgeSet edge_solution;      // edge mode
    int size = 0;
    int rounds = 0;                 // packing / conflict rounds
    bool certified = false;         // recognizer re-checked the residual
    std::optional<int> ratio_bound;  // 4 or 5 for pattern-class node packing
};

struct SearchOptions {
    int node_cap = 16;  // exact node search refuses beyond this n
    int edge_cap = 16;  // exact edge search refuses beyond this m
    Deadline deadline;
};

// Minimum vertex set whose removal lands in the class; lexicographically
// least among the minimums. Any recognized class is accepted.
DeletionResult exact_node_deletion(const Graph& g, recognition::GraphClass cls,
                                   const SearchOptions& opts = {});

// Minimum edge set; classes with edge-deletion formulas only
// (cograph, split, threshold, comparability).
DeletionResult exact_edge_deletion(const Graph& g, recognition::GraphClass cls,
                                   const SearchOptions& opts = {});

// Maximal vertex-disjoint violation packing; deletes every packed violation's
// vertices. Factor max-pattern-order (4, or 5 for split). Pattern classes only.
DeletionResult approx_node_deletion(const Graph& g, recognition::GraphClass cls);

// Rounds of packing + deleting the paper's deletable edges until the
// recognizer passes. No factor is claimed. Pattern classes only.
DeletionResult approx_edge_deletion(const Graph& g, recognition::GraphClass cls);

// Conflict-driven loop for comparability/interval/permutation: delete the
// witness vertices (pattern embedding) or the conflict edge's endpoints; in
// edge mode (comparability only) delete the conflicted edge itself.
DeletionResult heuristic_orientation_deletion(const Graph& g, recognition::GraphClass cls, Mode mode);

struct RatioAudit {
    int approx_size = 0;
    int exact_size = 0;
    double ratio = 1.0;  // 0/0 reported as 1
};
RatioAudit audit_ratio(const Graph& g, recognition::GraphClass cls, Mode mode,
                       const SearchOptions& opts = {});

bool supports(recognition::GraphClass cls, Mode mode, Method method);

}  // namespace graphlogic::modification
