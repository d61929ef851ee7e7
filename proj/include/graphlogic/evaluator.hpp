#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphlogic/formula.hpp"
#include "graphlogic/graph.hpp"

namespace graphlogic::logic {

// A graph together with bindings for a formula's free variables.
// Immutable during evaluation; evaluation is pure.
struct Structure {
    const Graph* graph = nullptr;
    std::map<std::string, int> vertex_vars;
    std::map<std::string, Edge> edge_vars;
    std::map<std::string, VertexSet> vertex_sets;
    std::map<std::string, EdgeSet> edge_sets;
    // ordered pairs, at most one direction per pair
    std::map<std::string, std::vector<std::pair<int, int>>> orientations;
};

struct EvalOptions {
    // quantifying over vertex subsets enumerates 2^n bindings; refuse beyond
    int set_quantifier_cap = 16;
    // no_induced_cycle_above enumerates vertex subsets as well
    int cycle_scan_cap = 22;
    Deadline deadline;
};

bool evaluate(const Formula& f, const Structure& m, const EvalOptions& opts = {});

struct MinSetOptions {
    int vertex_cap = 20;  // refuse subsets-of-V search beyond this n
    int edge_cap = 20;    // refuse subsets-of-E search beyond this m
    EvalOptions eval;
};

struct MinSetResult {
    bool satisfiable = false;
    VarSort sort = VarSort::VertexSet;
    VertexSet vertices;  // valid when sort == VertexSet and satisfiable
    EdgeSet edges;       // valid when sort == EdgeSet and satisfiable
    int size = 0;
};

// Minimum-cardinality binding for the formula's single free set variable,
// lexicographically least among the minimums. Formulas with free orientation
// symbols are refused (that minimization lives outside this fragment).
MinSetResult min_satisfying_set(const Formula& f, const Graph& g, const MinSetOptions& opts = {});

}  // namespace graphlogic::logic
