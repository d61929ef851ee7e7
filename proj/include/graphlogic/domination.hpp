#pragma once

#include <string>

#include "graphlogic/decomposition.hpp"
#include "graphlogic/graph.hpp"

namespace graphlogic::tw {

enum class DomVariant {
    Dom,
    TotalDom,
    ConnectedDom,
    TotalOuterConnectedDom,
    CycleDom,
    PerfectDom,
    CliqueDom,
};
DomVariant dom_variant_from_name(const std::string& name);
std::string dom_variant_name(DomVariant v);
// the variants with a dynamic-programming solver
bool dom_variant_has_dp(DomVariant v);

struct DominationResult {
    DomVariant variant{};
    bool feasible = false;
    VertexSet set;
    int size = 0;
    bool certified = false;  // logic-engine predicate re-checked the set
};

// Bottom-up DP over a nice decomposition (dom, total_dom, connected_dom).
DominationResult solve_domination_dp(const Graph& g, const NiceDecomposition& nd, DomVariant variant);

struct ExactSolveOptions {
    int cap = 20;  // subset enumeration refused beyond this n
    Deadline deadline;
};

// Increasing-size subset enumeration for all seven variants.
DominationResult solve_domination_exact(const Graph& g, DomVariant variant,
                                        const ExactSolveOptions& opts = {});

// Direct predicate checks (shared by the exact solver and tests).
bool dominates(const Graph& g, const VertexSet& s);
bool satisfies_dom_variant(const Graph& g, DomVariant variant, const VertexSet& s);

}  // namespace graphlogic::tw
