#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphlogic/graph.hpp"

namespace graphlogic::recognition {

enum class GraphClass {
    Cograph,
    Split,
    Threshold,
    Comparability,
    Interval,
    Permutation,
    Chordal,
    ChordalBipartite,
};
GraphClass class_from_name(const std::string& name);
std::string class_name(GraphClass c);
std::vector<GraphClass> all_classes();
// classes characterized by a finite forbidden-pattern set
bool is_pattern_class(GraphClass c);
bool is_orientation_class(GraphClass c);

enum class PatternName { P4, TwoK2, C4, C5 };
std::string pattern_label(PatternName p);

struct ForbiddenPattern {
    PatternName name;
    int order;                // vertex count
    EdgeSet edges;            // on vertices 0..order-1
    EdgeSet deletable_edges;  // the edges the paper's edge-deletion clause names
};
const ForbiddenPattern& pattern(PatternName p);
const std::vector<PatternName>& class_patterns(GraphClass c);  // pattern classes only

// A concrete reason a graph is outside a class: a forbidden-pattern embedding,
// a transitive-orientation forcing conflict, or an induced long cycle.
struct Violation {
    enum class Kind { PatternEmbedding, TransitivityConflict };
    Kind kind{};
    // embedding order matching the pattern's labeling / conflict edge endpoints
    std::vector<int> vertices;
    std::string pattern;  // "P4", "2K2", "C4", "C5", holes "C6"...; empty for conflicts
    VertexSet hit_vertices;
    EdgeSet hit_edges;
    // for conflicts: the forcing steps leading to the doubly-oriented edge,
    // as directed pairs; in the complement when complement_conflict is set
    std::vector<std::pair<int, int>> forcing_chain;
    bool complement_conflict = false;
};

// Yields every induced embedding of the class's forbidden patterns, one
// canonical violation per vertex set, ordered by the sorted vertex tuple.
// The visitor returns false to stop early.
void for_each_violation(const Graph& g, GraphClass c, const std::function<bool(const Violation&)>& fn);
std::vector<Violation> enumerate_violations(const Graph& g, GraphClass c);

struct ClassDecision {
    bool member = false;
    std::optional<Violation> witness;  // present when member is false
};
ClassDecision is_in_class(const Graph& g, GraphClass c);

// Directed pairs over a graph's edges (or a complement's), one direction each.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(int n) : n_(n), dir_(static_cast<size_t>(n) * n, 0) {}

    int vertex_count() const { return n_; }
    void orient(int from, int to);
    bool has(int from, int to) const;
    // sorted directed pairs
    std::vector<std::pair<int, int>> pairs() const;

private:
    int n_ = 0;
    std::vector<char> dir_;
};

struct OrientationResult {
    bool is_comparability = false;
    Orientation orientation;          // valid when is_comparability
    std::optional<Violation> conflict;  // valid otherwise
};
// Forcing-based transitive orientation; on failure returns the forcing
// conflict with its chain.
OrientationResult transitive_orientation(const Graph& g);

struct TransitivityCheck {
    bool transitive = false;
    std::array<int, 3> violating_triple{-1, -1, -1};  // lexicographically least
};
// Requires o to orient exactly the edges of g (InputError otherwise).
TransitivityCheck verify_orientation_transitive(const Graph& g, const Orientation& o);

}  // namespace graphlogic::recognition
