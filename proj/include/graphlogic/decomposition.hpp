#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "graphlogic/graph.hpp"

namespace graphlogic::tw {

struct TreeDecomposition {
    int n = 0;  // vertex count of the decomposed graph
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;  // bag index pairs

    int width() const;
};

// Checks vertex coverage, edge coverage, running intersection, and that the
// bag graph is a tree. Throws InputError with the violated invariant.
void validate_decomposition(const Graph& g, const TreeDecomposition& td);

enum class Strategy { MinDegree, MinFill, ExactSmall };
Strategy strategy_from_name(const std::string& name);

struct DecomposeOptions {
    int exact_cap = 12;  // exact-small refuses beyond this many vertices
};

TreeDecomposition decompose(const Graph& g, Strategy strategy, const DecomposeOptions& opts = {});

// Decomposition from an explicit elimination order (used by all strategies
// and by the partial-2-tree generator).
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order);

// PACE .td format: "s td <#bags> <width+1> <n>", "b <id> <v...>", tree edges; 1-based on disk.
TreeDecomposition read_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td);
TreeDecomposition read_td_file(const std::string& path);
void write_td_file(const std::string& path, const TreeDecomposition& td);

// Rooted nice decomposition: leaf/introduce/forget/join nodes, empty root bag.
struct NiceNode {
    enum class Type { Leaf, Introduce, Forget, Join };
    Type type{};
    int vertex = -1;  // introduce/forget payload
    VertexSet bag;
    int left = -1;  // child indices into NiceDecomposition::nodes
    int right = -1;
};

struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
};

NiceDecomposition make_nice(const TreeDecomposition& td);
void validate_nice(const Graph& g, const NiceDecomposition& nd);

}  // namespace graphlogic::tw
