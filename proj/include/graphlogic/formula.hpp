#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphlogic/errors.hpp"

namespace graphlogic::logic {

enum class VarSort { Vertex, Edge, VertexSet, EdgeSet, Orientation };
std::string sort_name(VarSort s);

enum class Cmp { Le, Lt, Eq, Ge, Gt, Ne };

enum class Op {
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Forall,  // var/var_sort bind children[0]
    Exists,
    Adjacent,     // E(terms[0], terms[1])
    Equal,        // terms[0] = terms[1]
    NotEqual,     // terms[0] != terms[1]
    Member,       // set_names[0] contains terms[0] (vertex or edge variable)
    PairMember,   // set_names[0] contains the pair (terms[0], terms[1]);
                  // unordered for edge sets, ordered for orientations
    Card,         // |set_names[0]| cmp int_arg
    CardDiffLe1,  // abs(|set_names[0]| - |set_names[1]|) <= 1
    // built-in semantic predicates (path-based notions the FO/MSO fragment
    // cannot spell out with bounded formulas)
    Connected,            // vertices of set_names[0] induce a connected subgraph
    CoConnected,          // vertices outside set_names[0] induce a connected subgraph
    InducesCycle,         // set_names[0] induces a single cycle
    RainbowConnected,     // set_names partition E into colors; all vertex pairs rainbow-linked
    NoInducedCycleAbove,  // the graph has no induced cycle longer than int_arg
};

struct Node {
    Op op{};
    std::vector<std::unique_ptr<Node>> children;
    std::string var;                     // quantified variable name
    VarSort var_sort = VarSort::Vertex;  // its sort
    std::vector<std::string> terms;
    std::vector<std::string> set_names;
    Cmp cmp = Cmp::Le;
    int int_arg = 0;
};

struct FreeVar {
    std::string name;
    VarSort sort;
    friend bool operator==(const FreeVar&, const FreeVar&) = default;
};

// Immutable, shareable formula with resolved scopes.
class Formula {
public:
    const Node& root() const { return *root_; }
    // Free variables sorted by name.
    const std::vector<FreeVar>& free_vars() const { return free_; }
    std::optional<FreeVar> free_var(const std::string& name) const;
    std::vector<FreeVar> free_set_vars() const;  // VertexSet/EdgeSet only

    std::string unparse() const;

private:
    friend Formula parse_formula(const std::string&, const std::vector<FreeVar>&);
    std::shared_ptr<const Node> root_;
    std::vector<FreeVar> free_;
};

bool same_ast(const Formula& a, const Formula& b);

// Parses the concrete syntax:
//   formula   := iff ; iff := imp ('<->' imp)* ; imp := or ('->' imp)?
//   or/and    := chains with '|' and '&' ; '!' negates
//   quantified:= ('forall'|'exists') binder '.' formula
//   binder    := x | e in E | X subset V | X subset E
//   atoms     := E(x,y), x = y, x != y, S(x), S(x,y), member(t, X),
//                |X| <= k (and <,=,>=,>,!=), abs(|X| - |Y|) <= 1,
//                connected(X), co_connected(X), cycle(X),
//                rainbow_connected(T1,...,Tk), no_induced_cycle_above(k),
//                true, false
// An optional leading header "with orientation O1, O2." declares free binary
// orientation symbols usable as O(x,y). Identifiers applied as sets but never
// quantified become free set variables; their sort is inferred from use.
// Bare element variables must be bound by a quantifier or pre-declared via
// `declared_free`.
Formula parse_formula(const std::string& text, const std::vector<FreeVar>& declared_free = {});

}  // namespace graphlogic::logic
