#include "graphlogic/catalog.hpp"

#include <map>
#include <sstream>

namespace graphlogic::logic {

namespace {

// clang-format off
const std::map<std::string, std::string>& table() {
    static const std::map<std::string, std::string> t = {
        {"min_vc",
         "forall x. forall y. E(x,y) -> (S(x) | S(y))"},
        {"dom",
         "forall x. exists y. S(x) | (S(y) & E(x,y))"},
        {"total_dom",
         "forall x. exists y. S(y) & E(x,y)"},
        {"connected_dom",
         "(forall x. exists y. S(x) | (S(y) & E(x,y))) & connected(S)"},
        {"total_outer_connected_dom",
         "(forall x. exists y. S(y) & E(x,y)) & co_connected(S)"},
        {"cycle_dom",
         "(forall x. exists y. S(x) | (S(y) & E(x,y))) & cycle(S)"},
        {"perfect_dom",
         "forall x. !S(x) -> (exists y. S(y) & E(x,y) & (forall z. (S(z) & E(x,z)) -> z = y))"},
        {"clique_dom",
         "(forall x. exists y. S(x) | (S(y) & E(x,y)))"
         " & (forall x. forall y. (S(x) & S(y) & x != y) -> E(x,y))"},
        {"connectedness",
         "connected(S)"},
        {"chordal",
         "no_induced_cycle_above(3)"},
        {"chordal_bipartite",
         "(exists R subset V. forall x. forall y. E(x,y) -> (member(x,R) <-> !member(y,R)))"
         " & no_induced_cycle_above(4)"},
        {"cograph_node_del",
         "forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & !E(x1,x3) & !E(x1,x4) & !E(x2,x4))"
         " -> (S(x1) | S(x2) | S(x3) | S(x4))"},
        {"cograph_edge_del",
         "forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & !E(x1,x3) & !E(x1,x4) & !E(x2,x4))"
         " -> (S(x1,x2) | S(x2,x3) | S(x3,x4))"},
        {"split_node_del",
         "(forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x3) & E(x2,x4) & !E(x3,x4) & !E(x1,x2) & !E(x1,x4) & !E(x2,x3))"
         " -> (S(x1) | S(x2) | S(x3) | S(x4)))"
         " & (forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & E(x1,x4) & !E(x1,x3) & !E(x2,x4) & x1 != x3 & x2 != x4)"
         " -> (S(x1) | S(x2) | S(x3) | S(x4)))"
         " & (forall x1. forall x2. forall x3. forall x4. forall x5."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & E(x4,x5) & E(x1,x5)"
         " & !E(x1,x3) & !E(x1,x4) & !E(x2,x4) & !E(x2,x5) & !E(x3,x5))"
         " -> (S(x1) | S(x2) | S(x3) | S(x4) | S(x5)))"},
        {"split_edge_del",
         "(forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x3) & E(x2,x4) & !E(x3,x4) & !E(x1,x2) & !E(x1,x4) & !E(x2,x3))"
         " -> (S(x1,x3) | S(x2,x4)))"
         " & (forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & E(x1,x4) & !E(x1,x3) & !E(x2,x4) & x1 != x3 & x2 != x4)"
         " -> (S(x1,x2) | S(x2,x3) | S(x3,x4) | S(x1,x4)))"
         " & (forall x1. forall x2. forall x3. forall x4. forall x5."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & E(x4,x5) & E(x1,x5)"
         " & !E(x1,x3) & !E(x1,x4) & !E(x2,x4) & !E(x2,x5) & !E(x3,x5))"
         " -> (S(x1,x2) | S(x2,x3) | S(x3,x4) | S(x4,x5) | S(x1,x5)))"},
        {"threshold_node_del",
         "(forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x3) & E(x2,x4) & !E(x3,x4) & !E(x1,x2) & !E(x1,x4) & !E(x2,x3))"
         " -> (S(x1) | S(x2) | S(x3) | S(x4)))"
         " & (forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & E(x1,x4) & !E(x1,x3) & !E(x2,x4) & x1 != x3 & x2 != x4)"
         " -> (S(x1) | S(x2) | S(x3) | S(x4)))"
         " & (forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & !E(x1,x3) & !E(x1,x4) & !E(x2,x4))"
         " -> (S(x1) | S(x2) | S(x3) | S(x4)))"},
        {"threshold_edge_del",
         "(forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x3) & E(x2,x4) & !E(x3,x4) & !E(x1,x2) & !E(x1,x4) & !E(x2,x3))"
         " -> (S(x1,x3) | S(x2,x4)))"
         " & (forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & E(x1,x4) & !E(x1,x3) & !E(x2,x4) & x1 != x3 & x2 != x4)"
         " -> (S(x1,x2) | S(x2,x3) | S(x3,x4) | S(x1,x4)))"
         " & (forall x1. forall x2. forall x3. forall x4."
         " (E(x1,x2) & E(x2,x3) & E(x3,x4) & !E(x1,x3) & !E(x1,x4) & !E(x2,x4))"
         " -> (S(x1,x2) | S(x2,x3) | S(x3,x4)))"},
        {"comparability_node_del",
         "with orientation O."
         " (forall x. forall y. E(x,y) -> ((O(x,y) & !O(y,x)) | (O(y,x) & !O(x,y))))"
         " & (forall x. forall y. forall z. (O(x,y) & O(y,z) & !O(x,z)) -> (S(x) | S(y) | S(z)))"},
        {"comparability_edge_del",
         "with orientation O."
         " (forall x. forall y. E(x,y) -> ((O(x,y) & !O(y,x)) | (O(y,x) & !O(x,y))))"
         " & (forall x. forall y. forall z. (O(x,y) & O(y,z) & !O(x,z)) -> (S(x,y) | S(y,z)))"},
        {"interval_node_del",
         "with orientation O."
         " (forall x. forall y. forall z. forall w."
         " (E(x,y) & E(y,z) & E(z,w) & E(x,w) & !E(x,z) & !E(y,w) & x != z & y != w)"
         " -> (S(x) | S(y) | S(z) | S(w)))"
         " & (forall x. forall y. (!E(x,y) & x != y) -> ((O(x,y) & !O(y,x)) | (O(y,x) & !O(x,y))))"
         " & (forall x. forall y. forall z. (O(x,y) & O(y,z) & !O(x,z)) -> (S(x) | S(y) | S(z)))"},
        {"permutation_node_del",
         "with orientation O1, O2."
         " (forall x. forall y. E(x,y) -> ((O1(x,y) & !O1(y,x)) | (O1(y,x) & !O1(x,y))))"
         " & (forall x. forall y. forall z. (O1(x,y) & O1(y,z) & !O1(x,z)) -> (S(x) | S(y) | S(z)))"
         " & (forall x. forall y. (!E(x,y) & x != y) -> ((O2(x,y) & !O2(y,x)) | (O2(y,x) & !O2(x,y))))"
         " & (forall x. forall y. forall z. (O2(x,y) & O2(y,z) & !O2(x,z)) -> (S(x) | S(y) | S(z)))"},
    };
    return t;
}
// clang-format on

std::string class_name(const char* prefix, int i) { return prefix + std::to_string(i); }

// (X1(a) & X1(b)) | ... | (Xk(a) & Xk(b))
std::string same_class(const char* prefix, int k, const std::string& a, const std::string& b) {
    std::ostringstream out;
    for (int i = 1; i <= k; ++i) {
        if (i > 1) out << " | ";
        out << '(' << class_name(prefix, i) << '(' << a << ") & " << class_name(prefix, i) << '('
            << b << "))";
    }
    return out.str();
}

std::string vertex_coverage(int k) {
    std::ostringstream out;
    out << "(forall x. ";
    for (int i = 1; i <= k; ++i) out << (i > 1 ? " | " : "") << class_name("C", i) << "(x)";
    out << ")";
    return out.str();
}

std::string edge_coverage(int k) {
    std::ostringstream out;
    out << "(forall x. forall y. E(x,y) -> (";
    for (int i = 1; i <= k; ++i) out << (i > 1 ? " | " : "") << class_name("T", i) << "(x,y)";
    out << "))";
    return out.str();
}

std::string proper_vertex(int k) {
    std::ostringstream out;
    out << vertex_coverage(k) << " & (forall x. forall y. E(x,y) -> (";
    for (int i = 1; i <= k; ++i) {
        if (i > 1) out << " & ";
        out << "!(" << class_name("C", i) << "(x) & " << class_name("C", i) << "(y))";
    }
    out << "))";
    return out.str();
}

std::string proper_edge(int k) {
    std::ostringstream out;
    out << edge_coverage(k)
        << " & (forall x. forall y. forall z. (E(x,y) & E(y,z) & x != z) -> (";
    for (int i = 1; i <= k; ++i) {
        if (i > 1) out << " & ";
        out << "!(" << class_name("T", i) << "(x,y) & " << class_name("T", i) << "(y,z))";
    }
    out << "))";
    return out.str();
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : table()) names.push_back(name);
    return names;
}

bool catalog_has(const std::string& name) { return table().count(name) != 0; }

const std::string& catalog_text(const std::string& name) {
    auto it = table().find(name);
    if (it == table().end()) throw InputError("unknown catalog formula '" + name + "'");
    return it->second;
}

Formula catalog_formula(const std::string& name) { return parse_formula(catalog_text(name)); }

std::vector<std::string> coloring_variant_names() {
    return {"proper", "star", "cd", "edge", "rainbow", "total", "equitable"};
}

std::string coloring_formula_text(const std::string& variant, int k) {
    if (k < 1) throw InputError("color count must be positive");
    std::ostringstream out;
    if (variant == "proper") {
        out << proper_vertex(k);
    } else if (variant == "star") {
        // every path on four vertices avoids the 2-color pattern c1=c3, c2=c4
        out << proper_vertex(k)
            << " & (forall x. forall y. forall z. forall w."
               " (E(x,y) & E(y,z) & E(z,w) & x != z & x != w & y != w) -> !(("
            << same_class("C", k, "x", "z") << ") & (" << same_class("C", k, "y", "w") << ")))";
    } else if (variant == "cd") {
        out << vertex_coverage(k);
        for (int i = 1; i <= k; ++i) {
            std::string ci = class_name("C", i);
            out << " & (forall x. forall y. (" << ci << "(x) & " << ci << "(y) & x != y) -> !E(x,y))"
                << " & (exists u. (member(u," << ci << ") & |" << ci << "| = 1)"
                << " | (!member(u," << ci << ") & (forall a. member(a," << ci << ") -> E(u,a))))";
        }
    } else if (variant == "edge") {
        out << proper_edge(k);
    } else if (variant == "rainbow") {
        out << edge_coverage(k) << " & rainbow_connected(";
        for (int i = 1; i <= k; ++i) out << (i > 1 ? "," : "") << class_name("T", i);
        out << ")";
    } else if (variant == "total") {
        out << vertex_coverage(k) << " & " << proper_edge(k)
            << " & (forall x. forall y. E(x,y) -> (";
        for (int i = 1; i <= k; ++i) {
            if (i > 1) out << " & ";
            out << "!(" << class_name("C", i) << "(x) & " << class_name("C", i) << "(y))";
        }
        out << ")) & (forall x. forall y. E(x,y) -> (";
        for (int i = 1; i <= k; ++i) {
            if (i > 1) out << " & ";
            out << "!(" << class_name("T", i) << "(x,y) & (" << class_name("C", i) << "(x) | "
                << class_name("C", i) << "(y)))";
        }
        out << "))";
    } else if (variant == "equitable") {
        out << proper_vertex(k);
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                out << " & abs(|" << class_name("C", i) << "| - |" << class_name("C", j)
                    << "|) <= 1";
    } else {
        throw InputError("unknown coloring variant '" + variant + "'");
    }
    return out.str();
}

Formula coloring_formula(const std::string& variant, int k) {
    return parse_formula(coloring_formula_text(variant, k));
}

}  // namespace graphlogic::logic
