#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "graphlogic/decomposition.hpp"
#include "graphlogic/generators.hpp"

using namespace graphlogic;
using namespace graphlogic::tw;

TEST_CASE("decompose micro widths") {
    CHECK(decompose(path_graph(5), Strategy::MinDegree).width() == 1);
    CHECK(decompose(path_graph(5), Strategy::ExactSmall).width() == 1);
    CHECK(decompose(cycle_graph(5), Strategy::ExactSmall).width() == 2);
    for (Strategy s : {Strategy::MinDegree, Strategy::MinFill, Strategy::ExactSmall})
        CHECK(decompose(complete_graph(4), s).width() == 3);
    CHECK(decompose(Graph(0), Strategy::MinFill).width() <= 0);
    CHECK(decompose(Graph(3), Strategy::MinDegree).width() == 0);
    CHECK_THROWS_AS(decompose(Graph(13), Strategy::ExactSmall), CapExceeded);
}

TEST_CASE("every emitted decomposition passes the checker") {
    for (uint32_t seed = 0; seed < 150; ++seed) {
        Graph g = gnp_graph(1 + seed % 12, 0.35, seed);
        for (Strategy s : {Strategy::MinDegree, Strategy::MinFill}) {
            TreeDecomposition td = decompose(g, s);
            validate_decomposition(g, td);  // throws on violation
        }
        if (g.vertex_count() <= 10) {
            TreeDecomposition td = decompose(g, Strategy::ExactSmall);
            validate_decomposition(g, td);
        }
    }
}

TEST_CASE("heuristic width never beats exact width") {
    for (uint32_t seed = 0; seed < 80; ++seed) {
        Graph g = gnp_graph(3 + seed % 8, 0.4, 100 + seed);
        int exact = decompose(g, Strategy::ExactSmall).width();
        CHECK(decompose(g, Strategy::MinDegree).width() >= exact);
        CHECK(decompose(g, Strategy::MinFill).width() >= exact);
    }
}

TEST_CASE("checker rejects broken decompositions") {
    Graph p3 = path_graph(3);
    TreeDecomposition td;
    td.n = 3;
    td.bags = {{0, 1}, {1, 2}};
    td.tree_edges = {{0, 1}};
    validate_decomposition(p3, td);  // sane

    TreeDecomposition missing_vertex = td;
    missing_vertex.bags = {{0, 1}, {1}};
    CHECK_THROWS_AS(validate_decomposition(p3, missing_vertex), InputError);

    TreeDecomposition missing_edge = td;
    missing_edge.bags = {{0, 1}, {2}};
    CHECK_THROWS_AS(validate_decomposition(p3, missing_edge), InputError);

    TreeDecomposition broken_ri;
    broken_ri.n = 3;
    broken_ri.bags = {{0, 1}, {1, 2}, {0}};
    broken_ri.tree_edges = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(validate_decomposition(p3, broken_ri), InputError);

    TreeDecomposition cycle = td;
    cycle.tree_edges = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(validate_decomposition(p3, cycle), InputError);
}

TEST_CASE("make_nice structure on K3") {
    TreeDecomposition td;
    td.n = 3;
    td.bags = {{0, 1, 2}};
    NiceDecomposition nd = make_nice(td);
    validate_nice(complete_graph(3), nd);
    CHECK(nd.width() == 2);
    int leafs = 0, intro = 0, forget = 0, join = 0;
    for (const auto& node : nd.nodes) {
        switch (node.type) {
            case NiceNode::Type::Leaf: ++leafs; break;
            case NiceNode::Type::Introduce: ++intro; break;
            case NiceNode::Type::Forget: ++forget; break;
            case NiceNode::Type::Join: ++join; break;
        }
    }
    CHECK(leafs == 1);
    CHECK(intro == 3);
    CHECK(forget == 3);
    CHECK(join == 0);
}

TEST_CASE("make_nice preserves width and stays small") {
    for (uint32_t seed = 0; seed < 100; ++seed) {
        Graph g = gnp_graph(1 + seed % 11, 0.4, 200 + seed);
        TreeDecomposition td = decompose(g, Strategy::MinFill);
        NiceDecomposition nd = make_nice(td);
        validate_nice(g, nd);
        CHECK(nd.width() == td.width());
        int n = std::max(1, g.vertex_count());
        CHECK(static_cast<int>(nd.nodes.size()) <= 8 * n * (td.width() + 2));
    }
}

TEST_CASE("pace td round trip") {
    Graph g = gnp_graph(9, 0.4, 5);
    TreeDecomposition td = decompose(g, Strategy::MinFill);
    std::ostringstream out;
    write_td(out, td);
    std::istringstream in(out.str());
    TreeDecomposition back = read_td(in);
    CHECK(back.n == td.n);
    CHECK(back.bags == td.bags);
    CHECK(back.tree_edges == td.tree_edges);
    validate_decomposition(g, back);

    std::istringstream bad1("s td 1 1 2\nb 1 1 5\n");
    CHECK_THROWS_AS(read_td(bad1), ParseError);
    std::istringstream bad2("b 1 1\n");
    CHECK_THROWS_AS(read_td(bad2), ParseError);
}

TEST_CASE("partial 2-trees come with valid width-2 decompositions") {
    for (uint32_t seed = 0; seed < 40; ++seed) {
        auto [g, td] = partial_two_tree(3 + seed % 40, seed);
        CHECK(td.width() <= 2);
        validate_decomposition(g, td);
        NiceDecomposition nd = make_nice(td);
        validate_nice(g, nd);
    }
}
