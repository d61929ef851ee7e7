#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlogic/catalog.hpp"
#include "graphlogic/evaluator.hpp"
#include "graphlogic/generators.hpp"
#include "graphlogic/modification.hpp"
#include "oracles.hpp"

using namespace graphlogic;
using namespace graphlogic::modification;
using recognition::GraphClass;

TEST_CASE("exact node deletion micro cases") {
    auto p4 = exact_node_deletion(path_graph(4), GraphClass::Cograph);
    CHECK(p4.size == 1);
    CHECK(p4.vertex_solution == VertexSet{0});
    CHECK(p4.certified);

    auto c5 = exact_node_deletion(cycle_graph(5), GraphClass::Split);
    CHECK(c5.size == 1);

    auto k3 = exact_node_deletion(complete_graph(3), GraphClass::Cograph);
    CHECK(k3.size == 0);
    CHECK(k3.vertex_solution.empty());

    CHECK_THROWS_AS(exact_node_deletion(Graph(20), GraphClass::Cograph), CapExceeded);
}

TEST_CASE("exact node deletion equals brute-force over the pattern oracles") {
    for (uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = gnp_graph(1 + seed % 7, 0.5, seed);
        CHECK(exact_node_deletion(g, GraphClass::Cograph).size ==
              oracle::brute_min_node_deletion(g, oracle::brute_is_cograph));
        CHECK(exact_node_deletion(g, GraphClass::Split).size ==
              oracle::brute_min_node_deletion(g, oracle::brute_is_split));
        CHECK(exact_node_deletion(g, GraphClass::Threshold).size ==
              oracle::brute_min_node_deletion(g, oracle::brute_is_threshold));
    }
}

TEST_CASE("exact edge deletion micro cases") {
    auto p4 = exact_edge_deletion(path_graph(4), GraphClass::Cograph);
    CHECK(p4.size == 1);

    auto c4 = exact_edge_deletion(cycle_graph(4), GraphClass::Split);
    CHECK(c4.size == 1);

    auto star = exact_edge_deletion(star_graph(4), GraphClass::Threshold);
    CHECK(star.size == 0);

    CHECK_THROWS_AS(exact_edge_deletion(path_graph(4), GraphClass::Interval), InputError);
    CHECK_THROWS_AS(exact_edge_deletion(complete_graph(7), GraphClass::Cograph), CapExceeded);
}

TEST_CASE("approx node deletion: packing behavior") {
    auto p4 = approx_node_deletion(path_graph(4), GraphClass::Cograph);
    CHECK(p4.vertex_solution == VertexSet{0, 1, 2, 3});
    CHECK(p4.size == 4);
    CHECK(p4.ratio_bound == 4);
    CHECK(p4.certified);

    auto k3 = approx_node_deletion(complete_graph(3), GraphClass::Threshold);
    CHECK(k3.size == 0);
    CHECK(k3.rounds == 0);

    auto p7 = approx_node_deletion(path_graph(7), GraphClass::Cograph);
    auto p7_exact = exact_node_deletion(path_graph(7), GraphClass::Cograph);
    CHECK(p7.certified);
    CHECK(p7.size <= 4 * p7_exact.size);

    CHECK(approx_node_deletion(cycle_graph(5), GraphClass::Split).ratio_bound == 5);
    CHECK_THROWS_AS(approx_node_deletion(path_graph(4), GraphClass::Interval), InputError);
}

TEST_CASE("approx edge deletion micro cases") {
    auto p4 = approx_edge_deletion(path_graph(4), GraphClass::Cograph);
    CHECK(p4.size == 3);  // all three path edges of the only P4
    CHECK(p4.certified);
    CHECK_FALSE(p4.ratio_bound.has_value());
    auto p4_exact = exact_edge_deletion(path_graph(4), GraphClass::Cograph);
    CHECK(p4_exact.size == 1);  // observed ratio 3 on this instance

    auto c4 = approx_edge_deletion(cycle_graph(4), GraphClass::Split);
    CHECK(c4.rounds == 1);
    CHECK(c4.size == 4);  // the paper's clause lists all four cycle edges
    CHECK(c4.certified);

    CHECK(approx_edge_deletion(complete_graph(3), GraphClass::Split).size == 0);
}

TEST_CASE("approx edge deletion always terminates certified") {
    for (uint32_t seed = 0; seed < 120; ++seed) {
        Graph g = gnp_graph(1 + seed % 8, 0.5, 100 + seed);
        for (GraphClass c : {GraphClass::Cograph, GraphClass::Split, GraphClass::Threshold}) {
            auto r = approx_edge_deletion(g, c);
            CHECK(r.certified);
        }
    }
}

TEST_CASE("heuristic orientation deletion") {
    auto c5 = heuristic_orientation_deletion(cycle_graph(5), GraphClass::Comparability, Mode::Node);
    CHECK(c5.certified);
    CHECK(c5.size <= 2);
    CHECK(exact_node_deletion(cycle_graph(5), GraphClass::Comparability).size == 1);
    CHECK_FALSE(c5.ratio_bound.has_value());

    auto c4 = heuristic_orientation_deletion(cycle_graph(4), GraphClass::Interval, Mode::Node);
    CHECK(c4.certified);
    CHECK(c4.size <= 4);
    CHECK(exact_node_deletion(cycle_graph(4), GraphClass::Interval).size == 1);

    auto comp = heuristic_orientation_deletion(cycle_graph(4), GraphClass::Comparability, Mode::Node);
    CHECK(comp.size == 0);  // C4 is bipartite, hence comparability

    auto edge = heuristic_orientation_deletion(cycle_graph(5), GraphClass::Comparability, Mode::Edge);
    CHECK(edge.certified);
    CHECK(edge.size >= 1);

    CHECK_THROWS_AS(heuristic_orientation_deletion(path_graph(4), GraphClass::Cograph, Mode::Node),
                    InputError);
    CHECK_THROWS_AS(heuristic_orientation_deletion(path_graph(4), GraphClass::Interval, Mode::Edge),
                    InputError);
}

TEST_CASE("heuristics terminate certified on random graphs") {
    for (uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = gnp_graph(1 + seed % 8, 0.45, 200 + seed);
        for (GraphClass c : {GraphClass::Comparability, GraphClass::Interval, GraphClass::Permutation})
            CHECK(heuristic_orientation_deletion(g, c, Mode::Node).certified);
        CHECK(heuristic_orientation_deletion(g, GraphClass::Comparability, Mode::Edge).certified);
    }
}

TEST_CASE("audit ratios") {
    auto p4 = audit_ratio(path_graph(4), GraphClass::Cograph, Mode::Node);
    CHECK(p4.approx_size == 4);
    CHECK(p4.exact_size == 1);
    CHECK(p4.ratio == doctest::Approx(4.0));

    auto k3 = audit_ratio(complete_graph(3), GraphClass::Cograph, Mode::Node);
    CHECK(k3.approx_size == 0);
    CHECK(k3.exact_size == 0);
    CHECK(k3.ratio == doctest::Approx(1.0));
}

TEST_CASE("packing bound holds on random connected graphs") {
    int audited = 0;
    uint32_t seed = 0;
    while (audited < 60) {
        Graph g = gnp_graph(3 + seed % 7, 0.45, 300 + seed);
        ++seed;
        if (!is_connected(g)) continue;
        ++audited;
        for (GraphClass c : {GraphClass::Cograph, GraphClass::Split, GraphClass::Threshold}) {
            auto a = audit_ratio(g, c, Mode::Node);
            double bound = c == GraphClass::Split ? 5.0 : 4.0;
            CHECK(a.ratio <= bound);
        }
    }
}

TEST_CASE("approx node solutions satisfy the deletion formulas") {
    using logic::catalog_formula;
    using logic::evaluate;
    using logic::Structure;
    const std::map<GraphClass, std::string> formula_of = {
        {GraphClass::Cograph, "cograph_node_del"},
        {GraphClass::Split, "split_node_del"},
        {GraphClass::Threshold, "threshold_node_del"},
    };
    for (uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = gnp_graph(4 + seed % 4, 0.5, 400 + seed);
        for (const auto& [cls, fname] : formula_of) {
            auto r = approx_node_deletion(g, cls);
            Structure m;
            m.graph = &g;
            m.vertex_sets["S"] = r.vertex_solution;
            CHECK(evaluate(catalog_formula(fname), m));
        }
    }
}

TEST_CASE("edge solutions satisfy the edge-deletion formulas on round one") {
    // the residual is certified by iteration; the round-1 hitting property is
    // exactly the paper formula on the original graph
    using logic::catalog_formula;
    using logic::evaluate;
    using logic::Structure;
    for (uint32_t seed = 0; seed < 30; ++seed) {
        Graph g = gnp_graph(5, 0.5, 800 + seed);
        auto r = approx_edge_deletion(g, GraphClass::Cograph);
        Structure m;
        m.graph = &g;
        m.edge_sets["S"] = r.edge_solution;
        CHECK(evaluate(catalog_formula("cograph_edge_del"), m));
    }
}

TEST_CASE("exact node deletion is monotone under induced subgraphs") {
    Rng rng(17);
    for (uint32_t seed = 0; seed < 20; ++seed) {
        Graph g = gnp_graph(5 + seed % 3, 0.5, 600 + seed);
        VertexSet vs;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng.below(2)) vs.push_back(v);
        Graph h = induced_subgraph(g, vs);
        for (GraphClass c : {GraphClass::Cograph, GraphClass::Split, GraphClass::Threshold})
            CHECK(exact_node_deletion(h, c).size <= exact_node_deletion(g, c).size);
    }
}

TEST_CASE("determinism of all solvers") {
    Graph g = gnp_graph(7, 0.5, 42);
    for (GraphClass c : {GraphClass::Cograph, GraphClass::Split, GraphClass::Threshold}) {
        CHECK(exact_node_deletion(g, c).vertex_solution == exact_node_deletion(g, c).vertex_solution);
        CHECK(approx_node_deletion(g, c).vertex_solution == approx_node_deletion(g, c).vertex_solution);
        CHECK(approx_edge_deletion(g, c).edge_solution == approx_edge_deletion(g, c).edge_solution);
    }
    CHECK(heuristic_orientation_deletion(g, GraphClass::Interval, Mode::Node).vertex_solution ==
          heuristic_orientation_deletion(g, GraphClass::Interval, Mode::Node).vertex_solution);
}

TEST_CASE("deadline cancels long searches") {
    SearchOptions opts;
    opts.node_cap = 16;
    opts.deadline = Deadline::after_seconds(0.0);
    Graph g = gnp_graph(14, 0.5, 3);
    CHECK_THROWS_AS(exact_node_deletion(g, GraphClass::Cograph, opts), DeadlineExceeded);
}
