#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlogic/coloring.hpp"
#include "graphlogic/domination.hpp"
#include "graphlogic/generators.hpp"
#include "oracles.hpp"

using namespace graphlogic;
using namespace graphlogic::tw;

namespace {

NiceDecomposition nice_of(const Graph& g, Strategy s = Strategy::ExactSmall) {
    return make_nice(decompose(g, s));
}

}  // namespace

TEST_CASE("domination DP micro cases") {
    Graph star5 = star_graph(5);
    auto dom = solve_domination_dp(star5, nice_of(star5), DomVariant::Dom);
    CHECK(dom.feasible);
    CHECK(dom.size == 1);
    CHECK(dom.set == VertexSet{0});
    CHECK(dom.certified);

    Graph p4 = path_graph(4);
    auto total = solve_domination_dp(p4, nice_of(p4), DomVariant::TotalDom);
    CHECK(total.size == 2);
    CHECK(total.set == VertexSet{1, 2});

    Graph c6 = cycle_graph(6);
    auto conn = solve_domination_dp(c6, nice_of(c6), DomVariant::ConnectedDom);
    CHECK(conn.size == 4);

    // infeasible: total domination with an isolated vertex
    Graph iso = Graph::from_edges(3, {{0, 1}});
    auto bad = solve_domination_dp(iso, nice_of(iso), DomVariant::TotalDom);
    CHECK_FALSE(bad.feasible);

    // infeasible: connected domination of a disconnected graph
    Graph twok2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto disc = solve_domination_dp(twok2, nice_of(twok2), DomVariant::ConnectedDom);
    CHECK_FALSE(disc.feasible);

    CHECK_THROWS_AS(solve_domination_dp(p4, nice_of(p4), DomVariant::PerfectDom), InputError);
    // decomposition for a different graph is rejected
    CHECK_THROWS_AS(solve_domination_dp(star5, nice_of(p4), DomVariant::Dom), InputError);
}

TEST_CASE("domination exact micro cases") {
    auto perfect = solve_domination_exact(cycle_graph(4), DomVariant::PerfectDom);
    CHECK(perfect.size == 2);
    CHECK(perfect.set == VertexSet{0, 1});
    CHECK(perfect.certified);

    auto clique = solve_domination_exact(path_graph(4), DomVariant::CliqueDom);
    CHECK(clique.feasible);
    CHECK(clique.size == 2);
    CHECK(clique.set == VertexSet{1, 2});

    auto cyc = solve_domination_exact(path_graph(3), DomVariant::CycleDom);
    CHECK_FALSE(cyc.feasible);

    auto c5 = solve_domination_exact(cycle_graph(5), DomVariant::CycleDom);
    CHECK(c5.feasible);
    CHECK(c5.size == 5);

    CHECK_THROWS_AS(solve_domination_exact(Graph(21), DomVariant::Dom), CapExceeded);
}

TEST_CASE("exact solver agrees with subset-scan oracles on all variants") {
    for (uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = gnp_graph(1 + seed % 8, 0.4, seed);
        auto check = [&](DomVariant v, int expect) {
            auto r = solve_domination_exact(g, v);
            CHECK((r.feasible ? r.size : -1) == expect);
            if (r.feasible) CHECK(r.certified);
        };
        check(DomVariant::Dom, oracle::brute_min_dom(g));
        check(DomVariant::TotalDom, oracle::brute_min_total_dom(g));
        check(DomVariant::ConnectedDom, oracle::brute_min_connected_dom(g));
        check(DomVariant::TotalOuterConnectedDom, oracle::brute_min_total_outer_connected_dom(g));
        check(DomVariant::CycleDom, oracle::brute_min_cycle_dom(g));
        check(DomVariant::PerfectDom, oracle::brute_min_perfect_dom(g));
        check(DomVariant::CliqueDom, oracle::brute_min_clique_dom(g));
    }
}

TEST_CASE("DP equals exact oracle for dom/total/connected") {
    for (uint32_t seed = 0; seed < 80; ++seed) {
        Graph g = gnp_graph(1 + seed % 10, 0.35, 100 + seed);
        NiceDecomposition nd = nice_of(g);
        for (DomVariant v : {DomVariant::Dom, DomVariant::TotalDom, DomVariant::ConnectedDom}) {
            auto dp = solve_domination_dp(g, nd, v);
            auto ex = solve_domination_exact(g, v);
            CHECK(dp.feasible == ex.feasible);
            if (dp.feasible) CHECK(dp.size == ex.size);
        }
    }
}

TEST_CASE("DP works on heuristic decompositions too") {
    for (uint32_t seed = 0; seed < 30; ++seed) {
        Graph g = gnp_graph(9, 0.3, 700 + seed);
        auto dp = solve_domination_dp(g, nice_of(g, Strategy::MinFill), DomVariant::Dom);
        CHECK(dp.size == oracle::brute_min_dom(g));
    }
}

TEST_CASE("coloring DP micro cases") {
    Graph c5 = cycle_graph(5);
    CHECK_FALSE(solve_coloring_dp(c5, nice_of(c5), 2).feasible);
    auto three = solve_coloring_dp(c5, nice_of(c5), 3);
    CHECK(three.feasible);
    CHECK(three.certified);
    CHECK(minimize_k_coloring_dp(c5, nice_of(c5)).k == 3);

    Graph p6 = path_graph(6);
    CHECK(solve_coloring_dp(p6, nice_of(p6), 2).feasible);

    Graph k4 = complete_graph(4);
    CHECK(minimize_k_coloring_dp(k4, nice_of(k4)).k == 4);
}

TEST_CASE("coloring DP equals brute chromatic number") {
    for (uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = gnp_graph(1 + seed % 9, 0.4, 300 + seed);
        int brute = oracle::brute_min_k(g.vertex_count(), std::max(1, g.vertex_count()), [&](int k) {
            return oracle::exists_assignment(g.vertex_count(), k, [&](const std::vector<int>& col) {
                return oracle::proper_ok(g, col);
            });
        });
        if (g.vertex_count() == 0) continue;
        CHECK(minimize_k_coloring_dp(g, nice_of(g)).k == brute);
    }
}

TEST_CASE("exact coloring micro cases") {
    Graph p4 = path_graph(4);
    CHECK_FALSE(solve_coloring_exact(p4, ColoringVariant::Star, 2).feasible);
    auto star3 = solve_coloring_exact(p4, ColoringVariant::Star, 3);
    CHECK(star3.feasible);
    CHECK(star3.certified);
    CHECK(minimize_k_coloring_exact(p4, ColoringVariant::Star).k == 3);

    auto cd2 = solve_coloring_exact(p4, ColoringVariant::Cd, 2);
    CHECK(cd2.feasible);
    CHECK(minimize_k_coloring_exact(p4, ColoringVariant::Cd).k == 2);

    CHECK(minimize_k_coloring_exact(p4, ColoringVariant::Edge).k == 2);
    CHECK(minimize_k_coloring_exact(p4, ColoringVariant::Total).k == 3);

    Graph k13 = star_graph(4);
    CHECK_FALSE(solve_coloring_exact(k13, ColoringVariant::Rainbow, 2).feasible);
    CHECK(solve_coloring_exact(k13, ColoringVariant::Rainbow, 3).feasible);
    CHECK(minimize_k_coloring_exact(k13, ColoringVariant::Rainbow).k == 3);

    CHECK_FALSE(solve_coloring_exact(k13, ColoringVariant::Equitable, 2).feasible);
    CHECK(solve_coloring_exact(k13, ColoringVariant::Equitable, 3).feasible);
    CHECK(minimize_k_coloring_exact(k13, ColoringVariant::Equitable).k == 3);

    // rainbow needs a connected graph: infeasible at every k otherwise
    Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(minimize_k_coloring_exact(split, ColoringVariant::Rainbow).feasible);

    CHECK_THROWS_AS(solve_coloring_exact(complete_graph(11), ColoringVariant::Star, 3), CapExceeded);
    CHECK_THROWS_AS(solve_coloring_exact(complete_graph(6), ColoringVariant::Edge, 3), CapExceeded);
}

TEST_CASE("exact coloring agrees with the plain-loop oracles") {
    for (uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = gnp_graph(1 + seed % 6, 0.45, 500 + seed);
        const int n = g.vertex_count();
        const int m = g.edge_count();

        auto min_or_infeasible = [&](ColoringVariant v) {
            auto r = minimize_k_coloring_exact(g, v);
            return r.feasible ? r.k : -1;
        };

        CHECK(min_or_infeasible(ColoringVariant::Star) ==
              oracle::brute_min_k(n, std::max(1, n), [&](int k) {
                  return oracle::exists_assignment(n, k, [&](const std::vector<int>& col) {
                      return oracle::star_ok(g, col);
                  });
              }));
        CHECK(min_or_infeasible(ColoringVariant::Cd) ==
              oracle::brute_min_k(n, std::max(1, n), [&](int k) {
                  return oracle::exists_assignment(n, k, [&](const std::vector<int>& col) {
                      return oracle::cd_ok(g, k, col);
                  });
              }));
        CHECK(min_or_infeasible(ColoringVariant::Equitable) ==
              oracle::brute_min_k(n, std::max(1, n), [&](int k) {
                  return oracle::exists_assignment(n, k, [&](const std::vector<int>& col) {
                      return oracle::equitable_ok(g, k, col);
                  });
              }));
        if (m > 10) continue;  // edge-variant caps
        CHECK(min_or_infeasible(ColoringVariant::Edge) ==
              (m == 0 ? 0 : oracle::brute_min_k(m, m, [&](int k) {
                  return oracle::exists_assignment(m, k, [&](const std::vector<int>& col) {
                      return oracle::edge_coloring_ok(g, col);
                  });
              })));
        int rainbow_expect = -1;
        if (m == 0 && n <= 1) rainbow_expect = 0;
        if (m > 0)
            rainbow_expect = oracle::brute_min_k(m, m, [&](int k) {
                return oracle::exists_assignment(m, k, [&](const std::vector<int>& col) {
                    return oracle::rainbow_ok(g, col);
                });
            });
        auto rb = minimize_k_coloring_exact(g, ColoringVariant::Rainbow);
        CHECK((rb.feasible ? rb.k : -1) == rainbow_expect);
        CHECK(min_or_infeasible(ColoringVariant::Total) ==
              oracle::brute_min_k(n + m, std::max(1, n + m), [&](int k) {
                  return oracle::exists_assignment(n + m, k, [&](const std::vector<int>& col) {
                      return oracle::total_ok(g, col);
                  });
              }));
    }
}

TEST_CASE("solver outputs are deterministic") {
    Graph g = gnp_graph(8, 0.4, 77);
    NiceDecomposition nd = nice_of(g);
    CHECK(solve_domination_dp(g, nd, DomVariant::Dom).set ==
          solve_domination_dp(g, nd, DomVariant::Dom).set);
    CHECK(solve_domination_exact(g, DomVariant::Dom).set ==
          solve_domination_exact(g, DomVariant::Dom).set);
    auto a = minimize_k_coloring_exact(g, ColoringVariant::Cd);
    auto b = minimize_k_coloring_exact(g, ColoringVariant::Cd);
    CHECK(a.vertex_colors == b.vertex_colors);
}

TEST_CASE("scaling smoke test on a partial 2-tree") {
    auto [g, td] = partial_two_tree(300, 9);
    NiceDecomposition nd = make_nice(td);
    auto r = solve_domination_dp(g, nd, DomVariant::Dom);
    CHECK(r.feasible);
    CHECK(r.certified);
    CHECK(r.size == static_cast<int>(r.set.size()));
}
