#include "oracles.hpp"

#include "pendant_tc/closed_forms.hpp"
#include "pendant_tc/families.hpp"
#include "pendant_tc/solver.hpp"

#include <doctest.h>

using namespace pendant_tc;

TEST_CASE("complete graphs")
{
    for (int n = 3; n <= 6; ++n)
        for (int k = 3; k <= n; ++k) {
            const auto b = tau_complete(n, k);
            CHECK(b.kind == BoundKind::Exact);
            CHECK(b.rule == BoundRule::CompleteGraph);
            CHECK(b.value == oracle::global_tau(build(FamilySpec::complete(n)), k, oracle::naive_internal_tau));
        }
    CHECK_THROWS_AS(tau_complete(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(tau_complete(4, 5), std::invalid_argument);
}

TEST_CASE("complete bipartite graphs")
{
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; r + s <= 7; ++s)
            for (int k = 3; k <= std::min(4, r + s); ++k) {
                CAPTURE(r);
                CAPTURE(s);
                CAPTURE(k);
                const auto b = tau_complete_bipartite(r, s, k);
                CHECK(b.value == tau_complete_bipartite(s, r, k).value);
                CHECK(b.value ==
                      oracle::global_tau(build(FamilySpec::complete_bipartite(r, s)), k, oracle::naive_internal_tau));
            }
    CHECK_THROWS_AS(tau_complete_bipartite(0, 2, 3), std::invalid_argument);
}

TEST_CASE("complete multipartite bound")
{
    const std::vector<std::vector<int>> cases = {{2, 2, 2}, {1, 2, 2}, {1, 1, 3}, {2, 3}, {1, 1, 1, 2}, {2, 2, 3}};
    for (const auto &parts : cases)
        for (int k = 3; k <= 4; ++k) {
            const Graph g = build(FamilySpec::complete_multipartite(parts));
            if (k > g.order() || g.order() > 7)
                continue;
            CHECK(tau_multipartite_upper(parts, k).value >= tau_k(g, k).tau_k);
        }
    const std::vector<int> unsorted{3, 2};
    CHECK_THROWS_AS(tau_multipartite_upper(unsorted, 3), std::invalid_argument);
    const std::vector<int> single{4};
    CHECK_THROWS_AS(tau_multipartite_upper(single, 3), std::invalid_argument);
}

TEST_CASE("threshold graphs")
{
    // Every threshold graph on six vertices starting with an isolated vertex.
    for (unsigned code = 0; code < 32; ++code) {
        std::vector<ThresholdStep> steps{ThresholdStep::Isolated};
        for (int i = 0; i < 5; ++i)
            steps.push_back((code >> i) & 1U ? ThresholdStep::Dominating : ThresholdStep::Isolated);
        const Graph g = build_threshold(steps);
        for (int k = 3; k <= 5; ++k) {
            CAPTURE(code);
            CAPTURE(k);
            const int expected = oracle::global_tau(g, k, oracle::naive_internal_tau);
            CHECK(tau_threshold(min_degree(g), k).value == expected);
        }
    }
}

TEST_CASE("necessary bounds hold on every graph up to six vertices")
{
    for (int n = 3; n <= 6; ++n)
        for (const Graph &g : oracle::read_fixture("graphs_n" + std::to_string(n) + ".g6"))
            for (int k = 2; k <= n; ++k) {
                const auto bounds = necessary_upper_bounds(g, k);
                REQUIRE(bounds.size() == 4);
                CHECK(bounds[0].rule == BoundRule::MinDegree);
                CHECK(bounds[1].rule == BoundRule::Connectivity);
                CHECK(bounds[2].rule == BoundRule::OrderMinusK);
                CHECK(bounds[3].rule == BoundRule::BoundaryEdges);
                int truth = 0;
                if (k == 2) {
                    truth = n;
                    if (is_connected(g))
                        for (VertexMask s = 0; s <= g.vertices(); ++s)
                            if (popcount(s) == 2)
                                truth = std::min(truth, oracle::naive_internal_tau(g, s));
                    if (!is_connected(g))
                        truth = 0;
                }
                else {
                    truth = oracle::global_tau(g, k, oracle::naive_internal_tau);
                }
                CAPTURE(write_graph6(g));
                CAPTURE(k);
                for (const auto &b : bounds)
                    CHECK(b.value >= truth);
                CHECK(tightest(bounds) >= truth);
            }
}

TEST_CASE("the boundary bound falls back to sampling")
{
    const Graph g = build(FamilySpec::complete(8));
    BoundOptions sampled;
    sampled.exhaustive_limit = 10;
    sampled.samples = 50;
    const auto bounds = necessary_upper_bounds(g, 3, sampled);
    CHECK(bounds[3].detail.find("sampled") != std::string::npos);
    CHECK(bounds[3].value == (3 * 5) / 3);
    CHECK(necessary_upper_bounds(g, 3)[3].detail.find("all 56") != std::string::npos);
    CHECK(tightest(bounds) == 5);
    CHECK_THROWS_AS(tightest(std::vector<BoundResult>{}), std::invalid_argument);
}

TEST_CASE("rule names")
{
    CHECK(to_string(BoundRule::MinDegree) == "min-degree");
    CHECK(to_string(BoundKind::Exact) == "exact");
}
