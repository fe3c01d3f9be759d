#include "pendant_tc/families.hpp"
#include "pendant_tc/solver.hpp"

#include <doctest.h>

using namespace pendant_tc;

namespace {

TreePacking k6_witness()
{
    const auto r = local_tau(build(FamilySpec::complete(6)), {0, 1, 2});
    REQUIRE(r.witness.trees.size() == 3);
    return r.witness;
}

} // namespace

TEST_CASE("solver witnesses are accepted")
{
    const Graph k6 = build(FamilySpec::complete(6));
    const auto v = verify_packing(k6, k6_witness());
    CHECK(v.accepted);
    CHECK(v.violations.empty());
    CHECK(v.boundary_exact);
    CHECK(verify_packing(k6, TreePacking{{0, 1, 2}, {}}).accepted);
}

TEST_CASE("shared internal vertices are rejected")
{
    const Graph k6 = build(FamilySpec::complete(6));
    TreePacking p = k6_witness();
    p.trees[1] = p.trees[0];
    const auto v = verify_packing(k6, p);
    CHECK_FALSE(v.accepted);
    CHECK(v.has("vertex shared"));
    CHECK(v.has("edge shared"));
}

TEST_CASE("extra terminal edges are rejected")
{
    const Graph k6 = build(FamilySpec::complete(6));
    TreePacking p = k6_witness();
    auto &t = p.trees[0];
    std::vector<Edge> edges = t.edges.edges();
    // Terminal 0 gains a second edge, to terminal 1.
    edges.emplace_back(0, 1);
    t.edges = EdgeSet(edges);
    const auto v = verify_packing(k6, p);
    CHECK(v.has("terminal degree"));
    CHECK(v.has("not a tree"));
}

TEST_CASE("missing tree edges are rejected")
{
    const Graph k6 = build(FamilySpec::complete(6));
    TreePacking p = k6_witness();
    std::vector<Edge> edges = p.trees[2].edges.edges();
    edges.pop_back();
    p.trees[2].edges = EdgeSet(edges);
    const auto v = verify_packing(k6, p);
    CHECK(v.has("not a tree"));
    CHECK(v.violations.front().tree == 2);
}

TEST_CASE("edges absent from the graph are rejected")
{
    Graph g = build(FamilySpec::complete(5));
    const auto r = local_tau(g, {0, 1, 2});
    REQUIRE_FALSE(r.witness.trees.empty());
    const Edge e = r.witness.trees[0].edges.edges().front();
    g.remove_edge(e.u, e.v);
    CHECK(verify_packing(g, r.witness).has("edge missing"));
}

TEST_CASE("declared sets are checked")
{
    const Graph k6 = build(FamilySpec::complete(6));
    TreePacking p = k6_witness();
    p.trees[0].terminals = VertexSet{0, 1};
    CHECK(verify_packing(k6, p).has("terminal set"));

    p = k6_witness();
    p.trees[0].internal = VertexSet{9};
    CHECK(verify_packing(k6, p).has("internal set"));

    p = k6_witness();
    p.trees[0].internal = VertexSet{};
    CHECK(verify_packing(k6, p).has("internal set"));
}

TEST_CASE("a tree with too few boundary edges is flagged")
{
    const Graph k3 = build(FamilySpec::complete(3));
    TreePacking p{{0, 1, 2}, {PendantTree{{0, 1, 2}, {}, EdgeSet{{0, 1}, {1, 2}}}}};
    const auto v = verify_packing(k3, p);
    CHECK(v.has("boundary"));
    CHECK(v.has("terminal degree"));
    CHECK_FALSE(v.boundary_exact);
}

TEST_CASE("two terminals joined directly")
{
    const Graph k3 = build(FamilySpec::complete(3));
    TreePacking p{{0, 1}, {PendantTree{{0, 1}, {}, EdgeSet{{0, 1}}}, PendantTree{{0, 1}, {2}, EdgeSet{{0, 2}, {1, 2}}}}};
    CHECK(verify_packing(k3, p).accepted);
    p.trees.push_back(p.trees[0]);
    CHECK(verify_packing(k3, p).has("edge shared"));
}
