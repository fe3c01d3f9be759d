#include "pendant_tc/solver.hpp"

#include <algorithm>

namespace pendant_tc {

bool PackingVerdict::has(std::string_view code) const
{
    return std::any_of(violations.begin(), violations.end(), [&](const auto &v) { return v.code == code; });
}

namespace {

class Checker {
public:
    Checker(const Graph &g, const TreePacking &p) : g_(g), p_(p) {}

    PackingVerdict run()
    {
        for (std::size_t t = 0; t < p_.trees.size(); ++t)
            check_tree(static_cast<int>(t));
        for (std::size_t a = 0; a < p_.trees.size(); ++a)
            for (std::size_t b = a + 1; b < p_.trees.size(); ++b)
                check_pair(static_cast<int>(a), static_cast<int>(b));
        verdict_.accepted = verdict_.violations.empty();
        return verdict_;
    }

private:
    void flag(std::string code, int tree, std::string detail)
    {
        verdict_.violations.push_back({std::move(code), tree, std::move(detail)});
    }

    bool in_graph(Vertex v) const { return v >= 0 && v < g_.order(); }

    void check_tree(int t)
    {
        const PendantTree &tree = p_.trees[t];
        if (tree.terminals != p_.terminals)
            flag("terminal set", t, "tree terminals " + tree.terminals.to_string() + " differ from " +
                                        p_.terminals.to_string());
        const auto all_in_graph = [&](const VertexSet &s) { return std::all_of(s.begin(), s.end(), [&](Vertex v) { return in_graph(v); }); };
        if (!all_in_graph(p_.terminals) || !all_in_graph(tree.internal)) {
            flag("internal set", t, "vertex outside the graph");
            return;
        }
        const VertexMask terminals = p_.terminals.mask();
        const VertexMask internal = tree.internal.mask();
        if (terminals & internal)
            flag("internal set", t, "internal set meets the terminals");
        const VertexMask span = terminals | internal;

        std::vector<int> degree(static_cast<std::size_t>(g_.order()), 0);
        VertexMask touched = 0;
        bool endpoints_ok = true;
        for (const Edge &e : tree.edges) {
            if (!in_graph(e.u) || !in_graph(e.v) || !((span >> e.u) & 1U) || !((span >> e.v) & 1U)) {
                endpoints_ok = false;
                flag("internal set", t, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                            " leaves the declared vertex set");
                continue;
            }
            if (!g_.adjacent(e.u, e.v))
                flag("edge missing", t, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
            ++degree[e.u];
            ++degree[e.v];
            touched |= bit(e.u) | bit(e.v);
        }
        if (!endpoints_ok)
            return;

        if (static_cast<int>(tree.edges.size()) != popcount(span) - 1 || !spans_connected(tree.edges, span))
            flag("not a tree", t, "edges do not form a spanning tree of " + VertexSet::from_mask(span).to_string());
        for (Vertex s : p_.terminals)
            if (degree[s] != 1)
                flag("terminal degree", t, "terminal " + std::to_string(s) + " has degree " + std::to_string(degree[s]));

        if (p_.terminals.size() >= 3 && !tree.edges.empty()) {
            int crossing = 0;
            for (const Edge &e : tree.edges)
                crossing += static_cast<int>(((terminals >> e.u) & 1U) != ((terminals >> e.v) & 1U));
            const int k = static_cast<int>(p_.terminals.size());
            if (crossing < k)
                flag("boundary", t, std::to_string(crossing) + " boundary edges, fewer than k = " + std::to_string(k));
            if (crossing != k)
                verdict_.boundary_exact = false;
        }
    }

    static bool spans_connected(const EdgeSet &edges, VertexMask span)
    {
        if (!span)
            return true;
        VertexMask reached = bit(lowest(span));
        for (bool grew = true; grew;) {
            grew = false;
            for (const Edge &e : edges) {
                const bool a = (reached >> e.u) & 1U, b = (reached >> e.v) & 1U;
                if (a != b) {
                    reached |= bit(e.u) | bit(e.v);
                    grew = true;
                }
            }
        }
        return reached == span;
    }

    void check_pair(int a, int b)
    {
        const PendantTree &x = p_.trees[a], &y = p_.trees[b];
        const VertexMask terminals = p_.terminals.mask();
        auto mask_of = [&](const VertexSet &s) {
            VertexMask m = 0;
            for (Vertex v : s)
                if (in_graph(v))
                    m |= bit(v);
            return m;
        };
        const VertexMask shared = mask_of(x.internal) & mask_of(y.internal) & ~terminals;
        if (shared)
            flag("vertex shared", a, "trees " + std::to_string(a) + " and " + std::to_string(b) + " share " +
                                         VertexSet::from_mask(shared).to_string());
        for (const Edge &e : x.edges)
            if (y.edges.contains(e)) {
                flag("edge shared", a, "trees " + std::to_string(a) + " and " + std::to_string(b) + " share edge " +
                                           std::to_string(e.u) + "-" + std::to_string(e.v));
                break;
            }
    }

    const Graph &g_;
    const TreePacking &p_;
    PackingVerdict verdict_;
};

} // namespace

PackingVerdict verify_packing(const Graph &g, const TreePacking &p)
{
    return Checker(g, p).run();
}

} // namespace pendant_tc
