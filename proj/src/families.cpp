#include "pendant_tc/families.hpp"

#include <algorithm>
#include <numeric>

namespace pendant_tc {

FamilySpec FamilySpec::complete(int n) { return {Kind::Complete, {n}, {}, {}}; }

FamilySpec FamilySpec::complete_bipartite(int r, int s) { return {Kind::CompleteBipartite, {r, s}, {}, {}}; }

FamilySpec FamilySpec::complete_multipartite(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end());
    return {Kind::CompleteMultipartite, std::move(parts), {}, {}};
}

FamilySpec FamilySpec::wheel(int n) { return {Kind::Wheel, {n}, {}, {}}; }
FamilySpec FamilySpec::path(int n) { return {Kind::Path, {n}, {}, {}}; }
FamilySpec FamilySpec::cycle(int n) { return {Kind::Cycle, {n}, {}, {}}; }

FamilySpec FamilySpec::threshold(std::vector<ThresholdStep> creation)
{
    return {Kind::Threshold, {}, std::move(creation), {}};
}

FamilySpec FamilySpec::disjoint_union(std::vector<FamilySpec> members)
{
    return {Kind::DisjointUnion, {}, {}, std::move(members)};
}

FamilySpec FamilySpec::complement_of(FamilySpec inner)
{
    return {Kind::ComplementOf, {}, {}, {std::move(inner)}};
}

namespace {

void require(bool ok, const std::string &what)
{
    if (!ok)
        throw FamilySpecError(what);
}

/// Complete multipartite graph with the given part sizes in the given order.
Graph multipartite(std::span<const int> parts)
{
    int n = 0;
    for (int p : parts) {
        require(p >= 1, "part sizes must be at least 1");
        n += p;
    }
    require(n <= kMaxVertices, "family exceeds 64 vertices");
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    Graph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b])
                g.add_edge(a, b);
    return g;
}

Graph disjoint_union(std::span<const Graph> parts)
{
    int n = 0;
    for (const auto &p : parts)
        n += p.order();
    require(n <= kMaxVertices, "family exceeds 64 vertices");
    Graph g(n);
    int offset = 0;
    for (const auto &p : parts) {
        for (const auto &e : p.edges())
            g.add_edge(e.u + offset, e.v + offset);
        offset += p.order();
    }
    return g;
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycles need at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    require(n >= 1 && n <= kMaxVertices, "path order must be in 1..64");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph matching(int edges) { return disjoint_union(std::vector<Graph>(static_cast<std::size_t>(edges), path_graph(2))); }

} // namespace

Graph build_threshold(std::span<const ThresholdStep> creation)
{
    require(!creation.empty(), "threshold creation sequence is empty");
    require(creation.size() <= static_cast<std::size_t>(kMaxVertices), "family exceeds 64 vertices");
    Graph g(static_cast<int>(creation.size()));
    for (Vertex v = 0; v < g.order(); ++v)
        if (creation[v] == ThresholdStep::Dominating)
            for (Vertex u = 0; u < v; ++u)
                g.add_edge(u, v);
    return g;
}

Graph build(const FamilySpec &spec)
{
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
    case Kind::Complete: {
        require(spec.sizes.size() == 1 && spec.sizes[0] >= 1, "K_n needs n >= 1");
        return multipartite(std::vector<int>(static_cast<std::size_t>(spec.sizes[0]), 1));
    }
    case Kind::CompleteBipartite:
        require(spec.sizes.size() == 2, "K_{r,s} needs two part sizes");
        return multipartite(spec.sizes);
    case Kind::CompleteMultipartite:
        require(spec.sizes.size() >= 2, "complete multipartite graphs need at least two parts");
        require(std::is_sorted(spec.sizes.begin(), spec.sizes.end()), "multipartite parts must be ascending");
        return multipartite(spec.sizes);
    case Kind::Wheel: {
        require(spec.sizes.size() == 1 && spec.sizes[0] >= 4, "W_n needs n >= 4");
        const int n = spec.sizes[0];
        Graph rim = cycle_graph(n - 1);
        Graph g(n);
        for (const auto &e : rim.edges())
            g.add_edge(e.u, e.v);
        for (Vertex v = 0; v < n - 1; ++v)
            g.add_edge(v, n - 1);
        return g;
    }
    case Kind::Path:
        require(spec.sizes.size() == 1, "P_n needs one size");
        return path_graph(spec.sizes[0]);
    case Kind::Cycle:
        require(spec.sizes.size() == 1, "C_n needs one size");
        require(spec.sizes[0] <= kMaxVertices, "family exceeds 64 vertices");
        return cycle_graph(spec.sizes[0]);
    case Kind::Threshold:
        return build_threshold(spec.creation);
    case Kind::DisjointUnion: {
        require(!spec.members.empty(), "empty disjoint union");
        std::vector<Graph> parts;
        for (const auto &m : spec.members)
            parts.push_back(build(m));
        return disjoint_union(parts);
    }
    case Kind::ComplementOf:
        require(spec.members.size() == 1, "complement takes exactly one member");
        return complement(build(spec.members[0]));
    }
    throw FamilySpecError("unknown family kind");
}

int HostFamily::min_order() const
{
    switch (kind) {
    case HostKind::TwoCycles: return i + j;
    case HostKind::CycleAndMatching: return i;
    case HostKind::PathAndMatching: return 5;
    case HostKind::SingleCycle: return i;
    case HostKind::CycleFiveAndEdge:
    case HostKind::PathFiveAndEdge: return 7;
    }
    return 0;
}

std::string HostFamily::name() const
{
    const auto si = std::to_string(i), sj = std::to_string(j);
    switch (kind) {
    case HostKind::TwoCycles: return "C" + si + "+C" + sj + "+(n-" + std::to_string(i + j) + ")K1";
    case HostKind::CycleAndMatching: return "C" + si + "+floor((n-" + si + ")/2)K2";
    case HostKind::PathAndMatching: return "P5+floor((n-5)/2)K2";
    case HostKind::SingleCycle: return "C" + si + "+(n-" + si + ")K1";
    case HostKind::CycleFiveAndEdge: return "C5+K2+(n-7)K1";
    case HostKind::PathFiveAndEdge: return "P5+K2+(n-7)K1";
    }
    return "?";
}

Graph host_complement(const HostFamily &host, int n)
{
    require(n >= host.min_order(), host.name() + " needs n >= " + std::to_string(host.min_order()));
    require(n <= kMaxVertices, "family exceeds 64 vertices");
    std::vector<Graph> parts;
    int used = 0;
    auto add = [&](Graph g) {
        used += g.order();
        parts.push_back(std::move(g));
    };
    switch (host.kind) {
    case HostKind::TwoCycles:
        require(host.i >= 3 && host.j >= 3, "cycle lengths must be at least 3");
        add(cycle_graph(host.i));
        add(cycle_graph(host.j));
        break;
    case HostKind::CycleAndMatching:
        add(cycle_graph(host.i));
        add(matching((n - host.i) / 2));
        break;
    case HostKind::PathAndMatching:
        add(path_graph(5));
        add(matching((n - 5) / 2));
        break;
    case HostKind::SingleCycle:
        add(cycle_graph(host.i));
        break;
    case HostKind::CycleFiveAndEdge:
        add(cycle_graph(5));
        add(path_graph(2));
        break;
    case HostKind::PathFiveAndEdge:
        add(path_graph(5));
        add(path_graph(2));
        break;
    }
    if (n > used)
        add(Graph(n - used));
    return disjoint_union(parts);
}

Graph path_bridged_example(const Graph &inner)
{
    const int m = inner.order();
    require(m >= 1, "inner graph must be nonempty");
    require(m + 4 <= kMaxVertices, "family exceeds 64 vertices");
    Graph g(m + 4);
    for (const auto &e : inner.edges())
        g.add_edge(e.u, e.v);
    const Vertex v1 = m, v2 = m + 1, v3 = m + 2, v4 = m + 3;
    g.add_edge(v1, v2);
    g.add_edge(v2, v3);
    g.add_edge(v3, v4);
    for (Vertex x = 0; x < m; ++x) {
        g.add_edge(x, v1);
        g.add_edge(x, v4);
    }
    return g;
}

} // namespace pendant_tc
