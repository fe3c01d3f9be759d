#include "pendant_tc/graph.hpp"

#include <algorithm>
#include <sstream>

namespace pendant_tc {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::from_mask(VertexMask mask)
{
    VertexSet s;
    for (; mask; mask &= mask - 1)
        s.members_.push_back(lowest(mask));
    return s;
}

VertexMask VertexSet::mask() const
{
    VertexMask m = 0;
    for (Vertex v : members_) {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("vertex label " + std::to_string(v) + " outside 0..63");
        m |= bit(v);
    }
    return m;
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::string VertexSet::to_string() const
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < members_.size(); ++i)
        out << (i ? "," : "") << members_[i];
    out << '}';
    return out.str();
}

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges))
{
    for (auto &e : edges_) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        e = Edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
}

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

bool EdgeSet::contains(const Edge &e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph::Graph(int n, int max_vertices) : n_(n)
{
    if (max_vertices > kMaxVertices)
        throw std::invalid_argument("vertex cap may not exceed 64");
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto &e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges)
{
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_pair(Vertex a, Vertex b) const
{
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw std::out_of_range("edge " + std::to_string(a) + "-" + std::to_string(b) + " outside vertex range");
    if (a == b)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
}

void Graph::add_edge(Vertex a, Vertex b)
{
    check_pair(a, b);
    rows_[a] |= bit(b);
    rows_[b] |= bit(a);
}

void Graph::remove_edge(Vertex a, Vertex b)
{
    check_pair(a, b);
    rows_[a] &= ~bit(b);
    rows_[b] &= ~bit(a);
}

int Graph::edge_count() const
{
    int twice = 0;
    for (auto row : rows_)
        twice += popcount(row);
    return twice / 2;
}

EdgeSet Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex a = 0; a < n_; ++a)
        for (VertexMask m = rows_[a] & ~low_mask(a + 1); m; m &= m - 1)
            out.emplace_back(a, lowest(m));
    return EdgeSet(std::move(out));
}

Graph complement(const Graph &g)
{
    const int n = g.order();
    Graph h(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!g.adjacent(a, b))
                h.add_edge(a, b);
    return h;
}

namespace {

VertexMask reach(const Graph &g, Vertex start, VertexMask within)
{
    VertexMask seen = bit(start), frontier = bit(start);
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask m = frontier; m; m &= m - 1)
            next |= g.neighbours(lowest(m));
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

} // namespace

bool induces_connected(const Graph &g, VertexMask mask)
{
    if (!mask)
        return true;
    return reach(g, lowest(mask), mask) == mask;
}

bool is_connected(const Graph &g)
{
    return induces_connected(g, g.vertices());
}

std::vector<VertexMask> components(const Graph &g)
{
    std::vector<VertexMask> out;
    for (VertexMask left = g.vertices(); left;) {
        VertexMask c = reach(g, lowest(left), g.vertices());
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

bool is_complete(const Graph &g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != g.order() - 1)
            return false;
    return true;
}

int min_degree(const Graph &g)
{
    int d = g.order() ? g.order() : 0;
    for (Vertex v = 0; v < g.order(); ++v)
        d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const Graph &g)
{
    int d = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        d = std::max(d, g.degree(v));
    return d;
}

std::vector<int> degree_sequence(const Graph &g)
{
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        d[v] = g.degree(v);
    return d;
}

int boundary_edge_count(const Graph &g, VertexMask s)
{
    int count = 0;
    for (VertexMask m = s; m; m &= m - 1)
        count += popcount(g.neighbours(lowest(m)) & ~s);
    return count;
}

EdgeSet boundary_edges(const Graph &g, const VertexSet &s)
{
    const VertexMask sm = s.mask();
    if (sm == 0 || sm == g.vertices())
        throw std::invalid_argument("boundary edges need a nonempty proper vertex subset");
    if (sm & ~g.vertices())
        throw std::out_of_range("vertex set " + s.to_string() + " exceeds the graph");
    std::vector<Edge> out;
    for (Vertex a : s)
        for (VertexMask m = g.neighbours(a) & ~sm; m; m &= m - 1)
            out.emplace_back(a, lowest(m));
    return EdgeSet(std::move(out));
}

std::string to_string(ShapeKind kind)
{
    switch (kind) {
    case ShapeKind::IsolatedVertex: return "isolated";
    case ShapeKind::Path: return "path";
    case ShapeKind::Cycle: return "cycle";
    case ShapeKind::Other: return "other";
    }
    return "other";
}

std::vector<ComponentShape> component_shapes(const Graph &g)
{
    std::vector<ComponentShape> out;
    for (VertexMask c : components(g)) {
        ComponentShape shape;
        shape.vertices = VertexSet::from_mask(c);
        const int order = popcount(c);
        int deg1 = 0, deg2 = 0, edges2 = 0;
        for (VertexMask m = c; m; m &= m - 1) {
            int d = g.degree(lowest(m));
            edges2 += d;
            deg1 += d == 1;
            deg2 += d == 2;
        }
        if (order == 1)
            shape.kind = ShapeKind::IsolatedVertex;
        else if (deg2 == order)
            shape.kind = ShapeKind::Cycle;
        else if (deg1 == 2 && deg1 + deg2 == order && edges2 / 2 == order - 1)
            shape.kind = ShapeKind::Path;
        else
            shape.kind = ShapeKind::Other;
        out.push_back(std::move(shape));
    }
    return out;
}

AdjacentMinDegreeCheck adjacent_min_degree_check(const Graph &g)
{
    if (!is_connected(g))
        throw std::invalid_argument("adjacent_min_degree_check needs a connected graph");
    AdjacentMinDegreeCheck out;
    const int delta = min_degree(g);
    VertexMask minimal = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == delta)
            minimal |= bit(v);
    for (VertexMask m = minimal; m; m &= m - 1)
        if (g.neighbours(lowest(m)) & minimal)
            out.premise = true;
    out.conclusion = vertex_connectivity(g) <= delta - 1;
    return out;
}

} // namespace pendant_tc
