#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pendant_tc {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Hard upper bound on graph order: one 64-bit adjacency row per vertex.
inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline constexpr VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }
inline int popcount(VertexMask m) { return std::popcount(m); }
inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

/// Sorted, duplicate-free list of vertex labels.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    static VertexSet from_mask(VertexMask mask);

    const std::vector<Vertex> &members() const { return members_; }
    VertexMask mask() const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    Vertex operator[](std::size_t i) const { return members_[i]; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    std::string to_string() const;

    friend bool operator==(const VertexSet &, const VertexSet &) = default;
    friend auto operator<=>(const VertexSet &, const VertexSet &) = default;

private:
    std::vector<Vertex> members_;
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Sorted list of distinct edges.
class EdgeSet {
public:
    EdgeSet() = default;
    /// Throws std::invalid_argument on a loop or a repeated pair.
    explicit EdgeSet(std::vector<Edge> edges);
    EdgeSet(std::initializer_list<Edge> edges);

    const std::vector<Edge> &edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool contains(const Edge &e) const;
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    friend bool operator==(const EdgeSet &, const EdgeSet &) = default;

private:
    std::vector<Edge> edges_;
};

/// Undirected simple graph on the dense labels 0..n-1.
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument unless 0 <= n <= max_vertices <= 64.
    explicit Graph(int n, int max_vertices = kMaxVertices);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    VertexMask vertices() const { return low_mask(n_); }
    VertexMask neighbours(Vertex v) const { return rows_[v]; }
    bool adjacent(Vertex a, Vertex b) const { return (rows_[a] >> b) & 1U; }
    int degree(Vertex v) const { return popcount(rows_[v]); }
    int edge_count() const;
    EdgeSet edges() const;

    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void check_pair(Vertex a, Vertex b) const;

    int n_ = 0;
    std::vector<VertexMask> rows_;
};

// ---------------------------------------------------------------- graph6

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string &what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Short-form graph6 decoder (n <= 62). An optional ">>graph6<<" prefix is
/// accepted; trailing whitespace is not.
Graph parse_graph6(std::string_view line, int max_vertices = 62);

/// Canonical short-form graph6 text. Throws std::invalid_argument for n > 62.
std::string write_graph6(const Graph &g);

// ---------------------------------------------------------------- structure

Graph complement(const Graph &g);

bool is_connected(const Graph &g);
/// True when the vertices in `mask` induce a connected subgraph (empty counts as connected).
bool induces_connected(const Graph &g, VertexMask mask);
/// Connected components as masks, ordered by smallest vertex.
std::vector<VertexMask> components(const Graph &g);
bool is_complete(const Graph &g);

int min_degree(const Graph &g);
int max_degree(const Graph &g);
std::vector<int> degree_sequence(const Graph &g);

/// Edges with exactly one endpoint in `s`. Throws std::invalid_argument if
/// `s` is empty or all of V(G).
EdgeSet boundary_edges(const Graph &g, const VertexSet &s);
int boundary_edge_count(const Graph &g, VertexMask s);

/// kappa(G) by unit vertex-capacity max flow over nonadjacent pairs;
/// n-1 for complete graphs, 0 when disconnected.
int vertex_connectivity(const Graph &g);

/// Maximum number of x-to-U paths that pairwise share only x.
/// Throws std::invalid_argument if x is in u or u is empty.
int fan_size(const Graph &g, Vertex x, const VertexSet &u);

enum class ShapeKind { IsolatedVertex, Path, Cycle, Other };

struct ComponentShape {
    ShapeKind kind = ShapeKind::Other;
    VertexSet vertices;

    int order() const { return static_cast<int>(vertices.size()); }
};

/// One entry per component in order of smallest vertex. A single edge is a
/// Path of order 2.
std::vector<ComponentShape> component_shapes(const Graph &g);

std::string to_string(ShapeKind kind);

/// Outcome of evaluating "two adjacent minimum-degree vertices imply
/// kappa <= delta - 1" on one graph. Reported, never asserted.
struct AdjacentMinDegreeCheck {
    bool premise = false;
    bool conclusion = false;
    bool holds() const { return !premise || conclusion; }
};

/// Throws std::invalid_argument on a disconnected graph.
AdjacentMinDegreeCheck adjacent_min_degree_check(const Graph &g);

} // namespace pendant_tc
