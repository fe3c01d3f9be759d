#include "pendant_tc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace pendant_tc {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Dense residual network; sizes here never exceed 2*64+2 nodes.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : n_(nodes), cap_(static_cast<std::size_t>(nodes * nodes), 0) {}

    void add_arc(int from, int to, int capacity) { cap_[idx(from, to)] += capacity; }

    /// Edmonds-Karp; stops early once `limit` units have been pushed.
    int max_flow(int source, int sink, int limit = kInf)
    {
        int flow = 0;
        std::vector<int> parent(static_cast<std::size_t>(n_));
        while (flow < limit) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[source] = source;
            std::deque<int> queue{source};
            while (!queue.empty() && parent[sink] < 0) {
                int a = queue.front();
                queue.pop_front();
                for (int b = 0; b < n_; ++b)
                    if (parent[b] < 0 && cap_[idx(a, b)] > 0) {
                        parent[b] = a;
                        queue.push_back(b);
                    }
            }
            if (parent[sink] < 0)
                break;
            int push = kInf;
            for (int b = sink; b != source; b = parent[b])
                push = std::min(push, cap_[idx(parent[b], b)]);
            for (int b = sink; b != source; b = parent[b]) {
                cap_[idx(parent[b], b)] -= push;
                cap_[idx(b, parent[b])] += push;
            }
            flow += push;
        }
        return flow;
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * n_ + b); }

    int n_;
    std::vector<int> cap_;
};

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

/// Split-vertex network: v_in -> v_out carries the vertex capacity, every
/// edge becomes two infinite arcs between out and in nodes.
FlowNetwork split_network(const Graph &g, int extra_nodes, VertexMask uncapped)
{
    FlowNetwork net(2 * g.order() + extra_nodes);
    for (Vertex v = 0; v < g.order(); ++v) {
        net.add_arc(in_node(v), out_node(v), (uncapped >> v) & 1U ? kInf : 1);
        for (VertexMask m = g.neighbours(v); m; m &= m - 1)
            net.add_arc(out_node(v), in_node(lowest(m)), kInf);
    }
    return net;
}

int local_connectivity(const Graph &g, Vertex a, Vertex b, int limit)
{
    FlowNetwork net = split_network(g, 0, bit(a) | bit(b));
    return net.max_flow(out_node(a), in_node(b), limit);
}

} // namespace

int vertex_connectivity(const Graph &g)
{
    const int n = g.order();
    if (n <= 1 || !is_connected(g))
        return 0;
    if (is_complete(g))
        return n - 1;
    // Some vertex among the first kappa+1 avoids a minimum separator, and
    // every vertex it is separated from has a larger label.
    int best = min_degree(g);
    for (Vertex a = 0; a < n && a <= best; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!g.adjacent(a, b))
                best = std::min(best, local_connectivity(g, a, b, best));
    return best;
}

int fan_size(const Graph &g, Vertex x, const VertexSet &u)
{
    if (u.empty())
        throw std::invalid_argument("fan target set is empty");
    if (x < 0 || x >= g.order())
        throw std::out_of_range("fan source outside vertex range");
    const VertexMask targets = u.mask();
    if (targets & ~g.vertices())
        throw std::out_of_range("fan target set " + u.to_string() + " exceeds the graph");
    if (targets & bit(x))
        throw std::invalid_argument("fan source " + std::to_string(x) + " lies in the target set");

    const int sink = 2 * g.order();
    FlowNetwork net = split_network(g, 1, bit(x));
    for (Vertex t : u)
        net.add_arc(out_node(t), sink, 1);
    return net.max_flow(out_node(x), sink);
}

} // namespace pendant_tc
