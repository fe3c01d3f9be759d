#include "pendant_tc/closed_forms.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace pendant_tc {

std::string to_string(BoundRule rule)
{
    switch (rule) {
    case BoundRule::MinDegree: return "min-degree";
    case BoundRule::Connectivity: return "connectivity";
    case BoundRule::BoundaryEdges: return "boundary-edges";
    case BoundRule::OrderMinusK: return "order-minus-k";
    case BoundRule::CompleteGraph: return "complete-graph";
    case BoundRule::CompleteBipartite: return "complete-bipartite";
    case BoundRule::MultipartiteParts: return "multipartite-parts";
    case BoundRule::ThresholdMinDegree: return "threshold-min-degree";
    }
    return "?";
}

std::string to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::Exact: return "exact";
    case BoundKind::UpperBound: return "upper";
    case BoundKind::LowerBound: return "lower";
    case BoundKind::NecessaryCondition: return "necessary";
    }
    return "?";
}

BoundResult tau_complete(int n, int k)
{
    if (k < 3 || k > n)
        throw std::invalid_argument("complete graph value needs 3 <= k <= n");
    return {n - k, BoundRule::CompleteGraph, BoundKind::Exact, {}};
}

BoundResult tau_complete_bipartite(int r, int s, int k)
{
    if (r < 1 || s < 1 || k < 2)
        throw std::invalid_argument("complete bipartite value needs r, s >= 1 and k >= 2");
    return {std::max(std::min(r - k + 1, s - k + 1), 0), BoundRule::CompleteBipartite, BoundKind::Exact, {}};
}

BoundResult tau_multipartite_upper(std::span<const int> parts, int k)
{
    if (parts.size() < 2 || k < 3)
        throw std::invalid_argument("multipartite bound needs at least two parts and k >= 3");
    if (!std::is_sorted(parts.begin(), parts.end()) || parts.front() < 1)
        throw std::invalid_argument("multipartite parts must be positive and ascending");
    const int t = static_cast<int>(parts.size());
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    int value = 0;
    if (k >= t) {
        value = (total - k) / 2;
    }
    else {
        const int small = std::accumulate(parts.begin(), parts.begin() + k, 0);
        value = (total - small) + (small - k) / 2;
    }
    return {std::max(value, 0), BoundRule::MultipartiteParts, BoundKind::UpperBound, {}};
}

BoundResult tau_threshold(int ell, int k)
{
    if (ell < 0 || k < 3)
        throw std::invalid_argument("threshold value needs ell >= 0 and k >= 3");
    return {k > ell ? 0 : ell - k + 1, BoundRule::ThresholdMinDegree, BoundKind::Exact, {}};
}

namespace {

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        const unsigned __int128 next = static_cast<unsigned __int128>(c) * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (next > (std::uint64_t{1} << 62))
            return std::uint64_t{1} << 62;
        c = static_cast<std::uint64_t>(next);
    }
    return c;
}

int boundary_term(const Graph &g, VertexMask s, int k)
{
    int direct = 0;
    if (k == 2) {
        const Vertex a = lowest(s);
        direct = g.adjacent(a, lowest(s & ~bit(a))) ? 1 : 0;
    }
    return boundary_edge_count(g, s) / k + direct;
}

BoundResult boundary_bound(const Graph &g, int k, const BoundOptions &options)
{
    const int n = g.order();
    BoundResult out{n - k, BoundRule::BoundaryEdges, BoundKind::UpperBound, {}};
    if (k >= n) {
        out.value = 0;
        out.detail = "k = n";
        return out;
    }
    const std::uint64_t total = binomial(n, k);
    int best = n - k + (k == 2 ? 1 : 0);
    if (total <= options.exhaustive_limit) {
        std::vector<Vertex> combo(static_cast<std::size_t>(k));
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            VertexMask m = 0;
            for (Vertex v : combo)
                m |= bit(v);
            best = std::min(best, boundary_term(g, m, k));
            int i = k - 1;
            while (i >= 0 && combo[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j)
                combo[j] = combo[j - 1] + 1;
        }
        out.detail = "all " + std::to_string(total) + " subsets";
    }
    else {
        std::mt19937_64 rng(options.seed);
        std::vector<Vertex> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 0);
        for (int draw = 0; draw < options.samples; ++draw) {
            std::shuffle(pool.begin(), pool.end(), rng);
            VertexMask m = 0;
            for (int i = 0; i < k; ++i)
                m |= bit(pool[i]);
            best = std::min(best, boundary_term(g, m, k));
        }
        out.detail = std::to_string(options.samples) + " sampled subsets of " + std::to_string(total);
    }
    out.value = std::max(best, 0);
    return out;
}

} // namespace

std::vector<BoundResult> necessary_upper_bounds(const Graph &g, int k, const BoundOptions &options)
{
    const int n = g.order();
    if (k < 2 || k > n)
        throw std::invalid_argument("k must lie in 2..n");
    std::vector<BoundResult> out;
    // With two terminals the direct edge is a tree of its own.
    const int direct = k == 2 ? 1 : 0;
    out.push_back({std::max(min_degree(g) - k + 1 + direct, 0), BoundRule::MinDegree, BoundKind::NecessaryCondition, {}});
    out.push_back({std::max(vertex_connectivity(g) - k + 2, 0), BoundRule::Connectivity, BoundKind::NecessaryCondition, {}});
    out.push_back({n - k + direct, BoundRule::OrderMinusK, BoundKind::UpperBound, {}});
    out.push_back(boundary_bound(g, k, options));
    return out;
}

int tightest(std::span<const BoundResult> bounds)
{
    if (bounds.empty())
        throw std::invalid_argument("no bounds to combine");
    return std::min_element(bounds.begin(), bounds.end(), [](const auto &a, const auto &b) { return a.value < b.value; })
        ->value;
}

} // namespace pendant_tc
