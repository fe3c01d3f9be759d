#pragma once

#include "pendant_tc/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pendant_tc {

/// Where a closed-form value comes from.
enum class BoundRule {
    MinDegree,          ///< tau_k <= delta - k + 1
    Connectivity,       ///< tau_k <= kappa - k + 2
    BoundaryEdges,      ///< tau_k <= floor(|E[S, V-S]| / k) for every k-set S
    OrderMinusK,        ///< tau_k <= n - k
    CompleteGraph,      ///< tau_k(K_n) = n - k
    CompleteBipartite,  ///< tau_k(K_{r,s}) = max(min(r-k+1, s-k+1), 0)
    MultipartiteParts,  ///< upper bound from the part sizes of K_{n_1..n_t}
    ThresholdMinDegree, ///< threshold graph with minimum degree l: l - k + 1
};

enum class BoundKind { Exact, UpperBound, LowerBound, NecessaryCondition };

struct BoundResult {
    int value = 0;
    BoundRule rule = BoundRule::OrderMinusK;
    BoundKind kind = BoundKind::UpperBound;
    /// Free-form note, e.g. how many subsets a sampled bound looked at.
    std::string detail;
};

std::string to_string(BoundRule rule);
std::string to_string(BoundKind kind);

/// Requires 3 <= k <= n.
BoundResult tau_complete(int n, int k);
/// Requires r, s >= 1 and k >= 2. Symmetric in r and s.
BoundResult tau_complete_bipartite(int r, int s, int k);
/// Parts must be ascending with at least two parts; k >= 3.
BoundResult tau_multipartite_upper(std::span<const int> parts, int k);
/// Threshold graph with minimum degree `ell`; k >= 3.
BoundResult tau_threshold(int ell, int k);

struct BoundOptions {
    /// Enumerate every k-set for the boundary bound when C(n, k) is at most this.
    std::uint64_t exhaustive_limit = 200000;
    /// Otherwise sample this many k-sets.
    int samples = 2000;
    std::uint64_t seed = 1;
};

/// Bounds every graph obeys: minimum degree, connectivity, n - k and the
/// boundary-edge bound. All values are floored at 0.
std::vector<BoundResult> necessary_upper_bounds(const Graph &g, int k, const BoundOptions &options = {});

/// Smallest value in a nonempty list.
int tightest(std::span<const BoundResult> bounds);

} // namespace pendant_tc
