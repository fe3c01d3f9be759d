#pragma once

#include "pendant_tc/graph.hpp"
#include "pendant_tc/solver.hpp"

#include <string>
#include <vector>

namespace pendant_tc {

enum class Attainment { SumUpper, SumLower, Interior };

std::string to_string(Attainment a);

/// tau_k of a graph and of its complement, with the sum and product bounds.
struct NGRecord {
    int n = 0;
    int k = 0;
    int tau_g = 0;
    int tau_gbar = 0;
    int sum = 0;
    int product = 0;
    int sum_upper = 0;
    /// floor((n-k)/2)^2.
    int product_upper_halved = 0;
    /// floor((n-k)^2/4), the bound implied by the sum bound.
    int product_upper_quarter = 0;
    Attainment attainment = Attainment::Interior;

    bool sum_within() const { return sum >= 0 && sum <= sum_upper; }
    bool product_within_halved() const { return product <= product_upper_halved; }
    bool product_within_quarter() const { return product <= product_upper_quarter; }
};

/// Requires 3 <= k <= n. Disconnected sides count as 0.
NGRecord ng_evaluate(const Graph &g, int k, const SolverOptions &options = {});

/// "sum = n - k implies max degree - min degree <= k - 1".
struct DegreeSpreadCheck {
    bool premise = false;
    int spread = 0;
    bool holds = true;
};

DegreeSpreadCheck check_degree_spread(const Graph &g, const NGRecord &record);

/// For disconnected G: sum = n - k exactly when G has no edges. Skipped for
/// k = n, where every sum is 0.
struct DisconnectedSumCheck {
    bool applicable = false;
    bool sum_at_upper = false;
    bool edgeless = false;
    bool holds = true;
};

DisconnectedSumCheck check_disconnected_sum(const Graph &g, const NGRecord &record);

/// One statement about tau_k(G) + tau_k(complement) for k near n.
struct NearNStatement {
    int k = 0;
    int sum = 0;
    bool either_complete = false;
    std::string claim;
    bool holds = true;
};

/// Evaluates, for n >= 5:
///  k = n:     sum = 0;
///  k = n - 1: sum <= 1, and sum = 1 exactly when G or its complement is complete;
///  k = n - 2: sum is 0 or 2, and sum = 2 exactly when G or its complement is complete.
/// Throws std::invalid_argument for n < 5.
std::vector<NearNStatement> check_near_n_ng(const Graph &g, const SolverOptions &options = {});

} // namespace pendant_tc
