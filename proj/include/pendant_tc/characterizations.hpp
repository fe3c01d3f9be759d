#pragma once

#include "pendant_tc/families.hpp"
#include "pendant_tc/graph.hpp"
#include "pendant_tc/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pendant_tc {

/// What the structural classifiers predict about tau_k(G) relative to n - k.
enum class Prediction {
    ExactlyNMinusK,
    ExactlyNMinusKMinus1,
    ExactlyNMinusKMinus2,
    Higher,        ///< above the class being tested
    Lower,         ///< below the class being tested
    NotApplicable, ///< a hypothesis of the characterization is unmet
};

std::string to_string(Prediction p);

struct LargeTauVerdict {
    Prediction predicted = Prediction::NotApplicable;
    std::string evidence;
    /// The verdict was computed outside the order range the characterization
    /// claims; compare with the solver but do not treat mismatches as failures.
    bool advisory = false;
};

/// The exact value a verdict names, if it names one.
std::optional<int> predicted_value(const LargeTauVerdict &v, int n, int k);

/// tau_k = n - k exactly for complete graphs. Needs a connected graph,
/// 3 <= k <= n - 1 and n >= 4.
LargeTauVerdict classify_nk(const Graph &g, int k);

/// tau_k = n - k - 1 exactly when the complement is one or two disjoint
/// edges plus isolated vertices. Needs n >= 7 and 3 <= k <= n - 2.
LargeTauVerdict classify_nk1(const Graph &g, int k);

/// Which k = 4 host list to use: the one stated, with C_5 + K_2, or the
/// P_5 + K_2 variant that the converse argument checks.
enum class HostReading { AsStated, ConverseProof };

/// The host graphs listed for k = 3 or k = 4, restricted to those that fit
/// on n vertices.
std::vector<HostFamily> listed_hosts(int k, int n, HostReading reading = HostReading::AsStated);

/// Decides whether `gbar` is a subgraph of some listed host on the same
/// vertex count. Only graphs of maximum degree <= 2 can embed; components are
/// matched to host slots by exhaustive search. Throws std::invalid_argument
/// unless k is 3 or 4.
LargeTauVerdict embeds_in_listed_family(const Graph &gbar, int k, HostReading reading = HostReading::AsStated);

/// How to read the size-at-most-four condition for k >= 5.
enum class OutsideSetReading {
    /// The complement has at most four non-isolated vertices.
    NonIsolatedAtMostFour,
    /// No k-set S has five or more complement neighbours outside S.
    OutsideNeighbourhoodAtMostFour,
};

struct Nk2Options {
    HostReading host_reading = HostReading::AsStated;
    OutsideSetReading outside_reading = OutsideSetReading::OutsideNeighbourhoodAtMostFour;
};

/// tau_k = n - k - 2 exactly. For k in {3, 4} the complement must embed in a
/// listed host (verdict advisory below n = 15); for k >= 5 the complement is
/// P_3 plus isolated vertices or has 1 <= max degree <= 2, at least three
/// edges and the outside-set condition (NotApplicable below n = 15).
LargeTauVerdict classify_nk2(const Graph &g, int k, const Nk2Options &options = {});

/// Largest |N(S) - S| over k-sets S of a graph with maximum degree <= 2.
/// Throws std::invalid_argument for larger degrees.
int max_outside_neighbourhood(const Graph &h, int k);

enum class ZeroReason {
    LowConnectivity,  ///< kappa <= k - 2
    TightMinDegree,   ///< kappa = delta = k - 1
    Undecided,
};

std::string to_string(ZeroReason r);

struct ZeroVerdict {
    ZeroReason reason = ZeroReason::Undecided;
    int kappa = 0;
    int delta = 0;
    bool zero() const { return reason != ZeroReason::Undecided; }
};

/// Sufficient conditions for tau_k = 0; never claims a nonzero value.
/// Throws std::invalid_argument for disconnected graphs or k outside 3..n.
ZeroVerdict classify_zero(const Graph &g, int k);

struct NearNRow {
    int k = 0;
    std::optional<int> predicted;
    int solver = 0;
    std::string rule;
    bool agrees() const { return !predicted || *predicted == solver; }
};

/// Predicted and computed tau_k for k = n, n - 1, n - 2 (rows with k < 3 are
/// omitted). The k = n - 2 prediction for non-complete graphs is made only
/// for n >= 7. Throws std::invalid_argument for disconnected graphs.
std::vector<NearNRow> corollaries_near_n(const Graph &g, const SolverOptions &options = {});

} // namespace pendant_tc
