#pragma once

#include "pendant_tc/graph.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pendant_tc {

enum class ThresholdStep { Isolated, Dominating };

/// Description of a named graph family member.
///
/// Labelling is deterministic: parts and cycles occupy contiguous ascending
/// labels, the wheel hub is the last label, a threshold graph labels
/// vertices in creation order, and a disjoint union concatenates its
/// members' label blocks left to right.
struct FamilySpec {
    enum class Kind {
        Complete,
        CompleteBipartite,
        CompleteMultipartite,
        Wheel,
        Path,
        Cycle,
        Threshold,
        DisjointUnion,
        ComplementOf,
    };

    Kind kind = Kind::Complete;
    std::vector<int> sizes;
    std::vector<ThresholdStep> creation;
    std::vector<FamilySpec> members;

    static FamilySpec complete(int n);
    static FamilySpec complete_bipartite(int r, int s);
    /// Parts are normalised to ascending order.
    static FamilySpec complete_multipartite(std::vector<int> parts);
    /// Order-n wheel: an (n-1)-cycle plus a hub adjacent to every rim vertex.
    static FamilySpec wheel(int n);
    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec threshold(std::vector<ThresholdStep> creation);
    static FamilySpec disjoint_union(std::vector<FamilySpec> members);
    static FamilySpec complement_of(FamilySpec inner);

    friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

class FamilySpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws FamilySpecError on invalid sizes.
Graph build(const FamilySpec &spec);

/// Adds vertices left to right, each isolated or joined to every earlier
/// vertex. Throws FamilySpecError on an empty sequence.
Graph build_threshold(std::span<const ThresholdStep> creation);

/// Parses the text form: "K_5", "K_{3,3}", "K_{2,2,2}", "W_6", "P_4", "C_7",
/// "threshold:iidd", unions joined by '+' with optional multiplicities such
/// as "C7+3K1" or "2K2+P3", and "compl:<spec>" for the complement.
FamilySpec parse_family(std::string_view text);

/// Canonical text form; parse_family(to_string(s)) == s for specs built by
/// the factory functions.
std::string to_string(const FamilySpec &spec);

// ---------------------------------------------------------------- host graphs

/// The unions of short cycles, a five-vertex path, single edges and isolated
/// vertices into which the complement of a graph with tau_k = n-k-2 embeds.
enum class HostKind {
    TwoCycles,          ///< C_i + C_j + (n-i-j)K_1
    CycleAndMatching,   ///< C_i + floor((n-i)/2) K_2 (+K_1 when n-i is odd)
    PathAndMatching,    ///< P_5 + floor((n-5)/2) K_2 (+K_1 when n-5 is odd)
    SingleCycle,        ///< C_i + (n-i)K_1
    CycleFiveAndEdge,   ///< C_5 + K_2 + (n-7)K_1
    PathFiveAndEdge,    ///< P_5 + K_2 + (n-7)K_1
};

struct HostFamily {
    HostKind kind = HostKind::SingleCycle;
    int i = 0;
    int j = 0;

    int min_order() const;
    std::string name() const;

    friend bool operator==(const HostFamily &, const HostFamily &) = default;
};

/// The host graph itself (this is the complement of the graph of interest).
/// Throws FamilySpecError when n is below the host's fixed part.
Graph host_complement(const HostFamily &host, int n);

/// Path v1 v2 v3 v4 joined to `inner` through v1 and v4; both the result
/// and its complement have minimum degree 2 when inner has order >= 1.
/// Inner labels come first, the path follows.
Graph path_bridged_example(const Graph &inner);

} // namespace pendant_tc
