#pragma once

#include "pendant_tc/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pendant_tc {

/// A tree containing every terminal in which each terminal is a leaf.
/// `internal` holds the non-terminal vertices of the tree.
struct PendantTree {
    VertexSet terminals;
    VertexSet internal;
    EdgeSet edges;

    friend bool operator==(const PendantTree &, const PendantTree &) = default;
};

/// Pendant trees on a common terminal set that pairwise share no edge and
/// no vertex outside the terminals.
struct TreePacking {
    VertexSet terminals;
    std::vector<PendantTree> trees;

    friend bool operator==(const TreePacking &, const TreePacking &) = default;
};

struct LocalResult {
    int tau = 0;
    TreePacking witness;
    int upper_bound_used = 0;
    std::uint64_t nodes_explored = 0;
};

struct GlobalResult {
    int k = 0;
    int tau_k = 0;
    VertexSet minimizing_set;
    TreePacking witness;
    std::uint64_t nodes_explored = 0;
    std::uint64_t subsets_evaluated = 0;
};

struct SolverOptions {
    /// Largest graph order the exact search accepts.
    int max_vertices = 24;
    /// Search-node budget per call; 0 means unlimited.
    std::uint64_t node_budget = 0;
};

class SizeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("search budget of " + std::to_string(budget) + " nodes exceeded"), budget_(budget) {}
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

/// Raised by tree_from_internal_set; lists every failed precondition.
class ReductionError : public std::invalid_argument {
public:
    ReductionError(const std::string &what, std::vector<std::string> problems)
        : std::invalid_argument(what), problems_(std::move(problems)) {}
    const std::vector<std::string> &problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

// A pendant S-tree is determined, up to the choice of edges, by its internal
// vertex set I: G[I] is connected and every terminal has a neighbour in I.
// Two trees are internally disjoint exactly when their internal sets are
// disjoint, so the solver packs internal sets instead of trees.

VertexSet canonical_internal_set(const PendantTree &t);

/// Breadth-first spanning tree of G[i] from its smallest vertex (neighbours
/// visited in ascending order) plus one edge from each terminal to its
/// smallest neighbour in i. With |s| = 2 and i empty the tree is the edge
/// between the terminals.
PendantTree tree_from_internal_set(const Graph &g, const VertexSet &s, const VertexSet &i);

/// min(n-k, floor(|E[S, V-S]| / k), min degree over S), counting the direct
/// terminal edge once more when k = 2.
int upper_bound_tau(const Graph &g, const VertexSet &s);

/// Maximum packing of internally disjoint pendant S-trees.
LocalResult local_tau(const Graph &g, const VertexSet &s, const SolverOptions &options = {});

/// Minimum of local_tau over all k-subsets; the lexicographically smallest
/// minimizing set is reported. Disconnected graphs and k = n give 0.
GlobalResult tau_k(const Graph &g, int k, const SolverOptions &options = {});

/// All inclusion-minimal internal sets for terminals s, ascending by
/// (smallest vertex, size, mask).
std::vector<VertexMask> minimal_internal_sets(const Graph &g, VertexMask s);

struct PackingViolation {
    std::string code;
    int tree = -1;
    std::string detail;
};

struct PackingVerdict {
    bool accepted = true;
    std::vector<PackingViolation> violations;
    /// Every tree meets the terminal boundary in exactly k edges.
    bool boundary_exact = true;

    bool has(std::string_view code) const;
};

/// Checks every tree and every pair of trees. Violation codes:
/// "terminal set", "edge missing", "not a tree", "terminal degree",
/// "internal set", "vertex shared", "edge shared", "boundary".
PackingVerdict verify_packing(const Graph &g, const TreePacking &p);

} // namespace pendant_tc
