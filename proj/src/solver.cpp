#include "pendant_tc/solver.hpp"

#include <algorithm>
#include <limits>

namespace pendant_tc {

namespace {

class Budget {
public:
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    void tick()
    {
        if (++used_ > limit_ && limit_ != 0)
            throw BudgetExceeded(limit_);
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

void check_order(const Graph &g, const SolverOptions &options)
{
    if (g.order() > options.max_vertices)
        throw SizeCapExceeded("graph order " + std::to_string(g.order()) + " exceeds solver cap " +
                              std::to_string(options.max_vertices));
}

VertexMask checked_terminals(const Graph &g, const VertexSet &s)
{
    if (s.size() < 2 || s.size() > static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("terminal set size must lie in 2..n");
    for (Vertex v : s)
        if (v < 0 || v >= g.order())
            throw std::out_of_range("terminal " + std::to_string(v) + " outside vertex range");
    return s.mask();
}

VertexMask dominated_by(const Graph &g, VertexMask set)
{
    VertexMask d = 0;
    for (; set; set &= set - 1)
        d |= g.neighbours(lowest(set));
    return d;
}

bool usable(const Graph &g, VertexMask terminals, VertexMask set)
{
    return set && (terminals & ~dominated_by(g, set)) == 0 && induces_connected(g, set);
}

bool is_minimal(const Graph &g, VertexMask terminals, VertexMask set)
{
    // Some spanning-tree leaf outside any usable proper subset can be
    // removed without losing connectivity, so single deletions suffice.
    for (VertexMask m = set; m; m &= m - 1)
        if (usable(g, terminals, set & ~bit(lowest(m))))
            return false;
    return true;
}

/// Enumerates connected vertex sets of `allowed` containing `root` as their
/// smallest member, each exactly once; growth stops at the first set that
/// dominates the terminals.
class ConnectedSetEnumerator {
public:
    ConnectedSetEnumerator(const Graph &g, VertexMask terminals, Budget &budget, std::vector<VertexMask> &out)
        : g_(g), terminals_(terminals), budget_(budget), out_(out) {}

    void run(Vertex root, VertexMask allowed)
    {
        allowed_ = allowed;
        grow(bit(root), g_.neighbours(root) & allowed_, bit(root), g_.neighbours(root));
    }

private:
    void grow(VertexMask current, VertexMask extension, VertexMask banned, VertexMask dominated)
    {
        budget_.tick();
        if ((terminals_ & ~dominated) == 0) {
            out_.push_back(current);
            return;
        }
        while (extension) {
            const Vertex v = lowest(extension);
            extension &= extension - 1;
            banned |= bit(v);
            const VertexMask fresh = g_.neighbours(v) & allowed_ & ~banned & ~extension;
            grow(current | bit(v), extension | fresh, banned, dominated | g_.neighbours(v));
        }
    }

    const Graph &g_;
    VertexMask terminals_;
    Budget &budget_;
    std::vector<VertexMask> &out_;
    VertexMask allowed_ = 0;
};

std::vector<VertexMask> enumerate_minimal(const Graph &g, VertexMask terminals, Budget &budget)
{
    const VertexMask free = g.vertices() & ~terminals;
    std::vector<VertexMask> found;
    ConnectedSetEnumerator enumerate(g, terminals, budget, found);
    for (VertexMask m = free; m; m &= m - 1) {
        const Vertex root = lowest(m);
        enumerate.run(root, free & ~low_mask(root + 1));
    }
    std::erase_if(found, [&](VertexMask c) { return !is_minimal(g, terminals, c); });
    std::sort(found.begin(), found.end(), [](VertexMask a, VertexMask b) {
        const auto ka = std::make_tuple(lowest(a), popcount(a), a);
        const auto kb = std::make_tuple(lowest(b), popcount(b), b);
        return ka < kb;
    });
    return found;
}

/// Branch and bound over families of pairwise disjoint internal sets.
/// Vertices are decided in ascending order: the lowest undecided vertex
/// either starts one of the sets whose minimum it is, or stays unused.
class PackingSearch {
public:
    PackingSearch(const Graph &g, VertexMask terminals, std::vector<VertexMask> candidates, Budget &budget)
        : g_(g), budget_(budget), by_min_(kMaxVertices)
    {
        for (VertexMask m = terminals; m; m &= m - 1)
            terminal_rows_.push_back(g.neighbours(lowest(m)));
        for (VertexMask c : candidates) {
            by_min_[lowest(c)].push_back(c);
            useful_ |= c;
            min_size_ = std::min(min_size_, popcount(c));
        }
    }

    /// Best packing found, stopping as soon as `target` sets are packed.
    std::vector<VertexMask> run(int target)
    {
        target_ = target;
        best_.clear();
        chosen_.clear();
        done_ = target_ <= 0 || useful_ == 0;
        if (!done_)
            dfs(useful_);
        return best_;
    }

private:
    int bound(VertexMask avail) const
    {
        int b = popcount(avail) / min_size_;
        for (VertexMask row : terminal_rows_)
            b = std::min(b, popcount(row & avail));
        return b;
    }

    void dfs(VertexMask avail)
    {
        budget_.tick();
        if (chosen_.size() > best_.size()) {
            best_ = chosen_;
            if (static_cast<int>(best_.size()) >= target_) {
                done_ = true;
                return;
            }
        }
        if (!avail || static_cast<int>(chosen_.size()) + bound(avail) <= static_cast<int>(best_.size()))
            return;
        const Vertex v = lowest(avail);
        for (VertexMask c : by_min_[v]) {
            if (c & ~avail)
                continue;
            chosen_.push_back(c);
            dfs(avail & ~c);
            chosen_.pop_back();
            if (done_)
                return;
        }
        dfs(avail & ~bit(v));
    }

    const Graph &g_;
    Budget &budget_;
    std::vector<std::vector<VertexMask>> by_min_;
    std::vector<VertexMask> terminal_rows_;
    VertexMask useful_ = 0;
    int min_size_ = std::numeric_limits<int>::max();
    int target_ = 0;
    bool done_ = false;
    std::vector<VertexMask> chosen_, best_;
};

struct LocalSearchOutcome {
    int tau = 0;
    std::vector<VertexMask> internal_sets;
    bool direct_edge = false;
    int upper_bound = 0;
};

/// Exact when the returned tau is below `limit`; otherwise only tau >= limit is known.
LocalSearchOutcome search_local(const Graph &g, const VertexSet &s, int limit, Budget &budget)
{
    LocalSearchOutcome out;
    const VertexMask terminals = s.mask();
    if (static_cast<int>(s.size()) == g.order())
        return out;
    out.upper_bound = upper_bound_tau(g, s);
    const int target = std::min(out.upper_bound, limit);
    if (target <= 0)
        return out;
    out.direct_edge = s.size() == 2 && g.adjacent(s[0], s[1]);
    const int direct = out.direct_edge ? 1 : 0;
    PackingSearch search(g, terminals, enumerate_minimal(g, terminals, budget), budget);
    out.internal_sets = search.run(target - direct);
    out.tau = static_cast<int>(out.internal_sets.size()) + direct;
    return out;
}

TreePacking make_witness(const Graph &g, const VertexSet &s, const LocalSearchOutcome &found)
{
    TreePacking p;
    p.terminals = s;
    if (found.direct_edge)
        p.trees.push_back(tree_from_internal_set(g, s, {}));
    for (VertexMask internal : found.internal_sets)
        p.trees.push_back(tree_from_internal_set(g, s, VertexSet::from_mask(internal)));
    return p;
}

} // namespace

std::vector<VertexMask> minimal_internal_sets(const Graph &g, VertexMask s)
{
    Budget unlimited(0);
    return enumerate_minimal(g, s, unlimited);
}

VertexSet canonical_internal_set(const PendantTree &t)
{
    return t.internal;
}

PendantTree tree_from_internal_set(const Graph &g, const VertexSet &s, const VertexSet &i)
{
    std::vector<std::string> problems;
    const VertexMask sm = s.mask(), im = i.mask();
    if ((sm | im) & ~g.vertices())
        problems.push_back("vertex outside the graph");
    if (sm & im)
        problems.push_back("internal set meets the terminals in " + VertexSet::from_mask(sm & im).to_string());
    if (!problems.empty())
        throw ReductionError("invalid internal set " + i.to_string() + ": " + problems.front(), problems);

    PendantTree tree;
    tree.terminals = s;
    tree.internal = i;
    std::vector<Edge> edges;

    if (im == 0) {
        if (s.size() == 2 && g.adjacent(s[0], s[1])) {
            tree.edges = EdgeSet{Edge(s[0], s[1])};
            return tree;
        }
        problems.push_back("empty internal set needs two adjacent terminals");
        throw ReductionError("invalid internal set {}: " + problems.front(), problems);
    }

    if (!induces_connected(g, im))
        problems.push_back("internal set " + i.to_string() + " does not induce a connected subgraph");
    for (Vertex t : s)
        if (!(g.neighbours(t) & im))
            problems.push_back("terminal " + std::to_string(t) + " has no neighbour in the internal set");
    if (!problems.empty())
        throw ReductionError("invalid internal set " + i.to_string() + ": " + problems.front(), problems);

    VertexMask seen = bit(i[0]);
    std::vector<Vertex> queue{i[0]};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex a = queue[head];
        for (VertexMask m = g.neighbours(a) & im & ~seen; m; m &= m - 1) {
            const Vertex b = lowest(m);
            seen |= bit(b);
            edges.emplace_back(a, b);
            queue.push_back(b);
        }
    }
    for (Vertex t : s)
        edges.emplace_back(t, lowest(g.neighbours(t) & im));
    tree.edges = EdgeSet(std::move(edges));
    return tree;
}

int upper_bound_tau(const Graph &g, const VertexSet &s)
{
    const VertexMask sm = checked_terminals(g, s);
    const int k = static_cast<int>(s.size());
    const int n = g.order();
    const int direct = (k == 2 && g.adjacent(s[0], s[1])) ? 1 : 0;
    int bound = n - k + direct;
    if (sm != g.vertices())
        bound = std::min(bound, boundary_edge_count(g, sm) / k + direct);
    for (Vertex v : s)
        bound = std::min(bound, g.degree(v));
    return std::max(bound, 0);
}

LocalResult local_tau(const Graph &g, const VertexSet &s, const SolverOptions &options)
{
    check_order(g, options);
    checked_terminals(g, s);
    Budget budget(options.node_budget);
    const auto found = search_local(g, s, std::numeric_limits<int>::max(), budget);
    LocalResult result;
    result.tau = found.tau;
    result.upper_bound_used = static_cast<int>(s.size()) == g.order() ? 0 : found.upper_bound;
    result.witness = make_witness(g, s, found);
    result.nodes_explored = budget.used();
    return result;
}

GlobalResult tau_k(const Graph &g, int k, const SolverOptions &options)
{
    check_order(g, options);
    const int n = g.order();
    if (k < 2 || k > n)
        throw std::invalid_argument("k must lie in 2..n");

    GlobalResult result;
    result.k = k;

    std::vector<Vertex> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        combo[i] = i;
    auto advance = [&]() {
        int i = k - 1;
        while (i >= 0 && combo[i] == n - k + i)
            --i;
        if (i < 0)
            return false;
        ++combo[i];
        for (int j = i + 1; j < k; ++j)
            combo[j] = combo[j - 1] + 1;
        return true;
    };

    if (k == n) {
        result.minimizing_set = VertexSet(combo);
        result.witness.terminals = result.minimizing_set;
        return result;
    }
    if (!is_connected(g)) {
        // The first k-set that is not inside one component admits no tree.
        const auto parts = components(g);
        do {
            const VertexMask m = VertexSet(combo).mask();
            if (std::none_of(parts.begin(), parts.end(), [&](VertexMask c) { return (m & ~c) == 0; }))
                break;
        } while (advance());
        result.minimizing_set = VertexSet(combo);
        result.witness.terminals = result.minimizing_set;
        return result;
    }

    Budget budget(options.node_budget);
    int best = std::numeric_limits<int>::max();
    do {
        ++result.subsets_evaluated;
        const VertexSet s(combo);
        const auto found = search_local(g, s, best, budget);
        if (found.tau < best) {
            best = found.tau;
            result.minimizing_set = s;
            result.witness = make_witness(g, s, found);
        }
    } while (best > 0 && advance());

    result.tau_k = best;
    result.nodes_explored = budget.used();
    return result;
}

} // namespace pendant_tc
