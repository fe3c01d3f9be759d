#include "pendant_tc/characterizations.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <stdexcept>

namespace pendant_tc {

std::string to_string(Prediction p)
{
    switch (p) {
    case Prediction::ExactlyNMinusK: return "n-k";
    case Prediction::ExactlyNMinusKMinus1: return "n-k-1";
    case Prediction::ExactlyNMinusKMinus2: return "n-k-2";
    case Prediction::Higher: return "higher";
    case Prediction::Lower: return "lower";
    case Prediction::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::string to_string(ZeroReason r)
{
    switch (r) {
    case ZeroReason::LowConnectivity: return "low-connectivity";
    case ZeroReason::TightMinDegree: return "tight-min-degree";
    case ZeroReason::Undecided: return "undecided";
    }
    return "?";
}

std::optional<int> predicted_value(const LargeTauVerdict &v, int n, int k)
{
    switch (v.predicted) {
    case Prediction::ExactlyNMinusK: return n - k;
    case Prediction::ExactlyNMinusKMinus1: return n - k - 1;
    case Prediction::ExactlyNMinusKMinus2: return n - k - 2;
    default: return std::nullopt;
    }
}

namespace {

LargeTauVerdict not_applicable(std::string why)
{
    return {Prediction::NotApplicable, std::move(why), false};
}

/// Common hypotheses: connected, 3 <= k, and the class value n - k - drop is
/// at least 1 (below that every graph of the order shares the value).
std::optional<LargeTauVerdict> check_hypotheses(const Graph &g, int k, int drop, int min_order)
{
    const int n = g.order();
    if (k < 3 || k > n)
        return not_applicable("k = " + std::to_string(k) + " outside 3..n");
    if (n < min_order)
        return not_applicable("n = " + std::to_string(n) + " is below " + std::to_string(min_order));
    if (n - k - drop < 1)
        return not_applicable("class value n-k-" + std::to_string(drop) + " = " + std::to_string(n - k - drop) +
                              " is not positive");
    if (!is_connected(g))
        return not_applicable("graph is disconnected");
    return std::nullopt;
}

/// Number of edges when every vertex has degree <= 1, otherwise -1.
int matching_size(const Graph &h)
{
    return max_degree(h) <= 1 ? h.edge_count() : -1;
}

std::string shape_name(const ComponentShape &c)
{
    switch (c.kind) {
    case ShapeKind::IsolatedVertex: return "K1";
    case ShapeKind::Path: return "P" + std::to_string(c.order());
    case ShapeKind::Cycle: return "C" + std::to_string(c.order());
    case ShapeKind::Other: return "?" + std::to_string(c.order());
    }
    return "?";
}

struct Slot {
    bool cycle = false;
    int capacity = 0;
    int used = 0;
    bool taken_by_cycle = false;
};

struct HostSlots {
    std::vector<Slot> slots;
    int edge_slots = 0;
};

HostSlots slots_of(const HostFamily &host, int n)
{
    HostSlots out;
    auto cycle = [&](int len) { out.slots.push_back({true, len, 0, false}); };
    switch (host.kind) {
    case HostKind::TwoCycles:
        cycle(host.i);
        cycle(host.j);
        break;
    case HostKind::CycleAndMatching:
        cycle(host.i);
        out.edge_slots = (n - host.i) / 2;
        break;
    case HostKind::PathAndMatching:
        out.slots.push_back({false, 5, 0, false});
        out.edge_slots = (n - 5) / 2;
        break;
    case HostKind::SingleCycle: cycle(host.i); break;
    case HostKind::CycleFiveAndEdge:
        cycle(5);
        out.edge_slots = 1;
        break;
    case HostKind::PathFiveAndEdge:
        out.slots.push_back({false, 5, 0, false});
        out.edge_slots = 1;
        break;
    }
    return out;
}

bool place(std::vector<Slot> &slots, const std::vector<ComponentShape> &parts, std::size_t next)
{
    if (next == parts.size())
        return true;
    const ComponentShape &c = parts[next];
    for (Slot &s : slots) {
        if (c.kind == ShapeKind::Cycle) {
            if (!s.cycle || s.used != 0 || s.capacity != c.order())
                continue;
            s.used = s.capacity;
            s.taken_by_cycle = true;
            if (place(slots, parts, next + 1))
                return true;
            s.used = 0;
            s.taken_by_cycle = false;
        }
        else {
            if (s.taken_by_cycle || s.used + c.order() > s.capacity)
                continue;
            s.used += c.order();
            if (place(slots, parts, next + 1))
                return true;
            s.used -= c.order();
        }
    }
    return false;
}

/// Whether the non-trivial components fit the host. Isolated vertices always
/// fit because the host is padded to the same vertex count.
bool fits(const std::vector<ComponentShape> &shapes, const HostFamily &host, int n)
{
    HostSlots h = slots_of(host, n);
    std::vector<ComponentShape> rest;
    int edges = 0;
    for (const auto &c : shapes) {
        if (c.kind == ShapeKind::IsolatedVertex)
            continue;
        if (c.kind == ShapeKind::Path && c.order() == 2)
            ++edges;
        else
            rest.push_back(c);
    }
    // Single edges go to the matching first; nothing else can use it.
    const int to_pool = std::min(edges, h.edge_slots);
    for (int e = to_pool; e < edges; ++e)
        rest.push_back({ShapeKind::Path, VertexSet{0, 1}});

    int need = 0, have = 0;
    for (const auto &c : rest)
        need += c.order();
    for (const auto &s : h.slots)
        have += s.capacity;
    if (need > have)
        return false;
    std::stable_sort(rest.begin(), rest.end(), [](const auto &a, const auto &b) {
        if ((a.kind == ShapeKind::Cycle) != (b.kind == ShapeKind::Cycle))
            return a.kind == ShapeKind::Cycle;
        return a.order() > b.order();
    });
    return place(h.slots, rest, 0);
}

/// Best count of outside neighbours when j vertices of a path (or cycle) of
/// order m are chosen, for j = 0..m. Infeasible counts are INT_MIN / 4.
std::vector<int> outside_profile(int m, bool cyclic)
{
    constexpr int kNeg = INT_MIN / 4;
    std::vector<int> best(static_cast<std::size_t>(m) + 1, kNeg);
    if (m == 1) {
        best[0] = best[1] = 0;
        return best;
    }
    for (int c0 = 0; c0 < 2; ++c0) {
        for (int c1 = 0; c1 < 2; ++c1) {
            // table[a][b][j]: state (c_{i-1}, c_i) with j chosen so far.
            using Row = std::vector<int>;
            std::array<std::array<Row, 2>, 2> table;
            for (auto &x : table)
                for (auto &r : x)
                    r.assign(static_cast<std::size_t>(m) + 1, kNeg);
            table[c0][c1][c0 + c1] = cyclic ? 0 : (!c0 && c1);
            for (int i = 1; i + 1 < m; ++i) {
                std::array<std::array<Row, 2>, 2> next;
                for (auto &x : next)
                    for (auto &r : x)
                        r.assign(static_cast<std::size_t>(m) + 1, kNeg);
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int j = 0; j <= m; ++j) {
                            const int v = table[a][b][j];
                            if (v == kNeg)
                                continue;
                            for (int x = 0; x < 2 && j + x <= m; ++x) {
                                const int gain = !b && (a || x);
                                int &slot = next[b][x][j + x];
                                slot = std::max(slot, v + gain);
                            }
                        }
                table = std::move(next);
            }
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int j = 0; j <= m; ++j) {
                        int v = table[a][b][j];
                        if (v == kNeg)
                            continue;
                        if (cyclic) {
                            v += !b && (a || c0);
                            v += !c0 && (b || c1);
                        }
                        else {
                            v += !b && a;
                        }
                        best[j] = std::max(best[j], v);
                    }
        }
    }
    return best;
}

} // namespace

int max_outside_neighbourhood(const Graph &h, int k)
{
    if (max_degree(h) > 2)
        throw std::invalid_argument("outside neighbourhood profile needs maximum degree <= 2");
    if (k < 0 || k > h.order())
        throw std::invalid_argument("k outside 0..n");
    constexpr int kNeg = INT_MIN / 4;
    std::vector<int> total{0};
    for (const auto &c : component_shapes(h)) {
        const auto f = outside_profile(c.order(), c.kind == ShapeKind::Cycle);
        std::vector<int> merged(total.size() + f.size() - 1, kNeg);
        for (std::size_t a = 0; a < total.size(); ++a)
            for (std::size_t b = 0; b < f.size(); ++b)
                if (total[a] != kNeg && f[b] != kNeg)
                    merged[a + b] = std::max(merged[a + b], total[a] + f[b]);
        total = std::move(merged);
    }
    return total[static_cast<std::size_t>(k)];
}

LargeTauVerdict classify_nk(const Graph &g, int k)
{
    if (auto na = check_hypotheses(g, k, 0, 4))
        return *na;
    if (is_complete(g))
        return {Prediction::ExactlyNMinusK, "complete graph", false};
    return {Prediction::Lower, "not complete: " + std::to_string(complement(g).edge_count()) + " missing edges", false};
}

LargeTauVerdict classify_nk1(const Graph &g, int k)
{
    if (auto na = check_hypotheses(g, k, 1, 7))
        return *na;
    const int r = matching_size(complement(g));
    if (r == 0)
        return {Prediction::Higher, "complete graph", false};
    if (r == 1 || r == 2)
        return {Prediction::ExactlyNMinusKMinus1, "complement is " + std::to_string(r) + "K2 plus isolated vertices", false};
    if (r > 2)
        return {Prediction::Lower, "complement is a matching of " + std::to_string(r) + " edges", false};
    return {Prediction::Lower, "complement has a vertex of degree >= 2", false};
}

std::vector<HostFamily> listed_hosts(int k, int n, HostReading reading)
{
    if (k != 3 && k != 4)
        throw std::invalid_argument("host lists exist for k = 3 and k = 4 only");
    std::vector<HostFamily> hosts{
        {HostKind::TwoCycles, 3, 3},
        {HostKind::TwoCycles, 3, 4},
        {HostKind::TwoCycles, 4, 4},
        {HostKind::CycleAndMatching, 3, 0},
        {HostKind::CycleAndMatching, 4, 0},
    };
    if (k == 3) {
        hosts.push_back({HostKind::PathAndMatching, 0, 0});
        hosts.push_back({HostKind::SingleCycle, 5, 0});
    }
    else {
        hosts.push_back({reading == HostReading::AsStated ? HostKind::CycleFiveAndEdge : HostKind::PathFiveAndEdge, 0, 0});
    }
    hosts.push_back({HostKind::SingleCycle, 6, 0});
    hosts.push_back({HostKind::SingleCycle, 7, 0});
    std::erase_if(hosts, [&](const HostFamily &h) { return h.min_order() > n; });
    return hosts;
}

LargeTauVerdict embeds_in_listed_family(const Graph &gbar, int k, HostReading reading)
{
    const int n = gbar.order();
    const auto hosts = listed_hosts(k, n, reading);
    if (max_degree(gbar) > 2)
        return {Prediction::Lower, "complement has maximum degree " + std::to_string(max_degree(gbar)), false};
    const auto shapes = component_shapes(gbar);
    std::string parts;
    for (const auto &c : shapes) {
        if (c.kind == ShapeKind::IsolatedVertex)
            continue;
        parts += (parts.empty() ? "" : "+") + shape_name(c);
    }
    if (parts.empty())
        parts = "edgeless";
    for (const auto &h : hosts)
        if (fits(shapes, h, n))
            return {Prediction::ExactlyNMinusKMinus2, "complement " + parts + " embeds in " + h.name(), false};
    return {Prediction::Lower, "complement " + parts + " embeds in no listed host", false};
}

LargeTauVerdict classify_nk2(const Graph &g, int k, const Nk2Options &options)
{
    const int n = g.order();
    if (auto na = check_hypotheses(g, k, 2, 0))
        return *na;
    const Graph gbar = complement(g);
    const int r = matching_size(gbar);
    if (r == 0)
        return {Prediction::Higher, "complete graph", n < 15};
    if (r == 1 || r == 2)
        return {Prediction::Higher, "complement is " + std::to_string(r) + "K2 plus isolated vertices", n < 15};

    if (k <= 4) {
        LargeTauVerdict v = embeds_in_listed_family(gbar, k, options.host_reading);
        v.advisory = n < 15;
        return v;
    }

    LargeTauVerdict v;
    const int delta_bar = max_degree(gbar);
    const int edges = gbar.edge_count();
    if (edges == 2 && delta_bar == 2) {
        v = {Prediction::ExactlyNMinusKMinus2, "complement is P3 plus isolated vertices", false};
    }
    else if (delta_bar > 2) {
        v = {Prediction::Lower, "complement has maximum degree " + std::to_string(delta_bar), false};
    }
    else if (options.outside_reading == OutsideSetReading::NonIsolatedAtMostFour) {
        int touched = 0;
        for (Vertex x = 0; x < n; ++x)
            touched += gbar.degree(x) > 0;
        v.predicted = touched <= 4 ? Prediction::ExactlyNMinusKMinus2 : Prediction::Lower;
        v.evidence = std::to_string(edges) + " complement edges on " + std::to_string(touched) + " non-isolated vertices";
    }
    else {
        const int outside = max_outside_neighbourhood(gbar, k);
        v.predicted = outside <= 4 ? Prediction::ExactlyNMinusKMinus2 : Prediction::Lower;
        v.evidence = std::to_string(edges) + " complement edges; some k-set has " + std::to_string(outside) +
                     " complement neighbours outside it";
    }
    if (n < 15) {
        v.evidence = "n = " + std::to_string(n) + " is below 15; conditions give " + to_string(v.predicted) + " (" +
                     v.evidence + ")";
        v.predicted = Prediction::NotApplicable;
    }
    return v;
}

ZeroVerdict classify_zero(const Graph &g, int k)
{
    if (k < 3 || k > g.order())
        throw std::invalid_argument("k must lie in 3..n");
    if (!is_connected(g))
        throw std::invalid_argument("zero-value conditions need a connected graph");
    ZeroVerdict v;
    v.kappa = vertex_connectivity(g);
    v.delta = min_degree(g);
    if (v.kappa <= k - 2)
        v.reason = ZeroReason::LowConnectivity;
    else if (v.kappa == k - 1 && v.delta == k - 1)
        v.reason = ZeroReason::TightMinDegree;
    return v;
}

std::vector<NearNRow> corollaries_near_n(const Graph &g, const SolverOptions &options)
{
    if (!is_connected(g))
        throw std::invalid_argument("near-n predictions need a connected graph");
    const int n = g.order();
    const bool complete = is_complete(g);
    std::vector<NearNRow> rows;
    for (int k = n; k >= n - 2 && k >= 3; --k) {
        NearNRow row;
        row.k = k;
        if (k == n) {
            row.predicted = 0;
            row.rule = "k = n";
        }
        else if (k == n - 1) {
            row.predicted = complete ? 1 : 0;
            row.rule = complete ? "complete" : "not complete";
        }
        else if (complete) {
            row.predicted = 2;
            row.rule = "complete";
        }
        else if (n >= 7) {
            const int r = matching_size(complement(g));
            const bool near = r == 1 || r == 2;
            row.predicted = near ? 1 : 0;
            row.rule = near ? "complete minus a matching of 1 or 2 edges" : "other";
        }
        else {
            row.rule = "no prediction below n = 7";
        }
        row.solver = tau_k(g, k, options).tau_k;
        rows.push_back(row);
    }
    return rows;
}

} // namespace pendant_tc
