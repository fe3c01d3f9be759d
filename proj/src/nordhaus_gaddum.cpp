#include "pendant_tc/nordhaus_gaddum.hpp"

#include <stdexcept>

namespace pendant_tc {

std::string to_string(Attainment a)
{
    switch (a) {
    case Attainment::SumUpper: return "sum-upper";
    case Attainment::SumLower: return "sum-lower";
    case Attainment::Interior: return "interior";
    }
    return "?";
}

NGRecord ng_evaluate(const Graph &g, int k, const SolverOptions &options)
{
    const int n = g.order();
    if (k < 3 || k > n)
        throw std::invalid_argument("k must lie in 3..n");
    NGRecord r;
    r.n = n;
    r.k = k;
    r.tau_g = tau_k(g, k, options).tau_k;
    r.tau_gbar = tau_k(complement(g), k, options).tau_k;
    r.sum = r.tau_g + r.tau_gbar;
    r.product = r.tau_g * r.tau_gbar;
    r.sum_upper = n - k;
    r.product_upper_halved = ((n - k) / 2) * ((n - k) / 2);
    r.product_upper_quarter = (n - k) * (n - k) / 4;
    if (r.sum == r.sum_upper)
        r.attainment = Attainment::SumUpper;
    else if (r.sum == 0)
        r.attainment = Attainment::SumLower;
    return r;
}

DegreeSpreadCheck check_degree_spread(const Graph &g, const NGRecord &record)
{
    DegreeSpreadCheck c;
    c.premise = record.sum == record.sum_upper;
    c.spread = max_degree(g) - min_degree(g);
    c.holds = !c.premise || c.spread <= record.k - 1;
    return c;
}

DisconnectedSumCheck check_disconnected_sum(const Graph &g, const NGRecord &record)
{
    DisconnectedSumCheck c;
    c.applicable = !is_connected(g) && record.k <= record.n - 1;
    if (!c.applicable)
        return c;
    c.sum_at_upper = record.sum == record.sum_upper;
    c.edgeless = g.edge_count() == 0;
    c.holds = c.sum_at_upper == c.edgeless;
    return c;
}

std::vector<NearNStatement> check_near_n_ng(const Graph &g, const SolverOptions &options)
{
    const int n = g.order();
    if (n < 5)
        throw std::invalid_argument("near-n statements need n >= 5");
    const Graph gbar = complement(g);
    const bool either = is_complete(g) || is_complete(gbar);
    std::vector<NearNStatement> out;
    for (int k = n; k >= n - 2; --k) {
        NearNStatement s;
        s.k = k;
        s.sum = tau_k(g, k, options).tau_k + tau_k(gbar, k, options).tau_k;
        s.either_complete = either;
        if (k == n) {
            s.claim = "sum = 0";
            s.holds = s.sum == 0;
        }
        else if (k == n - 1) {
            s.claim = "sum <= 1, and sum = 1 iff G or its complement is complete";
            s.holds = s.sum <= 1 && (s.sum == 1) == either;
        }
        else {
            s.claim = "sum in {0, 2}, and sum = 2 iff G or its complement is complete";
            s.holds = (s.sum == 0 || s.sum == 2) && (s.sum == 2) == either;
        }
        out.push_back(s);
    }
    return out;
}

} // namespace pendant_tc
