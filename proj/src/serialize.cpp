#include "pendant_tc/serialize.hpp"

namespace pendant_tc {

Json to_json(const VertexSet &s)
{
    return Json(s.members());
}

Json to_json(const TreePacking &p)
{
    Json trees = Json::array();
    for (const auto &t : p.trees) {
        Json edges = Json::array();
        for (const auto &e : t.edges)
            edges.push_back({e.u, e.v});
        trees.push_back({{"internal", to_json(t.internal)}, {"edges", std::move(edges)}});
    }
    return {{"terminals", to_json(p.terminals)}, {"trees", std::move(trees)}};
}

TreePacking packing_from_json(const Json &j)
{
    TreePacking p;
    p.terminals = VertexSet(j.at("terminals").get<std::vector<Vertex>>());
    for (const auto &t : j.at("trees")) {
        PendantTree tree;
        tree.terminals = p.terminals;
        tree.internal = VertexSet(t.at("internal").get<std::vector<Vertex>>());
        std::vector<Edge> edges;
        for (const auto &e : t.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("edge must be a pair of vertices");
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        tree.edges = EdgeSet(std::move(edges));
        p.trees.push_back(std::move(tree));
    }
    return p;
}

Json to_json(const PackingVerdict &v)
{
    Json violations = Json::array();
    for (const auto &x : v.violations)
        violations.push_back({{"code", x.code}, {"tree", x.tree}, {"detail", x.detail}});
    return {{"accepted", v.accepted}, {"boundary_exact", v.boundary_exact}, {"violations", std::move(violations)}};
}

Json to_json(const BoundResult &b)
{
    Json j{{"rule", to_string(b.rule)}, {"kind", to_string(b.kind)}, {"value", b.value}};
    if (!b.detail.empty())
        j["detail"] = b.detail;
    return j;
}

Json to_json(const LargeTauVerdict &v)
{
    return {{"predicted", to_string(v.predicted)}, {"advisory", v.advisory}, {"evidence", v.evidence}};
}

Json to_json(const ZeroVerdict &v)
{
    return {{"zero", v.zero()}, {"reason", to_string(v.reason)}, {"kappa", v.kappa}, {"delta", v.delta}};
}

Json to_json(const NGRecord &r)
{
    return {
        {"k", r.k},
        {"tau_g", r.tau_g},
        {"tau_complement", r.tau_gbar},
        {"sum", r.sum},
        {"product", r.product},
        {"sum_upper", r.sum_upper},
        {"product_upper_halved", r.product_upper_halved},
        {"product_upper_quarter", r.product_upper_quarter},
        {"attainment", to_string(r.attainment)},
    };
}

Json to_json(const NearNRow &r)
{
    Json j{{"k", r.k}};
    j["predicted"] = r.predicted ? Json(*r.predicted) : Json(nullptr);
    j["solver"] = r.solver;
    j["rule"] = r.rule;
    j["agree"] = r.agrees();
    return j;
}

Json to_json(const NearNStatement &s)
{
    return {{"k", s.k}, {"sum", s.sum}, {"either_complete", s.either_complete}, {"claim", s.claim}, {"holds", s.holds}};
}

} // namespace pendant_tc
