#include "pendant_tc/families.hpp"
#include "pendant_tc/serialize.hpp"

#include <doctest.h>

using namespace pendant_tc;

TEST_CASE("packings round-trip through JSON")
{
    const Graph g = build(FamilySpec::complete(6));
    const auto r = local_tau(g, {0, 1, 2});
    const Json j = to_json(r.witness);
    CHECK(j.at("terminals") == Json::array({0, 1, 2}));
    CHECK(j.at("trees").size() == 3);
    const TreePacking back = packing_from_json(Json::parse(j.dump()));
    CHECK(back == r.witness);
    CHECK(verify_packing(g, back).accepted);
}

TEST_CASE("malformed packings are rejected")
{
    CHECK_THROWS(packing_from_json(Json::parse(R"({"trees": []})")));
    CHECK_THROWS(packing_from_json(Json::parse(R"({"terminals": [0, 1], "trees": [{"internal": [], "edges": [[0]]}]})")));
    CHECK_THROWS(packing_from_json(Json::parse(R"({"terminals": [0, 1], "trees": [{"internal": [], "edges": [[0, 0]]}]})")));
    CHECK_THROWS(packing_from_json(Json::parse(R"({"terminals": "x", "trees": []})")));
}

TEST_CASE("records serialize with stable keys")
{
    const auto bound = necessary_upper_bounds(build(FamilySpec::complete(5)), 3).front();
    const Json b = to_json(bound);
    CHECK(b.at("rule") == "min-degree");
    CHECK(b.at("kind") == "necessary");
    CHECK(b.at("value") == 2);

    const NGRecord rec = ng_evaluate(build(FamilySpec::complete(6)), 3);
    const Json n = to_json(rec);
    CHECK(n.begin().key() == "k");
    CHECK(n.at("tau_complement") == 0);
    CHECK(n.at("attainment") == "sum-upper");

    NearNRow row;
    row.k = 5;
    CHECK(to_json(row).at("predicted").is_null());
    CHECK(to_json(LargeTauVerdict{Prediction::Lower, "e", true}).at("predicted") == "lower");
    CHECK(to_json(ZeroVerdict{}).at("zero") == false);

    PackingVerdict v;
    v.accepted = false;
    v.violations.push_back({"vertex shared", 1, "x"});
    CHECK(to_json(v).at("violations").at(0).at("code") == "vertex shared");
}
