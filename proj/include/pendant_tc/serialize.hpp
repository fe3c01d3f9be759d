#pragma once

#include "pendant_tc/characterizations.hpp"
#include "pendant_tc/closed_forms.hpp"
#include "pendant_tc/nordhaus_gaddum.hpp"
#include "pendant_tc/solver.hpp"

#include <json.hpp>

namespace pendant_tc {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet &s);
/// {"terminals": [...], "trees": [{"internal": [...], "edges": [[u, v], ...]}]}
Json to_json(const TreePacking &p);
Json to_json(const PackingVerdict &v);
Json to_json(const BoundResult &b);
Json to_json(const LargeTauVerdict &v);
Json to_json(const ZeroVerdict &v);
Json to_json(const NGRecord &r);
Json to_json(const NearNRow &r);
Json to_json(const NearNStatement &s);

/// Inverse of to_json(TreePacking). Throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
TreePacking packing_from_json(const Json &j);

} // namespace pendant_tc
