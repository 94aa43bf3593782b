#pragma once

#include "json.hpp"

#include "kohler_sqs/kohler_graph.hpp"
#include "kohler_sqs/sqs.hpp"

namespace kohler {

using nlohmann::json;

// Elements are written as coordinate arrays in the normalized group.
json element_to_json(const Group& g, Element x);
Element element_from_json(const Group& g, const json& j);
json subset_to_json(const Group& g, const Subset& s);
Subset subset_from_json(const Group& g, const json& j);

// {"group":[..], "h0":[..], "blocks":[[[..],..],..], "provenance":["B0"|"factor:<i>",..]}
json design_to_json(const Design& d);

// Accepts the format above. "group" may list any cyclic factors; coordinates
// are read with respect to those factors. "h0" and "provenance" are optional.
// The returned blocks are sorted, with provenance permuted alongside. Throws
// InvalidInput or InvalidSpec on malformed content.
Design design_from_json(const json& j);

json report_to_json(const Group& g, const VerificationReport& r);
json stats_to_json(const Group& g, const GraphStats& s);
json graph_to_json(const KohlerGraph& kg);
json failure_to_json(const Group& g, const ConstructionFailure& f);
json verdict_to_json(const Group& g, const ExistenceVerdict& v);

}  // namespace kohler
