#pragma once

#include <string>

#include <json.hpp>

#include "gtseq/labelings.hpp"
#include "gtseq/monotone.hpp"
#include "gtseq/paths.hpp"
#include "gtseq/patterns.hpp"
#include "gtseq/trees.hpp"

namespace gtseq {

using Json = nlohmann::ordered_json;

Json to_json(const NTree& t);
NTree tree_from_json(const Json& j);
Json to_json(const TreeSequence& s);
TreeSequence tree_sequence_from_json(const Json& j);
std::string tree_to_dot(const NTree& t, const std::string& name = "T");

Json to_json(const GTTreeSequence& s);
GTTreeSequence gt_sequence_from_json(const Json& j);

Json to_json(const GTPattern& p);
/// Validates the rows; a "sign" field, if present, must match.
GTPattern pattern_from_json(const Json& j);

Json to_json(const SSYT& t);
SSYT ssyt_from_json(const Json& j);

Json to_json(const PathFamily& f);
Json to_json(const ExtTriangle& t);
Json to_json(const Violation& v);

}  // namespace gtseq
