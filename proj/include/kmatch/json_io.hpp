#pragma once

#include <json.hpp>
#include <string>

#include "kmatch/polytope.hpp"
#include "kmatch/types.hpp"

namespace kmatch::io {

// All documents are UTF-8 JSON with keys emitted in a fixed order so output
// diffs are stable. Rationals serialize as "p/q" strings in lowest terms with
// q >= 1; integer-valued point entries serialize as bare JSON numbers.
using Json = nlohmann::ordered_json;

/// {"m": 2, "n": 2, "edges": [[0, 0], [1, 1]]}
BipartiteGraph parse_graph(const Json& doc);
Json graph_to_json(const BipartiteGraph& g);

/// {"rows": [[1, "1/2"], [0, 0]]}
RationalPoint parse_point(const Json& doc);
/// Same schema restricted to integer entries.
IntegerPoint parse_integer_point(const Json& doc);
Json point_to_json(const RationalPoint& x);
Json point_to_json(const IntegerPoint& x);

/// {"form": "dilate"|"convex", "terms": [{"weight": "p/q", "matching": [[i, j], ...]}, ...]}
Json decomposition_to_json(const Decomposition& d);
Decomposition parse_decomposition(const Json& doc);

Json matching_to_json(const Matching& m);
Json verdict_to_json(const MembershipVerdict& verdict);
Json violation_to_json(const Violation& violation);
Json certificate_to_json(const MidpointCertificate& certificate);

Json load_file(const std::string& path);

}  // namespace kmatch::io
