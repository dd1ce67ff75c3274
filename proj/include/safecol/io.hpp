#pragma once

// JSON forms used by the command-line tool. Vertex ids are 1-based in JSON.
//
//   graph:     {"boundary_len": l, "internal_count": n, "edges": [[u,v],...],
//               "triangles": [[a,b,c],...]}        ("k" is accepted and ignored)
//   colouring: {"k": k, "colours": [f(v_1), ..., f(v_l)]}
//   verdict:   {"verdict": "bad"|"good"|"neither", "condition": 1..3 | null,
//               "indices": [...], "A": [...]}

#include <json.hpp>

#include "safecol/classify.hpp"
#include "safecol/enumerate.hpp"
#include "safecol/extend.hpp"
#include "safecol/gadgets.hpp"

namespace safecol {

using Json = nlohmann::ordered_json;

Json graph_to_json(const NearTriangulation& g);
/// Throws PreconditionError on a malformed document, GraphError on an invalid graph.
NearTriangulation graph_from_json(const Json& j);

Json colouring_to_json(const CycleColouring& c);
CycleColouring colouring_from_json(const Json& j);

Json full_colouring_to_json(int k, const FullColouring& c);
Json verdict_to_json(const Verdict& v);
Json gadget_to_json(const Gadget& g);
/// Result payload only; scan counts and timings belong under the caller's "meta".
Json probe_to_json(const ProbeVerdict& p);

}  // namespace safecol
