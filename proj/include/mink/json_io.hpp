#pragma once
// JSON (de)serialization for the library's value types. Readers validate
// shape and ranges and throw std::invalid_argument whose message names the
// offending field, so callers can surface precise input errors.

#include <mink/edge_polytope.hpp>
#include <mink/graph.hpp>
#include <mink/polytope.hpp>
#include <mink/semigroup.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace mink {

// Parse raw text; `what` names the input (e.g. a file path) in error messages.
nlohmann::json parse_json_text(const std::string& text, const std::string& what);

// Whole file -> text; throws std::invalid_argument if unreadable.
std::string read_text_file(const std::string& path);

// {"ambient_dim": N, "generators": [[int, ...], ...]}
LatticePolytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const LatticePolytope& p);

// {"n": d, "edges": [[i, j], ...]} with 1-indexed vertices
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// {"graph": <graph>, "weights": [[[i, j], "p/q"], ...]}
EdgeWeighting weighting_from_json(const nlohmann::json& j);
nlohmann::json weighting_to_json(const EdgeWeighting& w);

// {"property": ..., "verified_up_to_k": K, "verdict": ...,
//  "counterexample": {"k": ..., "alpha": [...]} | null}
nlohmann::json report_to_json(const CheckReport& report);

nlohmann::json point_to_json(const LatticePoint& x);
nlohmann::json points_to_json(const std::vector<LatticePoint>& points);

}  // namespace mink
