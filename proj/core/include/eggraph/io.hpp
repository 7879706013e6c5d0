#pragma once

#include "eggraph/analysis.hpp"
#include "eggraph/constructions.hpp"
#include "eggraph/dynamics.hpp"
#include "eggraph/game.hpp"
#include "eggraph/graph.hpp"
#include "eggraph/solver.hpp"
#include "eggraph/state.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eggraph {

using Json = nlohmann::json;

/// {"n": int, "edges": [[i, j], ...]}
Json graph_to_json(const Graph& graph);
Graph graph_from_json(const Json& json);

/// {"a": "p/q", "b": ..., "c": ..., "d": ...}; values may also be decimal strings or numbers.
Json params_to_json(const GameParams& params);
GameParams params_from_json(const Json& json);

Json role_to_json(const Role& role);
Role role_from_json(const Json& json, ConstructionKind family);

/// {"kind", "graph", "x0", "roles", "structural_params", "predicted_period"}
Json instance_to_json(const ConstructedInstance& instance);
ConstructedInstance instance_from_json(const Json& json);

Json certificate_to_json(const Certificate& cert);
Json trajectory_to_json(const TrajectoryReport& report);
Json verification_to_json(const VerificationReport& report);

/// "t,count" header followed by one row per step.
std::string series_to_csv(const std::vector<std::pair<std::size_t, std::size_t>>& series);

/// Graphviz rendering; cooperators are filled black, defectors white. Roles,
/// when given, label the vertices.
std::string to_dot(const Graph& graph, const StrategyVector& state,
                   const std::vector<Role>* roles = nullptr);

Json read_json_file(const std::filesystem::path& path);
/// Writes `json.dump(2)` plus a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& json);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace eggraph
