#include "eggraph/io.hpp"

#include "eggraph/error.hpp"

#include <fstream>
#include <sstream>

namespace eggraph {
namespace {

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return make_rational(value.get<std::int64_t>());
  if (value.is_number()) {
    // JSON numbers lose exactness once parsed as double; go through the
    // shortest round-trip decimal text instead of the binary value.
    std::ostringstream text;
    text << value;
    return parse_rational(text.str());
  }
  throw InvalidArgument("expected a number or numeric string, got " + value.dump());
}

template <typename T>
T required(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    throw InvalidArgument(std::string("missing field '") + key + "'");
  }
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad field '") + key + "': " + e.what());
  }
}

RoleKind role_kind_from(const std::string& family, const std::string& name) {
  static const std::pair<const char*, RoleKind> fcsh[] = {
      {"K", RoleKind::FcshLadder}, {"g", RoleKind::FcshAnchor}, {"H", RoleKind::FcshHub},
      {"I", RoleKind::FcshInner},  {"J", RoleKind::FcshOuter},  {"F", RoleKind::FcshFeeler}};
  static const std::pair<const char*, RoleKind> hdpd[] = {
      {"K", RoleKind::HdpdLadder},   {"g_R", RoleKind::HdpdReset},       {"g_D", RoleKind::HdpdGuard},
      {"g_C", RoleKind::HdpdSource}, {"H", RoleKind::HdpdHubLeaf},       {"I", RoleKind::HdpdGuardLeaf},
      {"J", RoleKind::HdpdBridge}};
  static const std::pair<const char*, RoleKind> tree[] = {
      {"root", RoleKind::TreeRoot}, {"special", RoleKind::TreeSpecial}, {"ordinary", RoleKind::TreeOrdinary}};
  auto lookup = [&](const auto& table) -> std::optional<RoleKind> {
    for (const auto& [key, kind] : table) {
      if (name == key) return kind;
    }
    return std::nullopt;
  };
  std::optional<RoleKind> kind;
  if (family == "fcsh") kind = lookup(fcsh);
  if (family == "hdpd") kind = lookup(hdpd);
  if (family == "tree") kind = lookup(tree);
  if (!kind) throw InvalidArgument("unknown role '" + name + "' for family '" + family + "'");
  return *kind;
}

}  // namespace

Json graph_to_json(const Graph& graph) {
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  return Json{{"n", graph.size()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& json) {
  const auto n = required<std::int64_t>(json, "n");
  if (n < 0) throw InvalidArgument("negative vertex count");
  const auto raw = required<std::vector<std::vector<std::int64_t>>>(json, "edges");
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    if (e.size() != 2 || e[0] < 0 || e[1] < 0) throw InvalidArgument("edges must be pairs of vertex indices");
    edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Json params_to_json(const GameParams& p) {
  return Json{{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)}, {"d", to_string(p.d)}};
}

GameParams params_from_json(const Json& json) {
  GameParams p;
  for (auto [key, field] : {std::pair{"a", &p.a}, {"b", &p.b}, {"c", &p.c}, {"d", &p.d}}) {
    if (!json.is_object() || !json.contains(key)) throw InvalidArgument(std::string("missing payoff '") + key + "'");
    *field = rational_from_json(json.at(key));
  }
  return p;
}

Json role_to_json(const Role& role) {
  Json out{{"role", to_string(role.kind)}};
  if (role.rung != kUnset) out["rung"] = role.rung;
  if (role.column != kUnset) out["column"] = role.column;
  if (role.gadget != kUnset) out["gadget"] = role.gadget;
  if (role.level != kUnset) out["level"] = role.level;
  if (role.branch != kUnset) out["branch"] = role.branch;
  if (role.anchor != kUnset) out["anchor"] = role.anchor;
  return out;
}

Role role_from_json(const Json& json, ConstructionKind family) {
  Role role;
  role.kind = role_kind_from(std::string(to_string(family)), required<std::string>(json, "role"));
  auto optional_int = [&](const char* key) {
    return json.contains(key) ? json.at(key).get<std::int32_t>() : kUnset;
  };
  role.rung = optional_int("rung");
  role.column = optional_int("column");
  role.gadget = optional_int("gadget");
  role.level = optional_int("level");
  role.branch = optional_int("branch");
  role.anchor = optional_int("anchor");
  return role;
}

Json instance_to_json(const ConstructedInstance& inst) {
  Json roles = Json::array();
  for (const Role& role : inst.roles) roles.push_back(role_to_json(role));
  Json params = Json::object();
  for (const auto& [name, value] : inst.structural_params) params[name] = value;
  return Json{{"kind", to_string(inst.kind)},
              {"graph", graph_to_json(inst.graph)},
              {"x0", inst.x0.to_string()},
              {"roles", std::move(roles)},
              {"structural_params", std::move(params)},
              {"predicted_period", inst.predicted_period}};
}

ConstructedInstance instance_from_json(const Json& json) {
  ConstructedInstance inst;
  inst.kind = parse_construction_kind(required<std::string>(json, "kind"));
  if (!json.contains("graph")) throw InvalidArgument("missing field 'graph'");
  inst.graph = graph_from_json(json.at("graph"));
  inst.x0 = StrategyVector::from_string(required<std::string>(json, "x0"));
  if (inst.x0.size() != inst.graph.size()) throw InvalidArgument("x0 length does not match the graph");
  if (!json.contains("roles") || !json.at("roles").is_array()) throw InvalidArgument("missing field 'roles'");
  for (const Json& role : json.at("roles")) inst.roles.push_back(role_from_json(role, inst.kind));
  if (inst.roles.size() != inst.graph.size()) throw InvalidArgument("roles do not cover every vertex");
  inst.structural_params = required<std::map<std::string, std::int64_t>>(json, "structural_params");
  inst.predicted_period = required<std::size_t>(json, "predicted_period");
  return inst;
}

Json certificate_to_json(const Certificate& cert) {
  Json inequalities = Json::array();
  for (const auto& i : cert.inequalities) {
    inequalities.push_back({{"label", i.label},
                            {"lhs", to_string(i.lhs)},
                            {"rhs", to_string(i.rhs)},
                            {"residual", to_string(i.residual())},
                            {"holds", i.holds()}});
  }
  Json params = Json::object();
  for (const auto& [name, value] : cert.structural_params) params[name] = value;
  return Json{{"kind", to_string(cert.kind)},
              {"params", params_to_json(cert.params)},
              {"structural_params", std::move(params)},
              {"inequalities", std::move(inequalities)},
              {"flags", cert.flags},
              {"holds", cert.holds()}};
}

Json trajectory_to_json(const TrajectoryReport& report) {
  Json states = Json::array();
  for (const auto& s : report.states) states.push_back(s.to_string());
  return Json{{"initial_state", report.initial_state.to_string()},
              {"transient", report.transient},
              {"minimal_period", report.minimal_period},
              {"states", std::move(states)},
              {"cooperator_counts", report.cooperator_counts}};
}

Json verification_to_json(const VerificationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json entry{{"time", v.time}, {"invariant", v.invariant}, {"expected", v.expected}, {"observed", v.observed}};
    entry["vertex"] = v.vertex ? Json(*v.vertex) : Json(nullptr);
    violations.push_back(std::move(entry));
  }
  return Json{{"ok", report.ok()},
              {"checked", report.checked},
              {"violations", std::move(violations)},
              {"truncated", report.truncated},
              {"observed_transient", report.observed_transient},
              {"observed_period", report.observed_period}};
}

std::string series_to_csv(const std::vector<std::pair<std::size_t, std::size_t>>& series) {
  std::string out = "t,count\n";
  for (const auto& [t, count] : series) out += std::to_string(t) + "," + std::to_string(count) + "\n";
  return out;
}

std::string to_dot(const Graph& graph, const StrategyVector& state, const std::vector<Role>* roles) {
  if (state.size() != graph.size()) throw InvalidArgument("state length does not match the graph");
  std::string out = "graph G {\n  node [shape=circle, style=filled, fontsize=8];\n";
  for (Vertex v = 0; v < graph.size(); ++v) {
    const bool coop = state.cooperates(v);
    out += "  " + std::to_string(v) + " [fillcolor=" + (coop ? "black" : "white") +
           ", fontcolor=" + (coop ? "white" : "black");
    if (roles != nullptr && v < roles->size()) {
      const Role& role = (*roles)[v];
      std::string label(to_string(role.kind));
      if (role.rung != kUnset) label += std::to_string(role.rung);
      if (role.level != kUnset) label += "@" + std::to_string(role.level);
      out += ", label=\"" + label + "\"";
    }
    out += "];\n";
  }
  for (const auto& [u, v] : graph.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

void write_json_file(const std::filesystem::path& path, const Json& json) {
  write_text_file(path, json.dump(2) + "\n");
}

}  // namespace eggraph
