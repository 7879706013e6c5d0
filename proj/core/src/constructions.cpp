#include "eggraph/constructions.hpp"

#include "eggraph/error.hpp"

#include <string>
#include <string_view>

namespace eggraph {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

void require_size(std::int64_t n, std::string_view what) {
  if (n > kMaxConstructionVertices) {
    throw BudgetExhausted(std::string(what) + " construction would have " + std::to_string(n) +
                          " vertices, above the cap of " + std::to_string(kMaxConstructionVertices));
  }
}

Role role(RoleKind kind) { return Role{kind}; }

}  // namespace

std::string_view to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Fcsh: return "fcsh";
    case ConstructionKind::Hdpd: return "hdpd";
    case ConstructionKind::Tree: return "tree";
  }
  return "fcsh";
}

ConstructionKind parse_construction_kind(std::string_view text) {
  if (text == "fcsh") return ConstructionKind::Fcsh;
  if (text == "hdpd") return ConstructionKind::Hdpd;
  if (text == "tree") return ConstructionKind::Tree;
  throw InvalidArgument("unknown construction kind '" + std::string(text) + "'");
}

std::string_view to_string(RoleKind kind) {
  switch (kind) {
    case RoleKind::FcshLadder: return "K";
    case RoleKind::FcshAnchor: return "g";
    case RoleKind::FcshHub: return "H";
    case RoleKind::FcshInner: return "I";
    case RoleKind::FcshOuter: return "J";
    case RoleKind::FcshFeeler: return "F";
    case RoleKind::HdpdLadder: return "K";
    case RoleKind::HdpdReset: return "g_R";
    case RoleKind::HdpdGuard: return "g_D";
    case RoleKind::HdpdSource: return "g_C";
    case RoleKind::HdpdHubLeaf: return "H";
    case RoleKind::HdpdGuardLeaf: return "I";
    case RoleKind::HdpdBridge: return "J";
    case RoleKind::TreeRoot: return "root";
    case RoleKind::TreeSpecial: return "special";
    case RoleKind::TreeOrdinary: return "ordinary";
  }
  return "?";
}

std::int64_t ConstructedInstance::param(const std::string& name) const {
  const auto it = structural_params.find(name);
  if (it == structural_params.end()) throw InvalidArgument("instance has no parameter '" + name + "'");
  return it->second;
}

std::vector<Vertex> ConstructedInstance::vertices_with(RoleKind kind) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < roles.size(); ++v) {
    if (roles[v].kind == kind) out.push_back(v);
  }
  return out;
}

ConstructedInstance build_fcsh(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  require(p >= 2, "fcsh construction needs p >= 2");
  require(q >= 1 && r >= 1 && s >= 1, "fcsh construction needs q, r, s >= 1");
  for (const std::int64_t x : {p, q, r, s}) require_size(x, "fcsh");

  const std::int64_t rungs = 2 * p - 1;
  const std::int64_t gadget_size = 2 * s + 2;
  const std::int64_t anchor = rungs * q;
  const std::int64_t gadgets_base = anchor + 1;
  const std::int64_t n = gadgets_base + q * r * gadget_size;
  require_size(n, "fcsh");

  auto ladder = [&](std::int64_t rung, std::int64_t column) {
    return static_cast<Vertex>((rung + p - 1) * q + (column - 1));
  };

  GraphBuilder builder(static_cast<std::size_t>(n));
  ConstructedInstance inst;
  inst.kind = ConstructionKind::Fcsh;
  inst.roles.resize(static_cast<std::size_t>(n));
  inst.x0 = StrategyVector(static_cast<std::size_t>(n));

  for (std::int64_t rung = -(p - 1); rung <= p - 1; ++rung) {
    std::vector<Vertex> members;
    for (std::int64_t col = 1; col <= q; ++col) {
      const Vertex v = ladder(rung, col);
      members.push_back(v);
      Role& rl = inst.roles[v];
      rl = role(RoleKind::FcshLadder);
      rl.rung = static_cast<std::int32_t>(rung);
      rl.column = static_cast<std::int32_t>(col);
      if (rung < p - 1) builder.add_edge(v, ladder(rung + 1, col));
      if (rung == 0) inst.x0.set(v, true);
    }
    builder.add_clique(members);
  }

  inst.roles[static_cast<std::size_t>(anchor)] = role(RoleKind::FcshAnchor);
  inst.x0.set(static_cast<std::size_t>(anchor), true);
  for (std::int64_t col = 1; col <= q; ++col) builder.add_edge(static_cast<Vertex>(anchor), ladder(0, col));

  for (std::int64_t col = 1; col <= q; ++col) {
    for (std::int64_t copy = 1; copy <= r; ++copy) {
      const std::int64_t index = (col - 1) * r + (copy - 1);
      const std::int64_t base = gadgets_base + index * gadget_size;
      const auto hub = static_cast<Vertex>(base);
      const auto feeler = static_cast<Vertex>(base + 2 * s + 1);
      auto tag = [&](Vertex v, RoleKind kind, bool cooperate) {
        Role& rl = inst.roles[v];
        rl = role(kind);
        rl.column = static_cast<std::int32_t>(col);
        rl.gadget = static_cast<std::int32_t>(index);
        inst.x0.set(v, cooperate);
      };
      tag(hub, RoleKind::FcshHub, true);
      tag(feeler, RoleKind::FcshFeeler, false);
      for (std::int64_t i = 0; i < s; ++i) {
        const auto inner = static_cast<Vertex>(base + 1 + i);
        tag(inner, RoleKind::FcshInner, true);
        builder.add_edge(hub, inner);
        for (std::int64_t j = 0; j < s; ++j) builder.add_edge(inner, static_cast<Vertex>(base + 1 + s + j));
      }
      for (std::int64_t j = 0; j < s; ++j) tag(static_cast<Vertex>(base + 1 + s + j), RoleKind::FcshOuter, false);
      builder.add_edge(feeler, static_cast<Vertex>(base + 1 + s));
      for (std::int64_t rung = -(p - 1); rung <= p - 1; ++rung) builder.add_edge(feeler, ladder(rung, col));
    }
  }

  inst.graph = builder.build();
  inst.structural_params = {{"p", p}, {"q", q}, {"r", r}, {"s", s}};
  inst.predicted_period = static_cast<std::size_t>(p);
  return inst;
}

ConstructedInstance build_hdpd(std::int64_t p, std::int64_t o, std::int64_t q, std::int64_t r,
                               std::int64_t s) {
  require(p >= 2, "hdpd construction needs p >= 2");
  require(o >= 1 && q >= 1 && r >= 1 && s >= 1, "hdpd construction needs o, q, r, s >= 1");
  for (const std::int64_t x : {p, o, q, r, s}) require_size(x, "hdpd");

  const std::int64_t ladder_size = (p + 1) * o;
  const std::int64_t reset = ladder_size;
  const std::int64_t guard = reset + 1;
  const std::int64_t source = reset + 2;
  const std::int64_t hub_leaves = reset + 3;
  const std::int64_t guard_leaves = hub_leaves + q;
  const std::int64_t bridges = guard_leaves + r;
  const std::int64_t n = bridges + s;
  require_size(n, "hdpd");

  auto ladder = [&](std::int64_t rung, std::int64_t column) {
    return static_cast<Vertex>((rung - 1) * o + (column - 1));
  };

  GraphBuilder builder(static_cast<std::size_t>(n));
  ConstructedInstance inst;
  inst.kind = ConstructionKind::Hdpd;
  inst.roles.resize(static_cast<std::size_t>(n));
  inst.x0 = StrategyVector(static_cast<std::size_t>(n));

  for (std::int64_t rung = 1; rung <= p + 1; ++rung) {
    std::vector<Vertex> members;
    for (std::int64_t col = 1; col <= o; ++col) {
      const Vertex v = ladder(rung, col);
      members.push_back(v);
      Role& rl = inst.roles[v];
      rl = role(RoleKind::HdpdLadder);
      rl.rung = static_cast<std::int32_t>(rung);
      rl.column = static_cast<std::int32_t>(col);
      if (rung <= p) builder.add_edge(v, ladder(rung + 1, col));
      if (rung >= 2 && rung <= p) builder.add_edge(v, static_cast<Vertex>(reset));
      if (rung == 1) inst.x0.set(v, true);
    }
    if (rung <= p) builder.add_clique(members);
  }

  inst.roles[static_cast<std::size_t>(reset)] = role(RoleKind::HdpdReset);
  inst.roles[static_cast<std::size_t>(guard)] = role(RoleKind::HdpdGuard);
  inst.roles[static_cast<std::size_t>(source)] = role(RoleKind::HdpdSource);
  inst.x0.set(static_cast<std::size_t>(source), true);
  builder.add_edge(static_cast<Vertex>(reset), static_cast<Vertex>(guard));
  for (std::int64_t i = 0; i < q; ++i) {
    const auto v = static_cast<Vertex>(hub_leaves + i);
    inst.roles[v] = role(RoleKind::HdpdHubLeaf);
    builder.add_edge(static_cast<Vertex>(reset), v);
  }
  for (std::int64_t i = 0; i < r; ++i) {
    const auto v = static_cast<Vertex>(guard_leaves + i);
    inst.roles[v] = role(RoleKind::HdpdGuardLeaf);
    builder.add_edge(static_cast<Vertex>(guard), v);
  }
  for (std::int64_t i = 0; i < s; ++i) {
    const auto v = static_cast<Vertex>(bridges + i);
    inst.roles[v] = role(RoleKind::HdpdBridge);
    inst.x0.set(v, true);
    builder.add_edge(static_cast<Vertex>(guard), v);
    builder.add_edge(v, static_cast<Vertex>(source));
  }

  inst.graph = builder.build();
  inst.structural_params = {{"p", p}, {"o", o}, {"q", q}, {"r", r}, {"s", s}};
  inst.predicted_period = static_cast<std::size_t>(p);
  return inst;
}

ConstructedInstance build_tree(std::int64_t r, std::int64_t q) {
  require(r >= 2, "tree construction needs r >= 2");
  require(q >= 5, "tree construction needs q >= 5");
  require_size(r, "tree");

  // Level sizes: 1, 1, r, r^2, ..., r^(q-2), then (r^(q-2) - r^2) * r leaves.
  std::int64_t total = 2;
  std::int64_t width = 1;
  for (std::int64_t level = 2; level <= q - 1; ++level) {
    width *= r;
    total += width;
    require_size(total, "tree");
  }
  total += (width - r * r) * r;
  require_size(total, "tree");

  ConstructedInstance inst;
  inst.kind = ConstructionKind::Tree;
  inst.roles.reserve(static_cast<std::size_t>(total));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(total - 1));

  Role root = role(RoleKind::TreeRoot);
  root.level = 0;
  inst.roles.push_back(root);
  Role first = role(RoleKind::TreeSpecial);
  first.level = 1;
  inst.roles.push_back(first);
  edges.emplace_back(0, 1);

  // A vertex is on a designated path when it is a level-3 vertex or the first
  // child of a vertex on a designated path.
  std::vector<bool> designated(2, false);
  std::vector<Vertex> frontier{1};
  std::int32_t next_branch = 0;
  for (std::int64_t level = 1; level <= q - 1; ++level) {
    std::vector<Vertex> next;
    for (Vertex parent : frontier) {
      const Role parent_role = inst.roles[parent];
      if (level == q - 1 && designated[parent]) continue;  // designated leaf
      for (std::int64_t child = 0; child < r; ++child) {
        const auto v = static_cast<Vertex>(inst.roles.size());
        Role rl;
        rl.level = static_cast<std::int32_t>(level + 1);
        bool on_path = false;
        if (level + 1 <= 3) {
          rl.kind = RoleKind::TreeSpecial;
          on_path = level + 1 == 3;
          if (on_path) rl.branch = next_branch++;
        } else {
          rl.branch = parent_role.branch;
          on_path = designated[parent] && child == 0;
          if (on_path) {
            rl.kind = RoleKind::TreeSpecial;
          } else {
            rl.kind = RoleKind::TreeOrdinary;
            rl.anchor = parent_role.kind == RoleKind::TreeSpecial ? parent_role.level : parent_role.anchor;
          }
        }
        inst.roles.push_back(rl);
        designated.push_back(on_path);
        edges.emplace_back(parent, v);
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }

  inst.graph = Graph::from_edges(inst.roles.size(), edges);
  inst.x0 = StrategyVector(inst.roles.size());
  for (Vertex v = 0; v < inst.roles.size(); ++v) inst.x0.set(v, inst.roles[v].level <= q - 2);
  inst.structural_params = {{"r", r}, {"q", q}};
  inst.predicted_period = static_cast<std::size_t>(2 * (q - 3));
  return inst;
}

}  // namespace eggraph
