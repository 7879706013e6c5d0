#pragma once

#include "eggraph/graph.hpp"
#include "eggraph/state.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace eggraph {

enum class ConstructionKind { Fcsh, Hdpd, Tree };

std::string_view to_string(ConstructionKind kind);
ConstructionKind parse_construction_kind(std::string_view text);

enum class RoleKind {
  // Ladder construction for a > c.
  FcshLadder,   // k_{n,l}, n signed in -(p-1)..p-1, column l
  FcshAnchor,   // g, attached to the centre rung
  FcshHub,      // H: h of each gadget
  FcshInner,    // I: first class of each gadget, all neighbors of the hub
  FcshOuter,    // J: second class of each gadget
  FcshFeeler,   // F: f of each gadget, attached to a whole ladder column
  // Ladder construction for c > a.
  HdpdLadder,   // k_{n,m}, n in 1..p+1, column m
  HdpdReset,    // g_R
  HdpdGuard,    // g_D
  HdpdSource,   // g_C
  HdpdHubLeaf,  // H: leaves of g_R
  HdpdGuardLeaf,  // I: leaves of g_D
  HdpdBridge,   // J: shared neighbors of g_D and g_C
  // Tree construction.
  TreeRoot,     // h_0
  TreeSpecial,  // h_l on the designated path of some level-3 branch
  TreeOrdinary,
};

std::string_view to_string(RoleKind kind);

/// Marks a Role field that does not apply to the role.
inline constexpr std::int32_t kUnset = std::numeric_limits<std::int32_t>::min();

/// Per-vertex role annotation.
struct Role {
  RoleKind kind{};
  /// Signed ladder index n (ladder roles).
  std::int32_t rung = kUnset;
  /// Column within a rung (ladder roles), or the column l of a gadget.
  std::int32_t column = kUnset;
  /// Gadget index (l-1)*r + (m-1) for FCSH gadget roles.
  std::int32_t gadget = kUnset;
  /// Depth below the root (tree roles).
  std::int32_t level = kUnset;
  /// Index of the level-3 ancestor, 0..r^2-1 (tree roles at level >= 3).
  std::int32_t branch = kUnset;
  /// For ordinary tree vertices, level m of the special vertex h_m the subtree hangs from.
  std::int32_t anchor = kUnset;

  friend bool operator==(const Role&, const Role&) = default;
};

/// A witness graph with its initial state and annotations.
struct ConstructedInstance {
  ConstructionKind kind{};
  Graph graph;
  StrategyVector x0;
  std::vector<Role> roles;
  /// FCSH: p,q,r,s. HDPD: p,o,q,r,s. Tree: r,q.
  std::map<std::string, std::int64_t> structural_params;
  std::size_t predicted_period = 0;

  std::int64_t param(const std::string& name) const;
  std::vector<Vertex> vertices_with(RoleKind kind) const;

  friend bool operator==(const ConstructedInstance&, const ConstructedInstance&) = default;
};

/// Upper bound on the vertex count of any construction. Builders throw
/// BudgetExhausted instead of allocating past it.
inline constexpr std::int64_t kMaxConstructionVertices = std::int64_t{1} << 22;

/// Ladder of 2p-1 chained q-cliques with q*r bipartite gadgets (classes of
/// size s) hanging from the ladder columns. Vertex layout: rungs n = -(p-1)..p-1
/// in order, each rung's q columns consecutive; then g; then gadgets in (l, m)
/// order, each laid out as h, first class, second class, f. The first vertex of
/// the second class is the one attached to f.
///
/// Requires p >= 2 and q, r, s >= 1; throws InvalidArgument otherwise.
ConstructedInstance build_fcsh(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

/// Ladder of p chained o-cliques plus an edgeless (p+1)-th rung, a reset hub
/// g_R on rungs 2..p with q leaves, a guard g_D with r leaves and s bridges to
/// a cooperating source g_C. Vertex layout: rungs 1..p+1 with o consecutive
/// columns each, then g_R, g_D, g_C, H, I, J.
///
/// Requires p >= 2 and o, q, r, s >= 1; throws InvalidArgument otherwise.
ConstructedInstance build_hdpd(std::int64_t p, std::int64_t o, std::int64_t q, std::int64_t r,
                               std::int64_t s);

/// Rooted r-ary tree of depth q: root with a single child, full r-branching on
/// levels 1..q-2, and in each level-3 branch the first-child descendant at
/// level q-1 is a leaf while every other level-(q-1) vertex has r leaf
/// children. Vertices are numbered breadth-first with children in order.
///
/// Requires r >= 2 and q >= 5; throws InvalidArgument otherwise.
ConstructedInstance build_tree(std::int64_t r, std::int64_t q);

}  // namespace eggraph
