#include "eggraph/analysis.hpp"

#include "eggraph/error.hpp"
#include "eggraph/utility.hpp"

#include <cstdlib>
#include <string>

namespace eggraph {
namespace {

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void family(std::string name) { report_.checked.push_back(std::move(name)); }

  // Records a mismatch; beyond the cap only the truncation flag is set.
  void expect(std::size_t t, const std::string& invariant, Vertex v, bool expected, bool observed) {
    if (expected == observed) return;
    add({t, invariant, v, expected, observed});
  }

  void add(InvariantViolation violation) {
    if (report_.violations.size() >= kMaxViolations) {
      report_.truncated = true;
      return;
    }
    report_.violations.push_back(std::move(violation));
  }

 private:
  VerificationReport& report_;
};

std::vector<StrategyVector> simulate(const ConstructedInstance& inst, const GameParams& params,
                                     std::size_t steps) {
  const Stepper stepper(inst.graph, params);
  std::vector<StrategyVector> states{inst.x0};
  states.reserve(steps + 1);
  for (std::size_t t = 0; t < steps; ++t) states.push_back(stepper(states.back()));
  return states;
}

// Transient 0 and minimal period `expected`, found by the cycle detector.
void check_period(const ConstructedInstance& inst, const GameParams& params, std::size_t expected,
                  VerificationReport& report, Recorder& rec) {
  rec.family("period");
  try {
    const TrajectoryReport traj =
        trajectory(inst.graph, params, inst.x0, UpdateSchedule::synchronous(), 4 * expected + 16);
    report.observed_transient = traj.transient;
    report.observed_period = traj.minimal_period;
    if (traj.transient != 0) {
      rec.add({0, "transient", std::nullopt, 0, static_cast<std::int64_t>(traj.transient)});
    }
    if (traj.minimal_period != expected) {
      rec.add({traj.transient, "period", std::nullopt, static_cast<std::int64_t>(expected),
               static_cast<std::int64_t>(traj.minimal_period)});
    }
  } catch (const TrajectoryBudgetExhausted&) {
    rec.add({0, "period", std::nullopt, static_cast<std::int64_t>(expected), 0});
  }
}

void require_kind(const ConstructedInstance& inst, ConstructionKind kind) {
  if (inst.kind != kind) {
    throw InvalidArgument("expected a " + std::string(to_string(kind)) + " instance, got " +
                          std::string(to_string(inst.kind)));
  }
  if (inst.roles.size() != inst.graph.size() || inst.x0.size() != inst.graph.size()) {
    throw InvalidArgument("instance roles/state do not match its graph");
  }
}

std::vector<std::vector<Vertex>> tree_children(const ConstructedInstance& inst) {
  std::vector<std::vector<Vertex>> children(inst.graph.size());
  for (Vertex v = 0; v < inst.graph.size(); ++v) {
    for (Vertex w : inst.graph.neighbors(v)) {
      if (inst.roles[w].level == inst.roles[v].level + 1) children[v].push_back(w);
    }
  }
  return children;
}

}  // namespace

std::int64_t f_of_t(std::int64_t q, std::int64_t t) {
  if (t < 0 || t > 2 * q - 6) {
    throw InvalidArgument("t = " + std::to_string(t) + " outside 0.." + std::to_string(2 * q - 6));
  }
  const std::int64_t shift = t - q + 3;
  return (shift < 0 ? -shift : shift) + 1;
}

VerificationReport verify_fcsh_dynamics(const ConstructedInstance& inst, const GameParams& params) {
  require_kind(inst, ConstructionKind::Fcsh);
  const auto p = static_cast<std::size_t>(inst.param("p"));
  const auto states = simulate(inst, params, p);

  VerificationReport report;
  Recorder rec(report);
  rec.family("frozen");
  rec.family("ladder-cooperating");
  rec.family("ladder-defecting");
  for (std::size_t t = 0; t < p; ++t) {
    for (Vertex v = 0; v < inst.graph.size(); ++v) {
      const Role& role = inst.roles[v];
      const bool observed = states[t].cooperates(v);
      if (role.kind != RoleKind::FcshLadder || role.rung == 0) {
        rec.expect(t, "frozen", v, inst.x0.cooperates(v), observed);
      } else if (static_cast<std::size_t>(std::abs(role.rung)) <= t) {
        rec.expect(t, "ladder-cooperating", v, true, observed);
      } else {
        rec.expect(t, "ladder-defecting", v, false, observed);
      }
    }
  }
  rec.family("reset");
  for (Vertex v = 0; v < inst.graph.size(); ++v) rec.expect(p, "reset", v, inst.x0.cooperates(v), states[p].cooperates(v));
  check_period(inst, params, p, report, rec);
  return report;
}

VerificationReport verify_hdpd_dynamics(const ConstructedInstance& inst, const GameParams& params) {
  require_kind(inst, ConstructionKind::Hdpd);
  const auto p = static_cast<std::size_t>(inst.param("p"));
  const auto states = simulate(inst, params, 2 * p);

  VerificationReport report;
  Recorder rec(report);
  rec.family("ladder-cooperating");
  rec.family("unchanged");
  for (std::size_t t = 1; t < p; ++t) {
    for (Vertex v = 0; v < inst.graph.size(); ++v) {
      const Role& role = inst.roles[v];
      const bool observed = states[t].cooperates(v);
      if (role.kind == RoleKind::HdpdLadder && static_cast<std::size_t>(role.rung) <= t + 1) {
        rec.expect(t, "ladder-cooperating", v, true, observed);
      } else {
        rec.expect(t, "unchanged", v, states[t - 1].cooperates(v), observed);
      }
    }
  }
  rec.family("last-rung-defecting");
  rec.family("guard-defecting");
  for (std::size_t t = 0; t < p; ++t) {
    for (Vertex v = 0; v < inst.graph.size(); ++v) {
      const Role& role = inst.roles[v];
      if (role.kind == RoleKind::HdpdLadder && role.rung == static_cast<std::int32_t>(p + 1)) {
        rec.expect(t, "last-rung-defecting", v, false, states[t].cooperates(v));
      } else if (role.kind == RoleKind::HdpdGuard) {
        rec.expect(t, "guard-defecting", v, false, states[t].cooperates(v));
      }
    }
  }
  rec.family("periodic");
  for (std::size_t t = 0; t <= p; ++t) {
    for (Vertex v = 0; v < inst.graph.size(); ++v) {
      rec.expect(t + p, "periodic", v, states[t].cooperates(v), states[t + p].cooperates(v));
    }
  }
  check_period(inst, params, p, report, rec);
  return report;
}

VerificationReport verify_tree_invariants(const ConstructedInstance& inst, const GameParams& params) {
  require_kind(inst, ConstructionKind::Tree);
  const std::int64_t q = inst.param("q");
  const auto horizon = static_cast<std::size_t>(2 * q - 6);
  const auto states = simulate(inst, params, horizon);
  const Graph& g = inst.graph;

  VerificationReport report;
  Recorder rec(report);
  for (const char* name : {"special", "special-inner-cooperator", "special-inner-defector",
                           "shrinking-cooperators", "shrinking-defectors", "growing-cooperators",
                           "growing-defectors"}) {
    rec.family(name);
  }

  for (std::size_t t = 0; t <= horizon; ++t) {
    const std::int64_t f = f_of_t(q, static_cast<std::int64_t>(t));
    const bool shrinking = static_cast<std::int64_t>(t) < q - 3;
    const StrategyVector& x = states[t];
    for (Vertex v = 0; v < g.size(); ++v) {
      const Role& role = inst.roles[v];
      const std::int64_t level = role.level;
      const bool observed = x.cooperates(v);
      if (role.kind == RoleKind::TreeSpecial) {
        const VertexClass cls = vertex_class(g, x, v);
        rec.expect(t, "special", v, level <= f, observed);
        rec.expect(t, "special-inner-cooperator", v, level < f, cls == VertexClass::InnerCooperator);
        rec.expect(t, "special-inner-defector", v, level > f + 1, cls == VertexClass::InnerDefector);
      }
      if (shrinking && role.kind == RoleKind::TreeOrdinary) {
        const std::int64_t m = role.anchor;
        const std::int64_t depth = level - m;
        // The children of h_{q-2} start on the defecting layer q-1 and are
        // recruited at t = 1, so at t = 0 this family covers m <= q-3 only.
        const bool recruited_yet = t > 0 || m < q - 2;
        if (m <= f + 1 && depth == 1 && recruited_yet) rec.expect(t, "shrinking-cooperators", v, true, observed);
        if (m > f + 1 && depth <= m - f - 1) rec.expect(t, "shrinking-defectors", v, false, observed);
      }
      if (!shrinking) {
        if (level <= f) rec.expect(t, "growing-cooperators", v, true, observed);
        if (level > f && level <= f + 3) rec.expect(t, "growing-defectors", v, false, observed);
      }
    }
  }
  check_period(inst, params, horizon, report, rec);
  return report;
}

VerificationReport scan_tree_lemmas(const ConstructedInstance& inst, const GameParams& params,
                                    std::size_t steps) {
  require_kind(inst, ConstructionKind::Tree);
  const auto r = static_cast<std::size_t>(inst.param("r"));
  const Graph& g = inst.graph;
  const auto states = simulate(inst, params, steps);
  const auto children = tree_children(inst);

  VerificationReport report;
  Recorder rec(report);
  rec.family("siblings-agree");
  rec.family("cooperator-recruits");
  rec.family("defector-takes-over");
  rec.family("defection-descends");

  for (std::size_t t = 0; t <= steps; ++t) {
    const StrategyVector& x = states[t];
    std::vector<Rational> util(g.size());
    if (t < steps) {
      for (Vertex v = 0; v < g.size(); ++v) util[v] = mean_utility(g, params, x, v);
    }
    for (Vertex v = 0; v < g.size(); ++v) {
      const bool ordinary = inst.roles[v].kind == RoleKind::TreeOrdinary;
      if (ordinary && !children[v].empty()) {
        const bool first = x.cooperates(children[v].front());
        for (Vertex c : children[v]) rec.expect(t, "siblings-agree", c, first, x.cooperates(c));
      }
      if (t == steps) continue;
      const StrategyVector& next = states[t + 1];

      if (ordinary && !x.cooperates(v)) {
        for (Vertex c : children[v]) rec.expect(t + 1, "defection-descends", c, false, next.cooperates(c));
      }

      std::size_t coop = 0;
      for (Vertex w : g.neighbors(v)) coop += x.cooperates(w) ? 1 : 0;
      const std::size_t deg = g.degree(v);
      if (deg != r + 1) continue;

      if (x.cooperates(v) && coop == 1) {
        // Boundary cooperator with r defecting neighbors that see only v
        // cooperating and whose own defecting neighbors are weaker than v.
        bool premise = true;
        for (Vertex j : g.neighbors(v)) {
          if (x.cooperates(j)) continue;
          if (g.degree(j) != r + 1) premise = false;
          for (Vertex k : g.neighbors(j)) {
            if (k == v) continue;
            if (x.cooperates(k) || !(util[k] < util[v])) premise = false;
          }
        }
        if (premise) {
          rec.expect(t + 1, "cooperator-recruits", v, true, next.cooperates(v));
          for (Vertex j : g.neighbors(v)) {
            if (!x.cooperates(j)) rec.expect(t + 1, "cooperator-recruits", j, true, next.cooperates(j));
          }
        }
      }
      if (!x.cooperates(v) && coop == r) {
        rec.expect(t + 1, "defector-takes-over", v, false, next.cooperates(v));
        for (Vertex j : g.neighbors(v)) rec.expect(t + 1, "defector-takes-over", j, false, next.cooperates(j));
      }
    }
  }
  return report;
}

VerificationReport verify_instance(const ConstructedInstance& inst, const GameParams& params) {
  switch (inst.kind) {
    case ConstructionKind::Fcsh: return verify_fcsh_dynamics(inst, params);
    case ConstructionKind::Hdpd: return verify_hdpd_dynamics(inst, params);
    case ConstructionKind::Tree: return verify_tree_invariants(inst, params);
  }
  throw InvalidArgument("unknown construction kind");
}

std::vector<std::pair<std::size_t, std::size_t>> cooperator_series(const TrajectoryReport& report) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(report.cooperator_counts.size());
  for (std::size_t t = 0; t < report.cooperator_counts.size(); ++t) out.emplace_back(t, report.cooperator_counts[t]);
  return out;
}

}  // namespace eggraph
