#pragma once

#include "eggraph/constructions.hpp"
#include "eggraph/dynamics.hpp"
#include "eggraph/game.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eggraph {

/// Violation records are capped at this many per report.
inline constexpr std::size_t kMaxViolations = 1000;

struct InvariantViolation {
  std::size_t time = 0;
  std::string invariant;
  /// Empty for whole-trajectory checks such as the period.
  std::optional<Vertex> vertex;
  /// Strategy bits for per-vertex checks; period lengths for the period check.
  std::int64_t expected = 0;
  std::int64_t observed = 0;
};

struct VerificationReport {
  std::vector<InvariantViolation> violations;
  /// Every invariant family that was evaluated, in evaluation order.
  std::vector<std::string> checked;
  /// True when more than kMaxViolations violations occurred.
  bool truncated = false;
  std::size_t observed_transient = 0;
  std::size_t observed_period = 0;

  bool ok() const { return violations.empty() && !truncated; }
};

/// |t - q + 3| + 1 for 0 <= t <= 2q - 6; throws InvalidArgument otherwise.
std::int64_t f_of_t(std::int64_t q, std::int64_t t);

/// Ladder invariants for FC/SH witnesses: non-ladder vertices and the centre
/// rung stay at their initial strategies, rungs 0..t cooperate and t+1..p-1
/// defect at time t, and X(p) == X(0). Also checks transient 0 and minimal period p.
VerificationReport verify_fcsh_dynamics(const ConstructedInstance& instance, const GameParams& params);

/// Ladder invariants for HD/PD witnesses: rungs 1..t+1 cooperate at time t for
/// 1 <= t <= p-1 while every other vertex keeps its previous strategy, the
/// edgeless last rung stays defecting, and X(t+p) == X(t).
VerificationReport verify_hdpd_dynamics(const ConstructedInstance& instance, const GameParams& params);

/// The seven tree invariant families "special", "special-inner-cooperator",
/// "special-inner-defector", "shrinking-cooperators", "shrinking-defectors",
/// "growing-cooperators", "growing-defectors" over one period, plus the
/// minimal-period check 2q-6.
VerificationReport verify_tree_invariants(const ConstructedInstance& instance, const GameParams& params);

/// Runtime scan of the four local tree lemmas over `steps` steps: sibling
/// agreement below ordinary vertices, the boundary-cooperator and
/// boundary-defector transitions whenever their premises hold, and defection
/// passing down from ordinary defectors.
VerificationReport scan_tree_lemmas(const ConstructedInstance& instance, const GameParams& params,
                                    std::size_t steps);

/// Dispatches on instance.kind.
VerificationReport verify_instance(const ConstructedInstance& instance, const GameParams& params);

/// (t, cooperator count) for X(0) .. X(transient + period - 1).
std::vector<std::pair<std::size_t, std::size_t>> cooperator_series(const TrajectoryReport& report);

}  // namespace eggraph
