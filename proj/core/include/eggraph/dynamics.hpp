#pragma once

#include "eggraph/error.hpp"
#include "eggraph/game.hpp"
#include "eggraph/graph.hpp"
#include "eggraph/state.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace eggraph {

/// Strategies played by the utility maximizers in the closed neighborhood of a vertex.
struct MaximizerStrategies {
  bool cooperate = false;
  bool defect = false;

  std::size_t size() const { return static_cast<std::size_t>(cooperate) + defect; }
  friend bool operator==(const MaximizerStrategies&, const MaximizerStrategies&) = default;
};

MaximizerStrategies argmax_strategies(const Graph& graph, const GameParams& params,
                                      const StrategyVector& state, Vertex v);

/// One imitation step. Every vertex updates from the old state: it adopts the
/// strategy of the best performers in its closed neighborhood when they all
/// agree, and keeps its own strategy when cooperators and defectors tie.
StrategyVector step(const Graph& graph, const GameParams& params, const StrategyVector& state);

/// As above, restricted to `active`; all other vertices keep their strategy.
StrategyVector step(const Graph& graph, const GameParams& params, const StrategyVector& state,
                    std::span<const Vertex> active);

bool is_fixed_point(const Graph& graph, const GameParams& params, const StrategyVector& state);

/// Precomputes the graph/params pairing once so repeated steps avoid
/// re-deriving integer payoffs. Exact for every input: payoffs that fit the
/// 128-bit fast path use it, anything larger falls back to rationals.
class Stepper {
 public:
  Stepper(const Graph& graph, const GameParams& params);

  StrategyVector operator()(const StrategyVector& state) const;
  StrategyVector operator()(const StrategyVector& state, std::span<const Vertex> active) const;

  bool uses_fast_path() const { return fast_; }

 private:
  const Graph* graph_;
  GameParams params_;
  bool fast_ = false;
  // Payoffs scaled to a common denominator; only meaningful when fast_.
  std::int64_t a_ = 0, b_ = 0, c_ = 0, d_ = 0;
};

struct TrajectoryReport {
  StrategyVector initial_state;
  std::size_t transient = 0;
  std::size_t minimal_period = 1;
  /// X(0) .. X(transient + minimal_period - 1).
  std::vector<StrategyVector> states;
  /// cooperator_counts[t] == states[t].cooperator_count()
  std::vector<std::size_t> cooperator_counts;

  /// State at any time t >= 0, folding t back onto the cycle.
  const StrategyVector& state_at(std::size_t t) const;
};

/// Thrown by trajectory() when max_steps pass without a repeated state.
class TrajectoryBudgetExhausted : public BudgetExhausted {
 public:
  TrajectoryBudgetExhausted(std::size_t steps, std::vector<StrategyVector> partial);
  const std::vector<StrategyVector>& partial_states() const { return partial_; }

 private:
  std::vector<StrategyVector> partial_;
};

/// Called with (t, X(t)) for every state the iteration produces, including
/// the repeated one that closes the cycle.
using TrajectoryObserver = std::function<void(std::size_t, const StrategyVector&)>;

/// Iterates the dynamics from x0 until a state recurs at the same schedule
/// phase, then reports the eventual transient and minimal period of the state
/// sequence. Throws TrajectoryBudgetExhausted after max_steps steps without a
/// recurrence, and InvalidArgument for max_steps == 0 or a size mismatch.
TrajectoryReport trajectory(const Graph& graph, const GameParams& params,
                            const StrategyVector& x0, const UpdateSchedule& schedule,
                            std::size_t max_steps, const TrajectoryObserver& observer = {});

}  // namespace eggraph
