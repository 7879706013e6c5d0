#include "eggraph/dynamics.hpp"

#include "eggraph/error.hpp"
#include "eggraph/utility.hpp"

#include <compare>
#include <numeric>
#include <string>
#include <unordered_map>

namespace eggraph {
namespace {

__extension__ using Wide = __int128;

// Fast-path payoff magnitude bound. With degrees below 2^32 a utility
// numerator stays below 2^72 and a cross-multiplied comparison below 2^104.
const BigInt kFastPayoffLimit = BigInt(1) << 40;

struct PhaseState {
  std::size_t phase;
  StrategyVector state;
  friend bool operator==(const PhaseState&, const PhaseState&) = default;
};

struct PhaseStateHash {
  std::size_t operator()(const PhaseState& k) const {
    return k.state.hash() ^ (k.phase * 0x9e3779b97f4a7c15ULL);
  }
};

// Utilities as exact fractions num / deg with 128-bit numerators.
class FastUtilities {
 public:
  FastUtilities(const Graph& g, const StrategyVector& s, Wide a, Wide b, Wide c, Wide d)
      : graph_(g), num_(g.size()) {
    for (Vertex v = 0; v < g.size(); ++v) {
      Wide coop = 0;
      for (Vertex w : g.neighbors(v)) coop += s.cooperates(w) ? 1 : 0;
      const Wide def = static_cast<Wide>(g.degree(v)) - coop;
      num_[v] = s.cooperates(v) ? a * coop + b * def : c * coop + d * def;
    }
  }
  std::strong_ordering compare(Vertex v, Vertex w) const {
    const Wide lhs = num_[v] * static_cast<Wide>(graph_.degree(w));
    const Wide rhs = num_[w] * static_cast<Wide>(graph_.degree(v));
    return lhs <=> rhs;
  }

 private:
  const Graph& graph_;
  std::vector<Wide> num_;
};

class RationalUtilities {
 public:
  RationalUtilities(const Graph& g, const StrategyVector& s, const GameParams& params) : util_(g.size()) {
    for (Vertex v = 0; v < g.size(); ++v) util_[v] = mean_utility(g, params, s, v);
  }
  std::strong_ordering compare(Vertex v, Vertex w) const {
    if (util_[v] < util_[w]) return std::strong_ordering::less;
    if (util_[w] < util_[v]) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Rational> util_;
};

template <typename Utilities>
MaximizerStrategies maximizers(const Graph& g, const StrategyVector& s, const Utilities& util, Vertex v) {
  Vertex best = v;
  MaximizerStrategies found;
  (s.cooperates(v) ? found.cooperate : found.defect) = true;
  for (Vertex w : g.neighbors(v)) {
    const auto order = util.compare(w, best);
    if (order == std::strong_ordering::greater) {
      best = w;
      found = {};
      (s.cooperates(w) ? found.cooperate : found.defect) = true;
    } else if (order == std::strong_ordering::equal) {
      (s.cooperates(w) ? found.cooperate : found.defect) = true;
    }
  }
  return found;
}

template <typename Utilities>
void apply_rule(const Graph& g, const StrategyVector& old, const Utilities& util, Vertex v,
                StrategyVector& next) {
  const MaximizerStrategies found = maximizers(g, old, util, v);
  if (found.size() == 1) next.set(v, found.cooperate);
}

void check_state(const Graph& g, const StrategyVector& s) {
  if (s.size() != g.size()) {
    throw InvalidArgument("state has " + std::to_string(s.size()) + " entries, graph has " +
                          std::to_string(g.size()) + " vertices");
  }
}

}  // namespace

MaximizerStrategies argmax_strategies(const Graph& graph, const GameParams& params,
                                      const StrategyVector& state, Vertex v) {
  check_state(graph, state);
  return maximizers(graph, state, RationalUtilities(graph, state, params), v);
}

Stepper::Stepper(const Graph& graph, const GameParams& params) : graph_(&graph), params_(params) {
  BigInt lcm = 1;
  for (const Rational* x : {&params.a, &params.b, &params.c, &params.d}) {
    lcm = boost::multiprecision::lcm(lcm, denominator(*x));
  }
  BigInt scaled[4];
  const Rational* payoffs[4] = {&params.a, &params.b, &params.c, &params.d};
  fast_ = true;
  for (int i = 0; i < 4; ++i) {
    scaled[i] = numerator(*payoffs[i]) * (lcm / denominator(*payoffs[i]));
    if (abs(scaled[i]) >= kFastPayoffLimit) fast_ = false;
  }
  if (fast_) {
    a_ = scaled[0].convert_to<long long>();
    b_ = scaled[1].convert_to<long long>();
    c_ = scaled[2].convert_to<long long>();
    d_ = scaled[3].convert_to<long long>();
  }
}

StrategyVector Stepper::operator()(const StrategyVector& state) const {
  check_state(*graph_, state);
  StrategyVector next = state;
  const Graph& g = *graph_;
  if (fast_) {
    const FastUtilities util(g, state, a_, b_, c_, d_);
    for (Vertex v = 0; v < g.size(); ++v) apply_rule(g, state, util, v, next);
  } else {
    const RationalUtilities util(g, state, params_);
    for (Vertex v = 0; v < g.size(); ++v) apply_rule(g, state, util, v, next);
  }
  return next;
}

StrategyVector Stepper::operator()(const StrategyVector& state, std::span<const Vertex> active) const {
  check_state(*graph_, state);
  StrategyVector next = state;
  const Graph& g = *graph_;
  for (Vertex v : active) {
    if (v >= g.size()) throw InvalidArgument("active vertex " + std::to_string(v) + " outside the graph");
  }
  if (fast_) {
    const FastUtilities util(g, state, a_, b_, c_, d_);
    for (Vertex v : active) apply_rule(g, state, util, v, next);
  } else {
    const RationalUtilities util(g, state, params_);
    for (Vertex v : active) apply_rule(g, state, util, v, next);
  }
  return next;
}

StrategyVector step(const Graph& graph, const GameParams& params, const StrategyVector& state) {
  return Stepper(graph, params)(state);
}

StrategyVector step(const Graph& graph, const GameParams& params, const StrategyVector& state,
                    std::span<const Vertex> active) {
  return Stepper(graph, params)(state, active);
}

bool is_fixed_point(const Graph& graph, const GameParams& params, const StrategyVector& state) {
  return step(graph, params, state) == state;
}

const StrategyVector& TrajectoryReport::state_at(std::size_t t) const {
  if (t < states.size()) return states[t];
  return states[transient + (t - transient) % minimal_period];
}

TrajectoryBudgetExhausted::TrajectoryBudgetExhausted(std::size_t steps, std::vector<StrategyVector> partial)
    : BudgetExhausted("no repeated state within " + std::to_string(steps) + " steps"),
      partial_(std::move(partial)) {}

TrajectoryReport trajectory(const Graph& graph, const GameParams& params, const StrategyVector& x0,
                            const UpdateSchedule& schedule, std::size_t max_steps,
                            const TrajectoryObserver& observer) {
  if (max_steps == 0) throw InvalidArgument("max_steps must be at least 1");
  check_state(graph, x0);

  const Stepper stepper(graph, params);
  std::vector<StrategyVector> states{x0};
  std::unordered_map<PhaseState, std::size_t, PhaseStateHash> first_seen;
  first_seen.emplace(PhaseState{schedule.phase(0), x0}, 0);
  if (observer) observer(0, x0);

  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
  for (std::size_t t = 0; t < max_steps; ++t) {
    StrategyVector next = schedule.is_synchronous() ? stepper(states.back())
                                                    : stepper(states.back(), schedule.active(t));
    if (observer) observer(t + 1, next);
    PhaseState key{schedule.phase(t + 1), std::move(next)};
    if (auto it = first_seen.find(key); it != first_seen.end()) {
      cycle_start = it->second;
      cycle_length = t + 1 - it->second;
      break;
    }
    states.push_back(key.state);
    first_seen.emplace(std::move(key), t + 1);
  }
  if (cycle_length == 0) throw TrajectoryBudgetExhausted(max_steps, std::move(states));

  // With a single phase the first recurrence already gives the minimal period
  // and transient. Multi-phase schedules can recur at a shorter state period
  // than the phase-aware gap, so shrink both to what the state sequence shows.
  auto on_cycle = [&](std::size_t t) -> const StrategyVector& {
    return t < states.size() ? states[t] : states[cycle_start + (t - cycle_start) % cycle_length];
  };
  std::size_t period = cycle_length;
  for (std::size_t cand = 1; cand < cycle_length; ++cand) {
    if (cycle_length % cand != 0) continue;
    bool repeats = true;
    for (std::size_t i = 0; i < cycle_length && repeats; ++i) {
      repeats = on_cycle(cycle_start + i) == on_cycle(cycle_start + i + cand);
    }
    if (repeats) {
      period = cand;
      break;
    }
  }
  std::size_t transient = cycle_start;
  while (transient > 0 && states[transient - 1] == on_cycle(transient - 1 + period)) --transient;

  TrajectoryReport report;
  report.initial_state = x0;
  report.transient = transient;
  report.minimal_period = period;
  states.resize(transient + period);
  report.states = std::move(states);
  report.cooperator_counts.reserve(report.states.size());
  for (const auto& s : report.states) report.cooperator_counts.push_back(s.cooperator_count());
  return report;
}

}  // namespace eggraph
