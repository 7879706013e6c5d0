#pragma once

#include "eggraph/game.hpp"
#include "eggraph/graph.hpp"
#include "eggraph/rational.hpp"
#include "eggraph/state.hpp"

namespace eggraph {

/// Mean payoff of v against its neighbors:
///   cooperator: (a * #C + b * #D) / deg(v)
///   defector:   (c * #C + d * #D) / deg(v)
/// Throws InvalidArgument for an isolated vertex.
Rational mean_utility(const Graph& graph, const GameParams& params,
                      const StrategyVector& state, Vertex v);

/// Payoff one player receives in a single encounter.
Rational encounter_payoff(const GameParams& params, bool self_cooperates, bool other_cooperates);

}  // namespace eggraph
