#include "eggraph/utility.hpp"

#include "eggraph/error.hpp"

#include <string>

namespace eggraph {

Rational encounter_payoff(const GameParams& params, bool self_cooperates, bool other_cooperates) {
  if (self_cooperates) return other_cooperates ? params.a : params.b;
  return other_cooperates ? params.c : params.d;
}

Rational mean_utility(const Graph& graph, const GameParams& params, const StrategyVector& state,
                      Vertex v) {
  const std::size_t degree = graph.degree(v);
  if (degree == 0) throw InvalidArgument("utility of isolated vertex " + std::to_string(v) + " is undefined");
  std::size_t cooperating = 0;
  for (Vertex w : graph.neighbors(v)) cooperating += state.cooperates(w) ? 1 : 0;
  const std::size_t defecting = degree - cooperating;
  const Rational& vs_c = state.cooperates(v) ? params.a : params.c;
  const Rational& vs_d = state.cooperates(v) ? params.b : params.d;
  Rational total = vs_c * static_cast<long long>(cooperating) + vs_d * static_cast<long long>(defecting);
  return Rational(total / static_cast<long long>(degree));
}

}  // namespace eggraph
