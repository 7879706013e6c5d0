#pragma once

#include "eggraph/game.hpp"
#include "eggraph/graph.hpp"
#include "eggraph/state.hpp"
#include "reference.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace testing_support {

using Rng = std::mt19937_64;

struct RandomGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  eggraph::Graph graph() const {
    std::vector<eggraph::Edge> e;
    for (auto [u, v] : edges) e.emplace_back(u, v);
    return eggraph::Graph::from_edges(static_cast<std::size_t>(n), e);
  }
};

// Random spanning tree plus extra edges with probability `density`.
inline RandomGraph random_connected_graph(int n, double density, Rng& rng) {
  RandomGraph g;
  g.n = n;
  std::set<std::pair<int, int>> present;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    const int parent = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    present.insert(std::minmax(order[i], parent));
  }
  std::bernoulli_distribution extra(density);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (extra(rng)) present.insert({u, v});
    }
  }
  g.edges.assign(present.begin(), present.end());
  return g;
}

inline std::vector<int> random_bits(int n, Rng& rng) {
  std::vector<int> x(n);
  std::bernoulli_distribution coin(0.5);
  for (int& b : x) b = coin(rng) ? 1 : 0;
  return x;
}

inline eggraph::StrategyVector to_state(const std::vector<int>& bits) {
  eggraph::StrategyVector s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) s.set(i, bits[i] != 0);
  return s;
}

inline std::vector<int> to_bits(const eggraph::StrategyVector& s) {
  std::vector<int> x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x[i] = s.cooperates(i) ? 1 : 0;
  return x;
}

// A payoff quadruple of small fractions, kept alongside its reference twin.
struct RandomParams {
  eggraph::GameParams params;
  ref::Payoffs payoffs;
};

inline RandomParams make_params(const std::vector<std::pair<std::int64_t, std::int64_t>>& abcd) {
  RandomParams out;
  eggraph::Rational* lib[] = {&out.params.a, &out.params.b, &out.params.c, &out.params.d};
  ref::Frac* naive[] = {&out.payoffs.a, &out.payoffs.b, &out.payoffs.c, &out.payoffs.d};
  for (int i = 0; i < 4; ++i) {
    *lib[i] = eggraph::make_rational(abcd[i].first, abcd[i].second);
    *naive[i] = ref::Frac(abcd[i].first, abcd[i].second);
  }
  return out;
}

// Four distinct values drawn as num/den with |num| <= 40, den <= 12, assigned
// to (a,b,c,d) by the strict order of `scenario`.
inline RandomParams random_params(eggraph::Scenario scenario, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> num(-40, 40);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  std::vector<std::pair<std::int64_t, std::int64_t>> values;
  auto less = [](const auto& x, const auto& y) { return x.first * y.second < y.first * x.second; };
  auto same = [&less](const auto& x, const auto& y) { return !less(x, y) && !less(y, x); };
  while (values.size() < 4) {
    std::pair<std::int64_t, std::int64_t> v{num(rng), den(rng)};
    if (std::none_of(values.begin(), values.end(), [&](const auto& w) { return same(v, w); })) {
      values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end(), less);
  const auto& [v0, v1, v2, v3] = std::tie(values[0], values[1], values[2], values[3]);
  using eggraph::Scenario;
  switch (scenario) {
    case Scenario::PD: return make_params({v2, v0, v3, v1});
    case Scenario::SH: return make_params({v3, v0, v2, v1});
    case Scenario::HD: return make_params({v2, v1, v3, v0});
    case Scenario::FC: return make_params({v3, v1, v2, v0});
    case Scenario::NonAdmissible: break;
  }
  return make_params({v1, v2, v0, v3});
}

// Parses "a,b,c,d" into both representations; entries must be p/q or
// decimals with at most a few digits.
inline RandomParams make_params_from_text(const std::string& text) {
  const eggraph::GameParams g = eggraph::parse_params(text);
  std::vector<std::pair<std::int64_t, std::int64_t>> abcd;
  for (const eggraph::Rational* x : {&g.a, &g.b, &g.c, &g.d}) {
    abcd.emplace_back(static_cast<std::int64_t>(numerator(*x)), static_cast<std::int64_t>(denominator(*x)));
  }
  return make_params(abcd);
}

// Every labeled connected graph on n vertices (n <= 5), by edge subsets of K_n.
inline std::vector<RandomGraph> all_connected_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<RandomGraph> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    RandomGraph g;
    g.n = n;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) g.edges.push_back(slots[i]);
    }
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = v;
    auto find = [&comp](int v) {
      while (comp[v] != v) v = comp[v] = comp[comp[v]];
      return v;
    };
    for (auto [u, v] : g.edges) comp[find(u)] = find(v);
    bool connected = true;
    for (int v = 1; v < n; ++v) connected = connected && find(v) == find(0);
    if (connected) out.push_back(std::move(g));
  }
  return out;
}

inline eggraph::Scenario random_scenario(Rng& rng) {
  return static_cast<eggraph::Scenario>(std::uniform_int_distribution<int>(0, 3)(rng));
}

// Admissible quadruple; one draw in five forces the tie a = c so that the
// tie rule gets exercised.
inline RandomParams random_admissible_params(Rng& rng) {
  RandomParams rp = random_params(random_scenario(rng), rng);
  if (std::bernoulli_distribution(0.2)(rng)) {
    rp.params.c = rp.params.a;
    rp.payoffs.c = rp.payoffs.a;
  }
  return rp;
}

}  // namespace testing_support
