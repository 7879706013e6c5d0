#include "eggraph/error.hpp"
#include "eggraph/graph.hpp"
#include "eggraph/state.hpp"

#include <doctest.h>

#include <vector>

using namespace eggraph;

TEST_SUITE("graph") {
  TEST_CASE("construction sorts and symmetrizes adjacency") {
    const std::vector<Edge> edges{{2, 0}, {0, 1}, {1, 3}};
    const Graph g = Graph::from_edges(4, edges);
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<Vertex>{1, 2});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.connected());
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
  }

  TEST_CASE("validation") {
    const std::vector<Edge> loop{{0, 0}, {0, 1}};
    CHECK_THROWS_AS(Graph::from_edges(2, loop), InvalidArgument);
    const std::vector<Edge> twice{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, twice), InvalidArgument);
    const std::vector<Edge> range{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(2, range), InvalidArgument);
    const std::vector<Edge> isolated{{0, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, isolated), InvalidArgument);
  }

  TEST_CASE("disconnected graphs are allowed and reported") {
    const std::vector<Edge> edges{{0, 1}, {2, 3}};
    const Graph g = Graph::from_edges(4, edges);
    CHECK_FALSE(g.connected());
    CHECK(g.distances_from(0)[3] == SIZE_MAX);
  }

  TEST_CASE("balls and distances") {
    GraphBuilder b(5);
    for (Vertex v = 0; v < 4; ++v) b.add_edge(v, v + 1);
    const Graph g = b.build();
    CHECK(g.distances_from(0) == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(g.ball(2, 1) == std::vector<Vertex>{1, 2, 3});
    CHECK(g.ball(0, 0) == std::vector<Vertex>{0});
    CHECK(g.ball(0, 10).size() == 5);
  }

  TEST_CASE("cliques and relabeling") {
    GraphBuilder b(4);
    const std::vector<Vertex> members{0, 1, 2};
    b.add_clique(members);
    b.add_edge(2, 3);
    const Graph g = b.build();
    CHECK(g.edge_count() == 4);
    const std::vector<Vertex> perm{3, 2, 1, 0};
    const Graph h = g.relabeled(perm);
    CHECK(h.has_edge(3, 2));
    CHECK(h.has_edge(1, 0));
    CHECK(h.edge_count() == 4);
    CHECK(h.relabeled(perm) == g);
  }
}

TEST_SUITE("state") {
  TEST_CASE("bit strings round trip") {
    const StrategyVector x = StrategyVector::from_string("1011");
    CHECK(x.size() == 4);
    CHECK(x.cooperates(0));
    CHECK_FALSE(x.cooperates(1));
    CHECK(x.cooperator_count() == 3);
    CHECK(x.to_string() == "1011");
    CHECK_THROWS_AS(StrategyVector::from_string("10x"), InvalidArgument);
  }

  TEST_CASE("states spanning several words") {
    StrategyVector x(130);
    x.set(0, true);
    x.set(64, true);
    x.set(129, true);
    CHECK(x.cooperator_count() == 3);
    x.set(64, false);
    CHECK(x.cooperator_count() == 2);
    CHECK(StrategyVector::all_cooperate(130).cooperator_count() == 130);
    CHECK(StrategyVector::all_defect(130).cooperator_count() == 0);
    StrategyVector y(130);
    y.set(0, true);
    y.set(129, true);
    CHECK(x == y);
    CHECK(x.hash() == y.hash());
    y.set(1, true);
    CHECK_FALSE(x == y);
  }

  TEST_CASE("relabeling a state") {
    const StrategyVector x = StrategyVector::from_string("1100");
    const std::vector<Vertex> perm{2, 3, 0, 1};
    CHECK(x.relabeled(perm).to_string() == "0011");
  }

  TEST_CASE("schedules") {
    const UpdateSchedule sync = UpdateSchedule::synchronous();
    CHECK(sync.is_synchronous());
    CHECK(sync.phase_count() == 1);
    const UpdateSchedule periodic = UpdateSchedule::periodic_subsets({{0, 1}, {2}}, 3);
    CHECK(periodic.phase_count() == 2);
    CHECK(periodic.phase(5) == 1);
    CHECK(periodic.active(4).size() == 2);
    CHECK_THROWS_AS(UpdateSchedule::periodic_subsets({}, 3), InvalidArgument);
    CHECK_THROWS_AS(UpdateSchedule::periodic_subsets({{0, 3}}, 3), InvalidArgument);
  }
}
