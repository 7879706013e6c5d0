#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace eggraph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Construction validates the graph: no self-loops, no repeated edges, every
/// vertex has at least one neighbor. Connectivity is not required; query it
/// with connected().
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidArgument if an endpoint is out of range, an edge is a loop
  /// or is listed twice (in either orientation), or a vertex is isolated.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const;
  bool connected() const;

  /// Each edge once, as (min, max), in lexicographic order.
  std::vector<Edge> edges() const;

  /// Hop distance from `source` to every vertex; unreachable vertices get SIZE_MAX.
  std::vector<std::size_t> distances_from(Vertex source) const;

  /// N_{<=radius}(v): every vertex within `radius` hops, including v, sorted.
  std::vector<Vertex> ball(Vertex v, std::size_t radius) const;

  /// The same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Accumulates edges for Graph::from_edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    edges_.emplace_back(u, v);
    return *this;
  }
  void add_clique(std::span<const Vertex> members);

  std::size_t vertex_count() const { return vertex_count_; }
  Graph build() const { return Graph::from_edges(vertex_count_, edges_); }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

}  // namespace eggraph
