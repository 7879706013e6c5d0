#include "eggraph/graph.hpp"

#include "eggraph/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace eggraph {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw InvalidArgument("too many vertices: " + std::to_string(vertex_count));
  }
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") references a vertex outside 0.." + std::to_string(vertex_count) + "-1");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (degree[v] == 0) throw InvalidArgument("vertex " + std::to_string(v) + " has no neighbors");
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.targets_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw InvalidArgument("edge (" + std::to_string(v) + "," + std::to_string(*dup) + ") listed twice");
    }
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= size() || v >= size()) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::size_t> Graph::distances_from(Vertex source) const {
  constexpr auto unreachable = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(size(), unreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : neighbors(v)) {
      if (dist[w] == unreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool Graph::connected() const {
  if (size() == 0) return true;
  const auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

std::vector<Vertex> Graph::ball(Vertex v, std::size_t radius) const {
  std::vector<Vertex> out{v};
  std::vector<Vertex> frontier{v};
  std::vector<bool> seen(size(), false);
  seen[v] = true;
  for (std::size_t hop = 0; hop < radius && !frontier.empty(); ++hop) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex w : neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
          out.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != size()) throw InvalidArgument("permutation size does not match graph");
  std::vector<Edge> mapped;
  mapped.reserve(edge_count());
  for (const auto& [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return from_edges(size(), mapped);
}

void GraphBuilder::add_clique(std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) add_edge(members[i], members[j]);
  }
}

}  // namespace eggraph
