#pragma once

#include "eggraph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eggraph {

/// One strategy bit per vertex, 1 = cooperate, 0 = defect. Bits are packed
/// into 64-bit words so that hashing and comparison of whole states is cheap.
class StrategyVector {
 public:
  StrategyVector() = default;
  explicit StrategyVector(std::size_t size, bool cooperate = false);

  static StrategyVector all_cooperate(std::size_t size) { return StrategyVector(size, true); }
  static StrategyVector all_defect(std::size_t size) { return StrategyVector(size, false); }
  /// Parses a string of '0'/'1'. Throws InvalidArgument on other characters.
  static StrategyVector from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool cooperates(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(std::size_t v, bool cooperate) {
    const std::uint64_t mask = std::uint64_t{1} << (v & 63);
    if (cooperate) {
      words_[v >> 6] |= mask;
    } else {
      words_[v >> 6] &= ~mask;
    }
  }

  std::size_t cooperator_count() const;
  std::string to_string() const;
  std::size_t hash() const;

  /// The same state with vertex v renamed to perm[v].
  StrategyVector relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const StrategyVector&, const StrategyVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StrategyVectorHash {
  std::size_t operator()(const StrategyVector& s) const { return s.hash(); }
};

/// Which vertices may revise their strategy at time t.
///
/// Synchronous: every vertex, every step. PeriodicSubsets: step t uses
/// subsets[t mod subsets.size()].
class UpdateSchedule {
 public:
  static UpdateSchedule synchronous() { return UpdateSchedule{}; }
  /// Throws InvalidArgument if `subsets` is empty or any listed vertex is >= vertex_count.
  static UpdateSchedule periodic_subsets(std::vector<std::vector<Vertex>> subsets,
                                         std::size_t vertex_count);

  bool is_synchronous() const { return subsets_.empty(); }
  /// Number of distinct phases; 1 for the synchronous schedule.
  std::size_t phase_count() const { return subsets_.empty() ? 1 : subsets_.size(); }
  std::size_t phase(std::size_t t) const { return t % phase_count(); }
  /// Only valid for periodic schedules.
  std::span<const Vertex> active(std::size_t t) const { return subsets_[phase(t)]; }

 private:
  std::vector<std::vector<Vertex>> subsets_;
};

enum class VertexClass { InnerCooperator, BoundaryCooperator, BoundaryDefector, InnerDefector };

std::string_view to_string(VertexClass cls);

/// Inner: every neighbor plays the same strategy as v. Boundary: at least one does not.
VertexClass vertex_class(const Graph& graph, const StrategyVector& state, Vertex v);

}  // namespace eggraph
