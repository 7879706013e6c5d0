#include "eggraph/state.hpp"

#include "eggraph/error.hpp"

#include <bit>
#include <string>

namespace eggraph {

StrategyVector::StrategyVector(std::size_t size, bool cooperate)
    : size_(size), words_((size + 63) / 64, cooperate ? ~std::uint64_t{0} : 0) {
  // Keep padding bits zero so equality and hashing see only real vertices.
  if (cooperate && (size & 63) != 0) words_.back() = (std::uint64_t{1} << (size & 63)) - 1;
}

StrategyVector StrategyVector::from_string(std::string_view bits) {
  StrategyVector s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s.set(i, true);
    } else if (bits[i] != '0') {
      throw InvalidArgument("strategy string may contain only '0' and '1'");
    }
  }
  return s;
}

std::size_t StrategyVector::cooperator_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string StrategyVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (cooperates(i)) out[i] = '1';
  }
  return out;
}

std::size_t StrategyVector::hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ size_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

StrategyVector StrategyVector::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != size_) throw InvalidArgument("permutation size does not match state");
  StrategyVector out(size_);
  for (std::size_t v = 0; v < size_; ++v) out.set(perm[v], cooperates(v));
  return out;
}

UpdateSchedule UpdateSchedule::periodic_subsets(std::vector<std::vector<Vertex>> subsets,
                                                std::size_t vertex_count) {
  if (subsets.empty()) throw InvalidArgument("periodic schedule needs at least one subset");
  for (const auto& subset : subsets) {
    for (Vertex v : subset) {
      if (v >= vertex_count) {
        throw InvalidArgument("schedule lists vertex " + std::to_string(v) + " outside the graph");
      }
    }
  }
  UpdateSchedule s;
  s.subsets_ = std::move(subsets);
  return s;
}

std::string_view to_string(VertexClass cls) {
  switch (cls) {
    case VertexClass::InnerCooperator: return "InnerCooperator";
    case VertexClass::BoundaryCooperator: return "BoundaryCooperator";
    case VertexClass::BoundaryDefector: return "BoundaryDefector";
    case VertexClass::InnerDefector: return "InnerDefector";
  }
  return "InnerDefector";
}

VertexClass vertex_class(const Graph& graph, const StrategyVector& state, Vertex v) {
  const bool own = state.cooperates(v);
  bool mixed = false;
  for (Vertex w : graph.neighbors(v)) {
    if (state.cooperates(w) != own) {
      mixed = true;
      break;
    }
  }
  if (own) return mixed ? VertexClass::BoundaryCooperator : VertexClass::InnerCooperator;
  return mixed ? VertexClass::BoundaryDefector : VertexClass::InnerDefector;
}

}  // namespace eggraph
