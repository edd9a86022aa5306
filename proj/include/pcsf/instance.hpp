#pragma once

#include <utility>
#include <vector>

#include "pcsf/rat.hpp"
#include "pcsf/vertex_set.hpp"

namespace pcsf {

struct Edge {
  int u, v;  // u < v
  Rat cost;
};

struct PairDemand {
  int i, j;  // i < j
  Rat penalty;  // > 0; zero-penalty pairs are never stored
};

/// A PCSF instance: an undirected graph with rational edge costs and a
/// sparse map of positive penalties over unordered vertex pairs.
///
/// Normalized at construction: endpoints ordered, parallel edges collapsed
/// to the cheapest, self-loops and negative values rejected, zero penalties
/// dropped, demand pairs sorted lexicographically.
class PcsfInstance {
 public:
  PcsfInstance() : n_(0) {}

  /// Throws InstanceError on invalid data.
  static PcsfInstance create(int n,
                             std::vector<std::tuple<int, int, Rat>> edges,
                             std::vector<std::tuple<int, int, Rat>> penalties);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<PairDemand>& pairs() const { return pairs_; }

  /// Index into pairs() for unordered {i, j}, or -1 if no positive penalty.
  int pair_index(int i, int j) const;

  /// Sum of all stored penalties.
  Rat total_penalty() const;

  friend bool operator==(const PcsfInstance& a, const PcsfInstance& b);

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<PairDemand> pairs_;
};

/// A candidate solution: pay the penalties of `penalized` (indices into
/// inst.pairs()) and buy the edges of `forest` (indices into inst.edges()).
struct Solution {
  std::vector<int> penalized;
  std::vector<int> forest;
  Rat cost;
};

/// |{i, j} ∩ s| == 1.
bool cuts_pair(const VertexSet& s, int i, int j);

/// Indices of edges with exactly one endpoint in s.
std::vector<int> cutting_edges(const VertexSet& s, const PcsfInstance& inst);

/// c(forest) + π(penalized), exactly. Throws InstanceError on a dangling
/// edge or pair reference.
Rat solution_cost(const Solution& sol, const PcsfInstance& inst);

}  // namespace pcsf
