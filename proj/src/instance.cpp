#include "pcsf/instance.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "pcsf/errors.hpp"

namespace pcsf {

PcsfInstance PcsfInstance::create(
    int n, std::vector<std::tuple<int, int, Rat>> edges,
    std::vector<std::tuple<int, int, Rat>> penalties) {
  if (n < 0) throw InstanceError("negative vertex count");
  PcsfInstance inst;
  inst.n_ = n;

  std::map<std::pair<int, int>, int> edge_slot;  // endpoints -> index
  for (auto& [u, v, cost] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InstanceError("edge endpoint out of range");
    if (u == v) throw InstanceError("self-loop edge");
    if (cost < 0) throw InstanceError("negative edge cost");
    if (u > v) std::swap(u, v);
    auto key = std::make_pair(u, v);
    auto it = edge_slot.find(key);
    if (it == edge_slot.end()) {
      edge_slot.emplace(key, static_cast<int>(inst.edges_.size()));
      inst.edges_.push_back({u, v, cost});
    } else if (cost < inst.edges_[it->second].cost) {
      inst.edges_[it->second].cost = cost;  // keep the cheapest parallel edge
    }
  }

  std::map<std::pair<int, int>, Rat> pair_map;
  for (auto& [i, j, pen] : penalties) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw InstanceError("pair endpoint out of range");
    if (i == j) throw InstanceError("pair with identical endpoints");
    if (pen < 0) throw InstanceError("negative penalty");
    if (pen == 0) continue;
    if (i > j) std::swap(i, j);
    auto [it, inserted] = pair_map.emplace(std::make_pair(i, j), pen);
    if (!inserted) throw InstanceError("duplicate penalty pair");
  }
  for (const auto& [key, pen] : pair_map)
    inst.pairs_.push_back({key.first, key.second, pen});
  return inst;
}

int PcsfInstance::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), std::make_pair(i, j),
      [](const PairDemand& p, const std::pair<int, int>& key) {
        return std::make_pair(p.i, p.j) < key;
      });
  if (it == pairs_.end() || it->i != i || it->j != j) return -1;
  return static_cast<int>(it - pairs_.begin());
}

Rat PcsfInstance::total_penalty() const {
  Rat sum = 0;
  for (const auto& p : pairs_) sum += p.penalty;
  return sum;
}

bool operator==(const PcsfInstance& a, const PcsfInstance& b) {
  auto edges_eq = [](const Edge& x, const Edge& y) {
    return x.u == y.u && x.v == y.v && x.cost == y.cost;
  };
  auto pairs_eq = [](const PairDemand& x, const PairDemand& y) {
    return x.i == y.i && x.j == y.j && x.penalty == y.penalty;
  };
  return a.n_ == b.n_ &&
         std::equal(a.edges_.begin(), a.edges_.end(), b.edges_.begin(),
                    b.edges_.end(), edges_eq) &&
         std::equal(a.pairs_.begin(), a.pairs_.end(), b.pairs_.begin(),
                    b.pairs_.end(), pairs_eq);
}

bool cuts_pair(const VertexSet& s, int i, int j) {
  return s.contains(i) != s.contains(j);
}

std::vector<int> cutting_edges(const VertexSet& s, const PcsfInstance& inst) {
  std::vector<int> out;
  const auto& edges = inst.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (s.contains(edges[e].u) != s.contains(edges[e].v)) out.push_back(e);
  return out;
}

Rat solution_cost(const Solution& sol, const PcsfInstance& inst) {
  Rat sum = 0;
  for (int e : sol.forest) {
    if (e < 0 || e >= static_cast<int>(inst.edges().size()))
      throw InstanceError("solution references unknown edge");
    sum += inst.edges()[e].cost;
  }
  for (int p : sol.penalized) {
    if (p < 0 || p >= static_cast<int>(inst.pairs().size()))
      throw InstanceError("solution references unknown pair");
    sum += inst.pairs()[p].penalty;
  }
  return sum;
}

}  // namespace pcsf
