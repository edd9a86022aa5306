#include "pcsf/flow.hpp"

#include <cassert>
#include <queue>

#include "pcsf/errors.hpp"

namespace {

using pcsf::ExtRat;
using pcsf::Rat;

struct ResidualArc {
  int to;
  int paired;    // index of the opposite-direction arc
  ExtRat res;    // remaining residual capacity
  int orig;      // index into the input arc list, -1 for reverse arcs
};

bool has_residual(const ResidualArc& a) {
  return a.res.is_infinite() || a.res.value() > 0;
}

void push(std::vector<ResidualArc>& arcs, int idx, const Rat& amount) {
  ResidualArc& a = arcs[idx];
  if (a.res.is_finite()) a.res = ExtRat(a.res.value() - amount);
  ResidualArc& b = arcs[a.paired];
  assert(b.res.is_finite());
  b.res = ExtRat(b.res.value() + amount);
}

}  // namespace

namespace pcsf {

MaxFlowResult max_flow(const FlowNetwork& net) {
  assert(net.source != net.sink);
  const int n = net.node_count;

  std::vector<ResidualArc> arcs;
  std::vector<std::vector<int>> adj(n);
  arcs.reserve(2 * net.arcs.size());
  for (int i = 0; i < static_cast<int>(net.arcs.size()); ++i) {
    const FlowArc& a = net.arcs[i];
    assert(a.capacity.is_infinite() || a.capacity.value() >= 0);
    int f = static_cast<int>(arcs.size());
    arcs.push_back({a.to, f + 1, a.capacity, i});
    arcs.push_back({a.from, f, ExtRat(Rat(0)), -1});
    adj[a.from].push_back(f);
    adj[a.to].push_back(f + 1);
  }

  std::vector<int> level(n);
  std::vector<std::size_t> iter(n);
  Rat total = 0;

  auto bfs = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[net.source] = 0;
    q.push(net.source);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int idx : adj[v]) {
        const ResidualArc& a = arcs[idx];
        if (level[a.to] < 0 && has_residual(a)) {
          level[a.to] = level[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level[net.sink] >= 0;
  };

  // Blocking-flow DFS; `limit` is the bottleneck so far along the path.
  auto dfs = [&](auto&& self, int v, const ExtRat& limit) -> ExtRat {
    if (v == net.sink) {
      if (limit.is_infinite())
        throw UnboundedFlowError("all-infinite augmenting path");
      return limit;
    }
    for (; iter[v] < adj[v].size(); ++iter[v]) {
      int idx = adj[v][iter[v]];
      ResidualArc& a = arcs[idx];
      if (!has_residual(a) || level[a.to] != level[v] + 1) continue;
      ExtRat pushed = self(self, a.to, min(limit, a.res));
      if (pushed.is_finite() && pushed.value() > 0) {
        push(arcs, idx, pushed.value());
        return pushed;
      }
    }
    level[v] = -1;  // dead end for this phase
    return ExtRat(Rat(0));
  };

  while (bfs()) {
    std::fill(iter.begin(), iter.end(), 0);
    for (;;) {
      ExtRat pushed = dfs(dfs, net.source, ExtRat::infinity());
      if (!pushed.is_finite() || pushed.value() == 0) break;
      total += pushed.value();
    }
  }

  MaxFlowResult result;
  result.value = total;
  result.arc_flows.resize(net.arcs.size(), Rat(0));
  for (const ResidualArc& a : arcs) {
    if (a.orig < 0) continue;
    // Flow on a forward arc equals the residual accumulated on its pair.
    result.arc_flows[a.orig] = arcs[a.paired].res.value();
  }

  result.source_side = VertexSet(n);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  seen[net.source] = 1;
  q.push(net.source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    result.source_side.insert(v);
    for (int idx : adj[v]) {
      const ResidualArc& a = arcs[idx];
      if (!seen[a.to] && has_residual(a)) {
        seen[a.to] = 1;
        q.push(a.to);
      }
    }
  }
  return result;
}

}  // namespace pcsf
