#include "pcsf/coloring.hpp"

#include <cassert>
#include <queue>

#include "pcsf/errors.hpp"

namespace pcsf {

SetPairNetwork build_set_pair_graph(const PcsfInstance& inst,
                                    const MoatFamily& family) {
  SetPairNetwork spn;
  const auto& moats = family.moats();
  const auto& pairs = inst.pairs();
  spn.moat_node.assign(moats.size(), -1);
  spn.moat_arc.assign(moats.size(), -1);
  spn.pair_node.assign(pairs.size(), -1);
  spn.pair_arc.assign(pairs.size(), -1);

  FlowNetwork& net = spn.net;
  net.source = 0;
  net.sink = 1;
  int next = 2;
  for (const Moat& m : moats)
    if (m.active || m.duration > 0) spn.moat_node[m.id] = next++;
  for (std::size_t p = 0; p < pairs.size(); ++p) spn.pair_node[p] = next++;
  net.node_count = next;

  auto add_arc = [&](int from, int to, ExtRat cap, int moat_id, int pair_idx) {
    int idx = static_cast<int>(net.arcs.size());
    net.arcs.push_back({from, to, std::move(cap)});
    spn.arc_assignment.emplace_back(moat_id, pair_idx);
    return idx;
  };

  for (const Moat& m : moats) {
    if (spn.moat_node[m.id] < 0) continue;
    spn.moat_arc[m.id] =
        add_arc(net.source, spn.moat_node[m.id], ExtRat(m.duration), -1, -1);
  }
  for (std::size_t p = 0; p < pairs.size(); ++p)
    spn.pair_arc[p] = add_arc(spn.pair_node[p], net.sink,
                              ExtRat(pairs[p].penalty), -1, -1);
  for (const Moat& m : moats) {
    if (spn.moat_node[m.id] < 0) continue;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (cuts_pair(m.members, pairs[p].i, pairs[p].j))
        add_arc(spn.moat_node[m.id], spn.pair_node[p], ExtRat::infinity(),
                m.id, static_cast<int>(p));
  }
  return spn;
}

ExtRat find_delta_e(const PcsfInstance& inst, const MoatFamily& family) {
  ExtRat best = ExtRat::infinity();
  for (const Edge& e : inst.edges()) {
    if (family.same_component(e.u, e.v)) continue;
    int t = (family.moat(family.component_moat(e.u)).active ? 1 : 0) +
            (family.moat(family.component_moat(e.v)).active ? 1 : 0);
    if (t == 0) continue;
    Rat colored = 0;
    for (const Moat& m : family.moats())
      if (m.duration != 0 && cuts_pair(m.members, e.u, e.v))
        colored += m.duration;
    assert(colored <= e.cost);
    Rat candidate = (e.cost - colored) / t;
    if (ExtRat(candidate) < best) best = ExtRat(std::move(candidate));
  }
  return best;
}

Rat find_delta_p(const PcsfInstance& inst, const MoatFamily& family) {
  std::vector<int> active = family.active_ids();
  if (active.empty())
    throw InstanceError("find_delta_p requires an active moat");
  const int num_active = static_cast<int>(active.size());

  SetPairNetwork spn = build_set_pair_graph(inst, family);
  const Rat sum_y = family.total_duration();
  Rat delta = (inst.total_penalty() - sum_y) / num_active;

  // k active moats on the source side strictly decrease each round.
  for (int round = 0; round <= num_active; ++round) {
    for (int id : active)
      spn.net.arcs[spn.moat_arc[id]].capacity =
          ExtRat(family.moat(id).duration + delta);
    MaxFlowResult res = max_flow(spn.net);
    Rat source_cut = num_active * delta + sum_y;
    if (res.value == source_cut) return delta;
    int k = 0;
    for (int id : active)
      if (res.source_side.contains(spn.moat_node[id])) ++k;
    assert(k >= 1);
    delta -= (source_cut - res.value) / k;
  }
  assert(false && "find_delta_p exceeded its iteration bound");
  return delta;
}

bool check_set_is_tight(const PcsfInstance& inst, const MoatFamily& family,
                        int moat_id) {
  if (moat_id < 0 || moat_id >= static_cast<int>(family.moats().size()))
    throw InstanceError("unknown moat id");
  SetPairNetwork spn = build_set_pair_graph(inst, family);
  const Moat& m = family.moat(moat_id);
  if (spn.moat_arc[moat_id] >= 0) {
    spn.net.arcs[spn.moat_arc[moat_id]].capacity = ExtRat(m.duration + 1);
  } else {
    // Moat absent from the network (duration 0, inactive): add it.
    int node = spn.net.node_count++;
    spn.net.arcs.push_back({spn.net.source, node, ExtRat(Rat(1))});
    const auto& pairs = inst.pairs();
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (cuts_pair(m.members, pairs[p].i, pairs[p].j))
        spn.net.arcs.push_back({node, spn.pair_node[p], ExtRat::infinity()});
  }
  MaxFlowResult res = max_flow(spn.net);
  return !(res.value > family.total_duration());
}

std::vector<char> compute_tight_moats(const PcsfInstance& inst,
                                      const MoatFamily& family) {
  SetPairNetwork spn = build_set_pair_graph(inst, family);
  MaxFlowResult res = max_flow(spn.net);

  // Nodes that can still reach the sink in the residual graph: reverse
  // BFS from the sink over residual arcs.
  const FlowNetwork& net = spn.net;
  std::vector<std::vector<int>> into(net.node_count);
  for (int a = 0; a < static_cast<int>(net.arcs.size()); ++a) {
    const FlowArc& arc = net.arcs[a];
    bool forward_residual = arc.capacity.is_infinite() ||
                            res.arc_flows[a] < arc.capacity.value();
    if (forward_residual) into[arc.to].push_back(arc.from);
    if (res.arc_flows[a] > 0) into[arc.from].push_back(arc.to);
  }
  std::vector<char> reaches_sink(net.node_count, 0);
  std::queue<int> q;
  reaches_sink[net.sink] = 1;
  q.push(net.sink);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : into[v])
      if (!reaches_sink[u]) {
        reaches_sink[u] = 1;
        q.push(u);
      }
  }

  const auto& pairs = inst.pairs();
  std::vector<char> tight(family.moats().size(), 1);
  for (const Moat& m : family.moats()) {
    if (spn.moat_node[m.id] >= 0) {
      tight[m.id] = !reaches_sink[spn.moat_node[m.id]];
    } else {
      // Absent moats route only through the pairs they cut.
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (cuts_pair(m.members, pairs[p].i, pairs[p].j) &&
            reaches_sink[spn.pair_node[p]]) {
          tight[m.id] = 0;
          break;
        }
    }
  }
  return tight;
}

DynamicColoring extract_dynamic_coloring(const PcsfInstance& inst,
                                         const MoatFamily& family) {
  SetPairNetwork spn = build_set_pair_graph(inst, family);
  MaxFlowResult res = max_flow(spn.net);
  Rat sum_y = family.total_duration();
  if (res.value != sum_y)
    throw ColoringInvalidError(rat_to_string(res.value), rat_to_string(sum_y));

  DynamicColoring dc;
  dc.pair_total.resize(inst.pairs().size(), Rat(0));
  for (int a = 0; a < static_cast<int>(spn.net.arcs.size()); ++a) {
    auto [moat_id, pair_idx] = spn.arc_assignment[a];
    if (moat_id >= 0 && res.arc_flows[a] > 0)
      dc.assignment[{moat_id, pair_idx}] = res.arc_flows[a];
  }
  for (std::size_t p = 0; p < inst.pairs().size(); ++p)
    dc.pair_total[p] = res.arc_flows[spn.pair_arc[p]];
  return dc;
}

void assert_coloring_valid(const PcsfInstance& inst,
                           const MoatFamily& family) {
  (void)extract_dynamic_coloring(inst, family);
}

ReduceResult reduce_tight_pairs(const PcsfInstance& inst,
                                const MoatFamily& family) {
  DynamicColoring dc = extract_dynamic_coloring(inst, family);
  const auto& pairs = inst.pairs();
  const int num_pairs = static_cast<int>(pairs.size());

  auto is_tight = [&](int p) { return dc.pair_total[p] == pairs[p].penalty; };

  // Each shift removes exactly one tight pair, so the loop is bounded by
  // the number of pairs.
  for (int round = 0; round <= num_pairs; ++round) {
    bool shifted = false;
    for (int p1 = 0; p1 < num_pairs && !shifted; ++p1) {
      if (!is_tight(p1)) continue;
      for (const Moat& m : family.moats()) {
        Rat y_sij = dc.assigned(m.id, p1);
        if (y_sij == 0) continue;
        for (int p2 = 0; p2 < num_pairs; ++p2) {
          if (p2 == p1 || is_tight(p2)) continue;
          if (!cuts_pair(m.members, pairs[p2].i, pairs[p2].j)) continue;
          Rat slack = pairs[p2].penalty - dc.pair_total[p2];
          Rat eps = (y_sij < slack ? y_sij : slack) / 2;
          dc.assignment[{m.id, p1}] = y_sij - eps;
          dc.pair_total[p1] -= eps;
          dc.assignment[{m.id, p2}] += eps;
          dc.pair_total[p2] += eps;
          shifted = true;
          break;
        }
        if (shifted) break;
      }
    }
    if (!shifted) break;
  }

  ReduceResult out;
  out.coloring = std::move(dc);
  for (int p = 0; p < num_pairs; ++p)
    if (out.coloring.pair_total[p] == pairs[p].penalty)
      out.tight_pairs.push_back(p);
  return out;
}

}  // namespace pcsf
