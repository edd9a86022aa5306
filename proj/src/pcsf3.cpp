#include "pcsf/pcsf3.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <cstring>
#include <queue>
#include <sstream>

#include "pcsf/errors.hpp"

namespace pcsf {

std::string GrowthTrace::serialize(const PcsfInstance& inst) const {
  std::ostringstream out;
  for (const TraceEvent& ev : events) {
    switch (ev.kind) {
      case TraceEvent::Grow:
        out << "grow " << rat_to_string(ev.delta);
        for (int id : ev.active) out << ' ' << id;
        out << '\n';
        break;
      case TraceEvent::Buy: {
        const Edge& e = inst.edges()[ev.edge];
        out << "buy " << e.u + 1 << ' ' << e.v + 1 << '\n';
        break;
      }
      case TraceEvent::Merge:
        out << "merge " << ev.a << ' ' << ev.b << ' ' << ev.c << '\n';
        break;
      case TraceEvent::Deactivate:
        out << "deactivate " << ev.c << '\n';
        break;
    }
  }
  return out.str();
}

MoatFamily replay_trace(const PcsfInstance& inst, const GrowthTrace& trace) {
  MoatFamily family = MoatFamily::singletons(inst.vertex_count());
  for (const TraceEvent& ev : trace.events) {
    switch (ev.kind) {
      case TraceEvent::Grow: {
        std::vector<int> active = family.active_ids();
        if (active != ev.active)
          throw InstanceError("trace replay: active moat sets differ");
        for (int id : active) family.moat(id).duration += ev.delta;
        break;
      }
      case TraceEvent::Buy: {
        const Edge& e = inst.edges()[ev.edge];
        Rat colored = 0;
        for (const Moat& m : family.moats())
          if (cuts_pair(m.members, e.u, e.v)) colored += m.duration;
        if (colored != e.cost)
          throw InstanceError("trace replay: bought edge not fully colored");
        break;
      }
      case TraceEvent::Merge: {
        const Moat& ma = family.moat(ev.a);
        const Moat& mb = family.moat(ev.b);
        if (!ma.members.disjoint_with(mb.members))
          throw InstanceError("trace replay: merge of overlapping moats");
        int id = family.merge(ma.members.members().front(),
                              mb.members.members().front());
        if (id != ev.c)
          throw InstanceError("trace replay: merged moat id differs");
        break;
      }
      case TraceEvent::Deactivate:
        if (!family.moat(ev.c).active)
          throw InstanceError("trace replay: moat already inactive");
        family.deactivate(ev.c);
        break;
    }
  }
  return family;
}

std::vector<int> prune_forest(const PcsfInstance& inst,
                              const std::vector<int>& forest,
                              const std::vector<int>& dropped) {
  const int n = inst.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge)
  for (int e : forest) {
    const Edge& ed = inst.edges()[e];
    adj[ed.u].emplace_back(ed.v, e);
    adj[ed.v].emplace_back(ed.u, e);
  }

  std::vector<char> keep(inst.edges().size(), 0);
  std::vector<int> parent_edge(n), parent(n);
  for (int p = 0; p < static_cast<int>(inst.pairs().size()); ++p) {
    if (std::binary_search(dropped.begin(), dropped.end(), p)) continue;
    const PairDemand& d = inst.pairs()[p];
    std::fill(parent.begin(), parent.end(), -1);
    parent[d.i] = d.i;
    std::queue<int> q;
    q.push(d.i);
    while (!q.empty() && parent[d.j] < 0) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : adj[v])
        if (parent[w] < 0) {
          parent[w] = v;
          parent_edge[w] = e;
          q.push(w);
        }
    }
    if (parent[d.j] < 0)
      throw InstanceError("demand pair not connected by the forest");
    for (int v = d.j; v != d.i; v = parent[v]) keep[parent_edge[v]] = 1;
  }

  std::vector<int> kept;
  for (int e : forest)
    if (keep[e]) kept.push_back(e);
  std::sort(kept.begin(), kept.end());
  return kept;
}

Pcsf3Result pcsf3_solve(const PcsfInstance& inst, const Pcsf3Options& opts) {
  const int n = inst.vertex_count();
  bool check = opts.check_validity;
  if (const char* env = std::getenv("PCSF_ASSERT"))
    if (std::strcmp(env, "1") == 0) check = true;

  Pcsf3Result out{.family = MoatFamily::singletons(n)};
  MoatFamily& family = out.family;

  while (family.active_count() > 0) {
    ++out.iterations;
    // Every iteration buys an edge or retires a moat.
    assert(out.iterations <= 2 * n);

    ExtRat delta_e = find_delta_e(inst, family);
    Rat delta_p = find_delta_p(inst, family);
    Rat delta = min(delta_e, ExtRat(delta_p)).value();
    assert(delta >= 0);

    TraceEvent grow{.kind = TraceEvent::Grow,
                    .delta = delta,
                    .active = family.active_ids()};
    for (int id : grow.active) family.moat(id).duration += delta;
    out.trace.events.push_back(std::move(grow));
    if (check) assert_coloring_valid(inst, family);

    // Buy and contract every fully colored cross-component edge; a merge
    // can only retire edges, never color new ones, so one rescan loop
    // reaches the fixpoint.
    for (bool merged = true; merged;) {
      merged = false;
      for (int e = 0; e < static_cast<int>(inst.edges().size()); ++e) {
        const Edge& ed = inst.edges()[e];
        if (family.same_component(ed.u, ed.v)) continue;
        Rat colored = 0;
        for (const Moat& m : family.moats())
          if (m.duration != 0 && cuts_pair(m.members, ed.u, ed.v))
            colored += m.duration;
        if (colored != ed.cost) continue;
        int a = family.component_moat(ed.u);
        int b = family.component_moat(ed.v);
        int c = family.merge(ed.u, ed.v);
        out.bought.push_back(e);
        out.trace.events.push_back({.kind = TraceEvent::Buy, .edge = e});
        out.trace.events.push_back(
            {.kind = TraceEvent::Merge, .a = a, .b = b, .c = c});
        merged = true;
      }
    }

    std::vector<char> tight = compute_tight_moats(inst, family);
    for (int id : family.active_ids())
      if (tight[id]) {
        family.deactivate(id);
        out.trace.events.push_back({.kind = TraceEvent::Deactivate, .c = id});
      }

    if (opts.observer)
      opts.observer({.iteration = out.iterations,
                     .delta = delta,
                     .delta_e = delta_e,
                     .delta_p = delta_p,
                     .family = family,
                     .tight = tight});
  }

  ReduceResult reduced = reduce_tight_pairs(inst, family);
  out.coloring = std::move(reduced.coloring);
  out.solution.penalized = std::move(reduced.tight_pairs);
  out.solution.forest =
      prune_forest(inst, out.bought, out.solution.penalized);
  out.solution.cost = solution_cost(out.solution, inst);
  return out;
}

}  // namespace pcsf
