#include "pcsf/ipcsf.hpp"

#include <algorithm>
#include <cassert>

#include "pcsf/errors.hpp"

namespace pcsf {

PcsfInstance reduce_instance(const PcsfInstance& inst,
                             const std::vector<int>& q1) {
  std::vector<char> drop(inst.pairs().size(), 0);
  for (int p : q1) {
    if (p < 0 || p >= static_cast<int>(inst.pairs().size()))
      throw InstanceError("reduce_instance: unknown pair index");
    drop[p] = 1;
  }
  std::vector<std::tuple<int, int, Rat>> edges, penalties;
  for (const Edge& e : inst.edges()) edges.emplace_back(e.u, e.v, e.cost);
  for (int p = 0; p < static_cast<int>(inst.pairs().size()); ++p)
    if (!drop[p])
      penalties.emplace_back(inst.pairs()[p].i, inst.pairs()[p].j,
                             inst.pairs()[p].penalty);
  return PcsfInstance::create(inst.vertex_count(), std::move(edges),
                              std::move(penalties));
}

IpcsfResult ipcsf_solve(const PcsfInstance& inst, const Pcsf3Options& opts) {
  IpcsfResult out;

  // One candidate per depth: pay everything zeroed so far plus this run's
  // tight pairs, buy this run's pruned forest. Edge indices survive the
  // reduction unchanged; pair indices must be lifted back.
  struct Level {
    Solution candidate;  // in original-instance indices, original penalties
    std::vector<int> q1; // this depth's tight pairs, original indices
  };
  std::vector<Level> levels;

  PcsfInstance current = inst;
  std::vector<int> zeroed;  // sorted original pair indices
  for (;;) {
    Pcsf3Result res = pcsf3_solve(current, opts);

    std::vector<int> q1;
    for (int p : res.solution.penalized) {
      const PairDemand& d = current.pairs()[p];
      int orig = inst.pair_index(d.i, d.j);
      assert(orig >= 0);
      q1.push_back(orig);
    }

    Level lvl;
    lvl.q1 = q1;
    lvl.candidate.forest = res.solution.forest;
    lvl.candidate.penalized = zeroed;
    lvl.candidate.penalized.insert(lvl.candidate.penalized.end(), q1.begin(),
                                   q1.end());
    std::sort(lvl.candidate.penalized.begin(), lvl.candidate.penalized.end());
    lvl.candidate.cost = solution_cost(lvl.candidate, inst);
    bool done = q1.empty();
    if (levels.empty()) out.base = std::move(res);
    levels.push_back(std::move(lvl));
    if (done) break;

    zeroed.insert(zeroed.end(), q1.begin(), q1.end());
    std::sort(zeroed.begin(), zeroed.end());
    current = reduce_instance(inst, zeroed);
    assert(levels.size() <= inst.pairs().size() + 1);
  }

  // Fold from the bottom, keeping the shallower candidate on ties.
  int best = static_cast<int>(levels.size()) - 1;
  out.records.resize(levels.size());
  for (int d = static_cast<int>(levels.size()) - 1; d >= 0; --d) {
    IterationRecord& rec = out.records[d];
    rec.depth = d + 1;
    rec.q1 = levels[d].q1;
    rec.cost1 = levels[d].candidate.cost;
    if (d + 1 < static_cast<int>(levels.size())) {
      rec.cost2 = levels[best].candidate.cost;
      rec.chosen = rec.cost1 <= *rec.cost2 ? 1 : 2;
    }
    if (rec.chosen == 1) best = d;
  }
  out.solution = levels[best].candidate;
  return out;
}

}  // namespace pcsf
