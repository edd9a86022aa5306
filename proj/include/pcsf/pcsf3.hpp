#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pcsf/coloring.hpp"
#include "pcsf/instance.hpp"
#include "pcsf/moats.hpp"

namespace pcsf {

/// One event of a solver run, in execution order.
struct TraceEvent {
  enum Kind { Grow, Buy, Merge, Deactivate } kind;
  Rat delta;                // Grow: duration added to every active moat
  std::vector<int> active;  // Grow: ids of the moats that grew
  int edge = -1;            // Buy: index into inst.edges()
  int a = -1, b = -1;       // Merge: ids of the two replaced moats
  int c = -1;               // Merge: id of the union moat; Deactivate: the id
};

struct GrowthTrace {
  std::vector<TraceEvent> events;

  /// Line-oriented form: `grow <delta> <ids...>`, `buy <u> <v>` (1-indexed
  /// endpoints), `merge <a> <b> <c>`, `deactivate <id>`.
  std::string serialize(const PcsfInstance& inst) const;
};

/// Rebuilds the moat family by replaying a trace, checking each event
/// against the family state. Throws InstanceError on any mismatch.
MoatFamily replay_trace(const PcsfInstance& inst, const GrowthTrace& trace);

struct Pcsf3StepInfo {
  int iteration;  // 1-based
  Rat delta;
  ExtRat delta_e;
  Rat delta_p;
  const MoatFamily& family;
  const std::vector<char>& tight;  // per moat id, after this step's growth
};

struct Pcsf3Options {
  /// Re-check coloring validity after every growth step (also enabled by
  /// the PCSF_ASSERT=1 environment variable).
  bool check_validity = false;
  std::function<void(const Pcsf3StepInfo&)> observer;
};

struct Pcsf3Result {
  Solution solution;        // penalized = Q, forest = pruned bought edges
  std::vector<int> bought;  // every edge bought, before pruning
  MoatFamily family;
  DynamicColoring coloring;  // minimal: no moat colors both a tight and a
                             // non-tight pair
  GrowthTrace trace;
  int iterations = 0;
};

/// Moat-growing 2-approximation. Grows all active moats uniformly by
/// min(delta_e, delta_p), buys fully colored cross-component edges,
/// deactivates tight moats, and finally drops the tight pairs Q and prunes
/// the forest down to the paths serving the remaining demand pairs.
Pcsf3Result pcsf3_solve(const PcsfInstance& inst, const Pcsf3Options& opts = {});

/// Edges of `forest` (a forest, by edge index) lying on a path between the
/// endpoints of some demand pair not listed in `dropped` (pair indices).
/// Throws InstanceError if such a pair is not connected by the forest.
std::vector<int> prune_forest(const PcsfInstance& inst,
                              const std::vector<int>& forest,
                              const std::vector<int>& dropped);

}  // namespace pcsf
