#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pcsf/flow.hpp"
#include "pcsf/instance.hpp"
#include "pcsf/moats.hpp"

namespace pcsf {

/// Flow-derived assignment of static-coloring time to demand pairs:
/// y_Sij keyed by (moat id, pair index), and the per-pair totals y_ij.
struct DynamicColoring {
  std::map<std::pair<int, int>, Rat> assignment;
  std::vector<Rat> pair_total;  // aligned with inst.pairs()

  Rat assigned(int moat_id, int pair_idx) const {
    auto it = assignment.find({moat_id, pair_idx});
    return it == assignment.end() ? Rat(0) : it->second;
  }
};

/// The set-pair flow network: source -> moat (capacity y_S) -> cut pair
/// (infinite) -> sink (capacity π_ij). Holds index maps back to moats,
/// demand pairs and their arcs.
struct SetPairNetwork {
  FlowNetwork net;
  std::vector<int> moat_node;  // moat id -> node, -1 if absent
  std::vector<int> moat_arc;   // moat id -> source arc index, -1 if absent
  std::vector<int> pair_node;  // pair index -> node
  std::vector<int> pair_arc;   // pair index -> sink arc index
  // arc index -> (moat id, pair index) for moat->pair arcs, else (-1,-1)
  std::vector<std::pair<int, int>> arc_assignment;
};

/// Builds the network for the family's current durations. Contains a node
/// per moat with positive duration or active, and one per demand pair.
SetPairNetwork build_set_pair_graph(const PcsfInstance& inst,
                                    const MoatFamily& family);

/// Largest extra duration that keeps every edge within its length:
/// min over cross-component edges with t >= 1 active endpoint components
/// of (cost - colored) / t. Infinity when no such edge exists.
ExtRat find_delta_e(const PcsfInstance& inst, const MoatFamily& family);

/// Largest extra duration for all active moats that keeps the static
/// coloring valid. Parametric search by repeated max-flow: start from the
/// budget bound (Σπ - Σy)/|ActS| and shrink by the cut deficit until the
/// source-only cut is minimum. Requires at least one active moat.
Rat find_delta_p(const PcsfInstance& inst, const MoatFamily& family);

/// Whether raising y_S of this moat by any positive amount would
/// invalidate the coloring; one max-flow with the source arc raised by 1.
bool check_set_is_tight(const PcsfInstance& inst, const MoatFamily& family,
                        int moat_id);

/// Tightness verdict for every moat id from a single max-flow: a moat is
/// tight iff none of the pairs it cuts can still reach the sink in the
/// residual graph. Agrees with check_set_is_tight on every moat.
std::vector<char> compute_tight_moats(const PcsfInstance& inst,
                                      const MoatFamily& family);

/// Reads a dynamic coloring off a max-flow on the set-pair network.
/// Throws ColoringInvalidError when the flow falls short of Σ y_S.
DynamicColoring extract_dynamic_coloring(const PcsfInstance& inst,
                                         const MoatFamily& family);

/// Throws ColoringInvalidError if the current static coloring is invalid.
void assert_coloring_valid(const PcsfInstance& inst, const MoatFamily& family);

struct ReduceResult {
  std::vector<int> tight_pairs;  // Q: pair indices, ascending
  DynamicColoring coloring;      // minimal dynamic coloring
};

/// Shifts assignment away from tight pairs toward non-tight ones until no
/// (moat, tight pair, non-tight pair) triple with positive assignment
/// remains; each shift moves half the admissible amount and removes one
/// tight pair. Returns the remaining tight pairs and the final coloring.
ReduceResult reduce_tight_pairs(const PcsfInstance& inst,
                                const MoatFamily& family);

}  // namespace pcsf
