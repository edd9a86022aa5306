#pragma once

#include <optional>
#include <vector>

#include "pcsf/pcsf3.hpp"

namespace pcsf {

/// Audit record for one level of the penalty-zeroing recursion. `q1` holds
/// the tight pairs found at this depth as indices into the original
/// instance; costs are under the original penalties.
struct IterationRecord {
  int depth = 1;              // 1-based
  std::vector<int> q1;
  Rat cost1;                  // pay q1 plus everything zeroed so far
  std::optional<Rat> cost2;   // best deeper candidate; absent at the bottom
  int chosen = 1;             // 1 = this level's candidate, 2 = deeper
};

struct IpcsfResult {
  Solution solution;
  std::vector<IterationRecord> records;
  Pcsf3Result base;  // the depth-1 solver run, for diagnostics
};

/// Runs the moat-growing solver, zeroes the penalties of the tight pairs it
/// paid, and repeats on the reduced instance until nothing is paid; returns
/// the cheapest candidate across depths (ties favor the shallower one).
/// Every candidate is costed under the original penalties and pays every
/// pair whose penalty was zeroed on the way down.
IpcsfResult ipcsf_solve(const PcsfInstance& inst,
                        const Pcsf3Options& opts = {});

/// Copy of `inst` with the penalties of `q1` (indices into inst.pairs())
/// removed. Throws InstanceError on an out-of-range index.
PcsfInstance reduce_instance(const PcsfInstance& inst,
                             const std::vector<int>& q1);

}  // namespace pcsf
