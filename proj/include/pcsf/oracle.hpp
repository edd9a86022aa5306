#pragma once

#include <string>
#include <vector>

#include "pcsf/coloring.hpp"
#include "pcsf/instance.hpp"
#include "pcsf/moats.hpp"

namespace pcsf {

/// Exact minimum-cost solution by enumerating acyclic edge subsets and
/// charging penalties for the pairs each subset leaves unconnected.
/// Ties break toward the lexicographically smallest edge-index set.
/// Throws OracleLimitError beyond 22 edges or 16 positive-penalty pairs.
/// Enumeration is split across threads; the serial variant is the
/// reference the parallel one is tested against.
Solution exact_solve(const PcsfInstance& inst);
Solution exact_solve_serial(const PcsfInstance& inst);

struct Verdict {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks a candidate solution: the bought edges must be acyclic, every
/// positive-penalty pair must be connected or penalized, and the recorded
/// cost must match exactly.
Verdict verify_solution(const PcsfInstance& inst, const Solution& sol);

/// Per-class coloring totals for the algorithm-vs-optimum analysis.
/// Positive-penalty pairs are classified by whether the optimal forest
/// connects them (C*) and whether the algorithm paid them (paid = in q1):
/// cc = connected/connected, cp = connected/paid, pc = paid/connected,
/// pp = paid/paid, summing the pair's colored duration y_ij. cp splits
/// into cp1 (duration assigned by moats cutting exactly one optimal forest
/// edge) and cp2 (more than one).
struct Diagnostics {
  Rat cc, cp, pc, pp, cp1, cp2;
  Rat lower_bound;  // cc + cp + cp2 + pc + pp, a bound on the optimum
  Rat ratio;        // algorithm cost / optimal cost; 1 when both are 0
};

Diagnostics compute_diagnostics(const PcsfInstance& inst,
                                const MoatFamily& family,
                                const DynamicColoring& coloring,
                                const std::vector<int>& q1,
                                const Solution& opt, const Rat& algo_cost);

}  // namespace pcsf
