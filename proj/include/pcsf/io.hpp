#pragma once

#include <cstdint>
#include <string>

#include "pcsf/instance.hpp"

namespace pcsf {

// Instance files: `pcsf 1` header, `nodes <n>`, then `edge <u> <v> <cost>`
// and `pair <i> <j> <penalty>` lines. Vertices are 1-indexed in files and
// 0-indexed in memory; costs and penalties are nonnegative decimals with at
// most 9 fractional digits. `#` starts a comment, blank lines are skipped.

/// Throws ParseError (with the offending line number) on malformed input.
PcsfInstance parse_instance(const std::string& text);
std::string serialize_instance(const PcsfInstance& inst);

// Solution files: `cost <value>`, one `buy <u> <v>` per bought edge, one
// `pay <i> <j>` per penalized pair. Values are decimals or `p/q` rationals.

Solution parse_solution(const std::string& text, const PcsfInstance& inst);
std::string serialize_solution(const Solution& sol, const PcsfInstance& inst);

/// Seed-deterministic random instance: a simple graph with `edges` distinct
/// edges, integer costs in [0, max_cost], and `pairs` distinct demand pairs
/// with integer penalties in [1, max_penalty]. Throws InstanceError when the
/// counts exceed nodes*(nodes-1)/2 or a bound is out of range.
PcsfInstance generate_instance(int nodes, int edges, int pairs,
                               long max_cost, long max_penalty,
                               std::uint64_t seed);

}  // namespace pcsf
