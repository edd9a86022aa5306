#pragma once

#include <vector>

#include "pcsf/rat.hpp"
#include "pcsf/vertex_set.hpp"

namespace pcsf {

struct FlowArc {
  int from, to;
  ExtRat capacity;
};

struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowArc> arcs;
};

struct MaxFlowResult {
  Rat value;
  /// Nodes reachable from the source in the final residual graph: the
  /// source side of the unique inclusion-minimal minimum cut, which also
  /// has the fewest nodes among all minimum cuts.
  VertexSet source_side;
  /// Flow per arc, aligned with FlowNetwork::arcs.
  std::vector<Rat> arc_flows;
};

/// Exact maximum flow (Dinic). Deterministic: identical networks yield
/// identical results. Throws UnboundedFlowError if an all-infinite-capacity
/// source-to-sink path exists.
MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace pcsf
