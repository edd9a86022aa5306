#include <random>

#include "doctest.h"
#include "pcsf/errors.hpp"
#include "pcsf/flow.hpp"

using namespace pcsf;

namespace {

FlowNetwork make(int nodes, int source, int sink,
                 std::vector<FlowArc> arcs) {
  FlowNetwork net;
  net.node_count = nodes;
  net.source = source;
  net.sink = sink;
  net.arcs = std::move(arcs);
  return net;
}

/// Capacity of the cut (S, V \ S) given S as a bitmask.
ExtRat cut_capacity(const FlowNetwork& net, unsigned mask) {
  Rat cap = 0;
  for (const FlowArc& a : net.arcs)
    if ((mask >> a.from & 1) && !(mask >> a.to & 1)) {
      if (a.capacity.is_infinite()) return ExtRat::infinity();
      cap += a.capacity.value();
    }
  return ExtRat(cap);
}

}  // namespace

TEST_CASE("single path saturates its first arc") {
  FlowNetwork net = make(3, 0, 2,
                         {{0, 1, ExtRat(Rat(1))}, {1, 2, ExtRat(Rat(1))}});
  MaxFlowResult res = max_flow(net);
  CHECK(res.value == Rat(1));
  CHECK(res.source_side.members() == std::vector<int>{0});
  CHECK(res.arc_flows == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("two-path network") {
  // source 0, a=1, b=2, sink 3
  FlowNetwork net = make(4, 0, 3,
                         {{0, 1, ExtRat(Rat(3))},
                          {0, 2, ExtRat(Rat(3))},
                          {1, 3, ExtRat(Rat(2))},
                          {2, 3, ExtRat(Rat(5))}});
  MaxFlowResult res = max_flow(net);
  CHECK(res.value == Rat(5));
  CHECK(res.arc_flows == std::vector<Rat>{Rat(2), Rat(3), Rat(2), Rat(3)});
}

TEST_CASE("empty network") {
  FlowNetwork net = make(2, 0, 1, {});
  MaxFlowResult res = max_flow(net);
  CHECK(res.value == Rat(0));
  CHECK(res.source_side.members() == std::vector<int>{0});
}

TEST_CASE("all-infinite path is rejected") {
  FlowNetwork net = make(3, 0, 2,
                         {{0, 1, ExtRat::infinity()},
                          {1, 2, ExtRat::infinity()}});
  CHECK_THROWS_AS(max_flow(net), UnboundedFlowError);
}

TEST_CASE("infinite middle arcs are fine when a finite arc bounds the path") {
  FlowNetwork net = make(4, 0, 3,
                         {{0, 1, ExtRat(Rat(7, 2))},
                          {1, 2, ExtRat::infinity()},
                          {2, 3, ExtRat(Rat(4))}});
  MaxFlowResult res = max_flow(net);
  CHECK(res.value == Rat(7, 2));
}

TEST_CASE("duality and minimal min-cut on random networks") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    FlowNetwork net = make(n, 0, 1, {});
    int arcs = static_cast<int>(rng() % (2 * n + 1));
    for (int a = 0; a < arcs; ++a) {
      int from = static_cast<int>(rng() % n);
      int to = static_cast<int>(rng() % n);
      if (from == to || to == 0 || from == 1) continue;
      net.arcs.push_back({from, to, ExtRat(Rat(static_cast<long>(rng() % 6)))});
    }
    MaxFlowResult res = max_flow(net);

    // Flow conservation and capacity constraints.
    std::vector<Rat> excess(n, Rat(0));
    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
      CHECK(res.arc_flows[a] >= 0);
      CHECK(ExtRat(res.arc_flows[a]) <= net.arcs[a].capacity);
      excess[net.arcs[a].from] -= res.arc_flows[a];
      excess[net.arcs[a].to] += res.arc_flows[a];
    }
    for (int v = 2; v < n; ++v) CHECK(excess[v] == 0);
    CHECK(excess[1] == res.value);

    // The flow value equals the minimum cut, and the reported source side
    // is contained in the source side of every minimum cut.
    unsigned reported = 0;
    for (int v : res.source_side.members()) reported |= 1u << v;
    bool reported_is_min = false;
    for (unsigned mask = 1; mask < (1u << n); mask += 2) {
      if (mask >> 1 & 1) continue;  // sink must be outside
      ExtRat cap = cut_capacity(net, mask);
      CHECK(ExtRat(res.value) <= cap);
      if (cap == ExtRat(res.value)) {
        CHECK((reported & ~mask) == 0);
        if (mask == reported) reported_is_min = true;
      }
    }
    CHECK(reported_is_min);
  }
}

TEST_CASE("identical networks give identical results") {
  FlowNetwork net = make(4, 0, 3,
                         {{0, 1, ExtRat(Rat(2))},
                          {0, 2, ExtRat(Rat(2))},
                          {1, 3, ExtRat(Rat(3))},
                          {2, 3, ExtRat(Rat(1))},
                          {1, 2, ExtRat(Rat(1))}});
  MaxFlowResult a = max_flow(net);
  MaxFlowResult b = max_flow(net);
  CHECK(a.value == b.value);
  CHECK(a.arc_flows == b.arc_flows);
  CHECK(a.source_side == b.source_side);
}
