#include <random>

#include "doctest.h"
#include "pcsf/coloring.hpp"
#include "pcsf/errors.hpp"
#include "pcsf/io.hpp"
#include "pcsf/pcsf3.hpp"

using namespace pcsf;

namespace {

/// Index of the arc from `from` to `to`, or -1.
int find_arc(const FlowNetwork& net, int from, int to) {
  for (int a = 0; a < static_cast<int>(net.arcs.size()); ++a)
    if (net.arcs[a].from == from && net.arcs[a].to == to) return a;
  return -1;
}

}  // namespace

TEST_CASE("set-pair network layout") {
  PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(6)}});
  MoatFamily family = MoatFamily::singletons(2);
  SetPairNetwork spn = build_set_pair_graph(inst, family);
  CHECK(spn.net.node_count == 5);
  CHECK(spn.net.arcs.size() == 5);
  for (int id : {0, 1}) {
    int src = find_arc(spn.net, spn.net.source, spn.moat_node[id]);
    REQUIRE(src >= 0);
    CHECK(spn.net.arcs[src].capacity == ExtRat(Rat(0)));
    int cut = find_arc(spn.net, spn.moat_node[id], spn.pair_node[0]);
    REQUIRE(cut >= 0);
    CHECK(spn.net.arcs[cut].capacity.is_infinite());
  }
  int sink = find_arc(spn.net, spn.pair_node[0], spn.net.sink);
  REQUIRE(sink >= 0);
  CHECK(spn.net.arcs[sink].capacity == ExtRat(Rat(6)));
}

TEST_CASE("a moat spanning everything cuts no pair") {
  PcsfInstance inst =
      PcsfInstance::create(2, {{0, 1, Rat(1)}}, {{0, 1, Rat(6)}});
  MoatFamily family = MoatFamily::singletons(2);
  family.merge(0, 1);
  SetPairNetwork spn = build_set_pair_graph(inst, family);
  CHECK(find_arc(spn.net, spn.moat_node[2], spn.pair_node[0]) == -1);
}

TEST_CASE("moat with duration cutting two pairs") {
  PcsfInstance inst = PcsfInstance::create(
      3, {}, {{0, 1, Rat(3)}, {0, 2, Rat(1)}});
  MoatFamily family = MoatFamily::singletons(3);
  family.moat(0).duration = 2;
  SetPairNetwork spn = build_set_pair_graph(inst, family);
  int src = find_arc(spn.net, spn.net.source, spn.moat_node[0]);
  CHECK(spn.net.arcs[src].capacity == ExtRat(Rat(2)));
  CHECK(find_arc(spn.net, spn.moat_node[0], spn.pair_node[0]) >= 0);
  CHECK(find_arc(spn.net, spn.moat_node[0], spn.pair_node[1]) >= 0);
}

TEST_CASE("largest growth within edge lengths") {
  SUBCASE("both endpoints active") {
    PcsfInstance inst = PcsfInstance::create(2, {{0, 1, Rat(10)}}, {});
    MoatFamily family = MoatFamily::singletons(2);
    CHECK(find_delta_e(inst, family) == ExtRat(Rat(5)));
    family.deactivate(1);
    CHECK(find_delta_e(inst, family) == ExtRat(Rat(10)));
    family.deactivate(0);
    CHECK(find_delta_e(inst, family) == ExtRat::infinity());
  }
  SUBCASE("triangle takes the cheapest edge") {
    PcsfInstance inst = PcsfInstance::create(
        3, {{0, 1, Rat(4)}, {1, 2, Rat(6)}, {0, 2, Rat(10)}}, {});
    MoatFamily family = MoatFamily::singletons(3);
    CHECK(find_delta_e(inst, family) == ExtRat(Rat(2)));
  }
  SUBCASE("no edges means no bound") {
    PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(1)}});
    MoatFamily family = MoatFamily::singletons(2);
    CHECK(find_delta_e(inst, family) == ExtRat::infinity());
  }
}

TEST_CASE("largest growth within penalties") {
  SUBCASE("single pair split between two moats") {
    PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(6)}});
    MoatFamily family = MoatFamily::singletons(2);
    CHECK(find_delta_p(inst, family) == Rat(3));
  }
  SUBCASE("two pairs sharing a vertex") {
    PcsfInstance inst = PcsfInstance::create(
        3, {}, {{0, 1, Rat(4)}, {0, 2, Rat(4)}});
    MoatFamily family = MoatFamily::singletons(3);
    CHECK(find_delta_p(inst, family) == Rat(8, 3));
  }
  SUBCASE("zero-penalty surroundings pin the growth at zero") {
    PcsfInstance inst = PcsfInstance::create(2, {}, {});
    MoatFamily family = MoatFamily::singletons(2);
    family.deactivate(1);
    CHECK(find_delta_p(inst, family) == Rat(0));
  }
  SUBCASE("budget bound needs the cut refinement") {
    // Pair (0,2) is cut by {0} and {2} only; the uncut middle moat forces
    // one refinement step down to 0... but only after the shared budget
    // estimate (3/2)/3 fails.
    PcsfInstance inst = PcsfInstance::create(3, {}, {{0, 2, Rat(3, 2)}});
    MoatFamily family = MoatFamily::singletons(3);
    CHECK(find_delta_p(inst, family) == Rat(0));
    family.deactivate(1);
    CHECK(find_delta_p(inst, family) == Rat(3, 4));
  }
  SUBCASE("no active moat is a contract violation") {
    PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(6)}});
    MoatFamily family = MoatFamily::singletons(2);
    family.deactivate(0);
    family.deactivate(1);
    CHECK_THROWS_AS(find_delta_p(inst, family), InstanceError);
  }
}

TEST_CASE("growth bound is maximal") {
  // After growing by the returned amount the coloring is still valid and
  // no further growth is possible.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    PcsfInstance inst = generate_instance(5, 0, 4, 10, 10, seed);
    MoatFamily family = MoatFamily::singletons(5);
    Rat dp = find_delta_p(inst, family);
    for (int id : family.active_ids()) family.moat(id).duration += dp;
    CHECK_NOTHROW(assert_coloring_valid(inst, family));
    CHECK(find_delta_p(inst, family) == Rat(0));
  }
}

TEST_CASE("per-moat tightness") {
  PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(6)}});
  MoatFamily family = MoatFamily::singletons(2);
  SUBCASE("saturated pair") {
    family.moat(0).duration = 2;
    family.moat(1).duration = 4;
    CHECK(check_set_is_tight(inst, family, 0));
    CHECK(check_set_is_tight(inst, family, 1));
  }
  SUBCASE("slack admits more flow") {
    family.moat(0).duration = 2;
    CHECK(!check_set_is_tight(inst, family, 0));
  }
  SUBCASE("moat cutting nothing is tight") {
    family.merge(0, 1);
    CHECK(check_set_is_tight(inst, family, 2));
  }
  SUBCASE("unknown id") {
    CHECK_THROWS_AS(check_set_is_tight(inst, family, 9), InstanceError);
  }
}

TEST_CASE("batch tightness agrees with the per-moat check") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    PcsfInstance inst = generate_instance(6, 8, 5, 6, 6, seed);
    Pcsf3Options opts;
    opts.observer = [&](const Pcsf3StepInfo& info) {
      std::vector<char> batch = compute_tight_moats(inst, info.family);
      for (const Moat& m : info.family.moats()) {
        CHECK(static_cast<bool>(batch[m.id]) ==
              check_set_is_tight(inst, info.family, m.id));
        CHECK(batch[m.id] == info.tight[m.id]);
      }
    };
    pcsf3_solve(inst, opts);
  }
}

TEST_CASE("reading a coloring off the flow") {
  SUBCASE("zero durations give a zero coloring") {
    PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(6)}});
    MoatFamily family = MoatFamily::singletons(2);
    DynamicColoring dc = extract_dynamic_coloring(inst, family);
    CHECK(dc.assignment.empty());
    CHECK(dc.pair_total == std::vector<Rat>{Rat(0)});
  }
  SUBCASE("unique feasible flow") {
    PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(6)}});
    MoatFamily family = MoatFamily::singletons(2);
    family.moat(0).duration = 3;
    family.moat(1).duration = 3;
    DynamicColoring dc = extract_dynamic_coloring(inst, family);
    CHECK(dc.assigned(0, 0) == Rat(3));
    CHECK(dc.assigned(1, 0) == Rat(3));
    CHECK(dc.pair_total[0] == Rat(6));
  }
  SUBCASE("oversized durations are invalid") {
    PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(6)}});
    MoatFamily family = MoatFamily::singletons(2);
    family.moat(0).duration = 4;
    family.moat(1).duration = 4;
    try {
      extract_dynamic_coloring(inst, family);
      FAIL("expected ColoringInvalidError");
    } catch (const ColoringInvalidError& e) {
      CHECK(e.flow_value() == "6");
      CHECK(e.total_duration() == "8");
    }
  }
}

TEST_CASE("shifting assignment away from tight pairs") {
  SUBCASE("single shift") {
    PcsfInstance inst = PcsfInstance::create(
        3, {}, {{0, 1, Rat(2)}, {0, 2, Rat(5)}});
    MoatFamily family = MoatFamily::singletons(3);
    family.moat(0).duration = 2;
    ReduceResult res = reduce_tight_pairs(inst, family);
    CHECK(res.tight_pairs.empty());
    CHECK(res.coloring.assigned(0, 0) == Rat(1));
    CHECK(res.coloring.assigned(0, 1) == Rat(1));
    CHECK(res.coloring.pair_total[0] == Rat(1));
    CHECK(res.coloring.pair_total[1] == Rat(1));
  }
  SUBCASE("no tight pairs leaves the coloring unchanged") {
    PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(6)}});
    MoatFamily family = MoatFamily::singletons(2);
    family.moat(0).duration = 1;
    ReduceResult res = reduce_tight_pairs(inst, family);
    CHECK(res.tight_pairs.empty());
    CHECK(res.coloring.pair_total[0] == Rat(1));
  }
  SUBCASE("all pairs tight leaves the coloring unchanged") {
    PcsfInstance inst = PcsfInstance::create(2, {}, {{0, 1, Rat(6)}});
    MoatFamily family = MoatFamily::singletons(2);
    family.moat(0).duration = 6;
    ReduceResult res = reduce_tight_pairs(inst, family);
    CHECK(res.tight_pairs == std::vector<int>{0});
    CHECK(res.coloring.pair_total[0] == Rat(6));
  }
}

TEST_CASE("reduced colorings are minimal and conservative") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    PcsfInstance inst = generate_instance(6, 7, 5, 8, 8, seed);
    Pcsf3Result res = pcsf3_solve(inst);
    const DynamicColoring& dc = res.coloring;

    std::vector<char> tight(inst.pairs().size(), 0);
    for (int p = 0; p < static_cast<int>(inst.pairs().size()); ++p)
      tight[p] = dc.pair_total[p] == inst.pairs()[p].penalty;

    // Per-moat conservation and the no-mixed-assignment condition.
    for (const Moat& m : res.family.moats()) {
      Rat assigned = 0;
      bool tight_assigned = false, nontight_cut = false;
      for (int p = 0; p < static_cast<int>(inst.pairs().size()); ++p) {
        assigned += dc.assigned(m.id, p);
        if (dc.assigned(m.id, p) > 0) {
          CHECK(cuts_pair(m.members, inst.pairs()[p].i, inst.pairs()[p].j));
          if (tight[p]) tight_assigned = true;
        }
        if (!tight[p] &&
            cuts_pair(m.members, inst.pairs()[p].i, inst.pairs()[p].j))
          nontight_cut = true;
      }
      CHECK(assigned == m.duration);
      CHECK(!(tight_assigned && nontight_cut));
    }
    for (int p = 0; p < static_cast<int>(inst.pairs().size()); ++p)
      CHECK(dc.pair_total[p] <= inst.pairs()[p].penalty);
  }
}
