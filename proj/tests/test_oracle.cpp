#include <random>

#include "doctest.h"
#include "pcsf/errors.hpp"
#include "pcsf/io.hpp"
#include "pcsf/oracle.hpp"
#include "pcsf/pcsf3.hpp"

using namespace pcsf;

TEST_CASE("tiny optima") {
  SUBCASE("paying beats buying") {
    PcsfInstance inst =
        PcsfInstance::create(2, {{0, 1, Rat(10)}}, {{0, 1, Rat(4)}});
    Solution opt = exact_solve(inst);
    CHECK(opt.cost == Rat(4));
    CHECK(opt.forest.empty());
    CHECK(opt.penalized == std::vector<int>{0});
  }
  SUBCASE("buying beats paying") {
    PcsfInstance inst =
        PcsfInstance::create(2, {{0, 1, Rat(10)}}, {{0, 1, Rat(100)}});
    CHECK(exact_solve(inst).cost == Rat(10));
  }
  SUBCASE("path of two edges") {
    PcsfInstance inst = PcsfInstance::create(
        3, {{0, 1, Rat(1)}, {1, 2, Rat(1)}}, {{0, 2, Rat(3, 2)}});
    CHECK(exact_solve(inst).cost == Rat(3, 2));
  }
}

TEST_CASE("enumeration guard") {
  std::vector<std::tuple<int, int, Rat>> edges;
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if (edges.size() < 23) edges.emplace_back(u, v, Rat(1));
  PcsfInstance inst = PcsfInstance::create(10, std::move(edges), {});
  CHECK_THROWS_AS(exact_solve(inst), OracleLimitError);
  CHECK_THROWS_AS(exact_solve_serial(inst), OracleLimitError);
}

TEST_CASE("parallel enumeration matches the serial reference") {
  for (std::uint64_t seed = 300; seed < 330; ++seed) {
    PcsfInstance inst = generate_instance(7, 12, 6, 10, 10, seed);
    Solution a = exact_solve(inst);
    Solution b = exact_solve_serial(inst);
    CHECK(a.cost == b.cost);
    CHECK(a.forest == b.forest);
    CHECK(a.penalized == b.penalized);
  }
}

TEST_CASE("oracle beats random feasible solutions") {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 400; seed < 410; ++seed) {
    PcsfInstance inst = generate_instance(6, 10, 5, 10, 10, seed);
    Rat opt = exact_solve(inst).cost;
    for (int t = 0; t < 1000; ++t) {
      std::uint32_t mask =
          static_cast<std::uint32_t>(rng()) & ((1u << 10) - 1);
      Solution sol;
      UnionFind uf(inst.vertex_count());
      for (int e = 0; e < static_cast<int>(inst.edges().size()); ++e)
        if ((mask >> e & 1) &&
            !uf.connected(inst.edges()[e].u, inst.edges()[e].v)) {
          uf.unite(inst.edges()[e].u, inst.edges()[e].v);
          sol.forest.push_back(e);
        }
      for (int p = 0; p < static_cast<int>(inst.pairs().size()); ++p)
        if (!uf.connected(inst.pairs()[p].i, inst.pairs()[p].j))
          sol.penalized.push_back(p);
      sol.cost = solution_cost(sol, inst);
      CHECK(opt <= sol.cost);
    }
  }
}

TEST_CASE("verdicts") {
  PcsfInstance inst = PcsfInstance::create(
      3, {{0, 1, Rat(1)}, {1, 2, Rat(1)}, {0, 2, Rat(1)}},
      {{0, 2, Rat(5)}});
  SUBCASE("valid solution") {
    Solution sol{.penalized = {}, .forest = {0, 1}, .cost = Rat(2)};
    CHECK(verify_solution(inst, sol).ok());
  }
  SUBCASE("cycle") {
    Solution sol{.penalized = {}, .forest = {0, 1, 2}, .cost = Rat(3)};
    Verdict v = verify_solution(inst, sol);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].find("cycle") != std::string::npos);
  }
  SUBCASE("uncovered pair") {
    Solution sol{.penalized = {}, .forest = {0}, .cost = Rat(1)};
    Verdict v = verify_solution(inst, sol);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].find("neither connected nor penalized") !=
          std::string::npos);
  }
  SUBCASE("cost mismatch") {
    Solution sol{.penalized = {0}, .forest = {}, .cost = Rat(4)};
    Verdict v = verify_solution(inst, sol);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].find("cost") != std::string::npos);
  }
}

TEST_CASE("pair classification totals") {
  SUBCASE("everything paid by both") {
    PcsfInstance inst =
        PcsfInstance::create(2, {{0, 1, Rat(10)}}, {{0, 1, Rat(4)}});
    Pcsf3Result res = pcsf3_solve(inst);
    Solution opt = exact_solve(inst);
    Diagnostics d =
        compute_diagnostics(inst, res.family, res.coloring,
                            res.solution.penalized, opt, res.solution.cost);
    CHECK(d.pp == Rat(4));
    CHECK(d.cc == 0);
    CHECK(d.cp == 0);
    CHECK(d.pc == 0);
    CHECK(d.lower_bound == Rat(4));
    CHECK(d.ratio == Rat(1));
  }
  SUBCASE("everything connected by both") {
    PcsfInstance inst =
        PcsfInstance::create(2, {{0, 1, Rat(10)}}, {{0, 1, Rat(100)}});
    Pcsf3Result res = pcsf3_solve(inst);
    Solution opt = exact_solve(inst);
    Diagnostics d =
        compute_diagnostics(inst, res.family, res.coloring,
                            res.solution.penalized, opt, res.solution.cost);
    CHECK(d.cc == res.family.total_duration());
    CHECK(d.cp == 0);
    CHECK(d.pc == 0);
    CHECK(d.pp == 0);
  }
  SUBCASE("fractional penalty paid by both") {
    PcsfInstance inst = PcsfInstance::create(
        3, {{0, 1, Rat(1)}, {1, 2, Rat(1)}}, {{0, 2, Rat(3, 2)}});
    Pcsf3Result res = pcsf3_solve(inst);
    Solution opt = exact_solve(inst);
    Diagnostics d =
        compute_diagnostics(inst, res.family, res.coloring,
                            res.solution.penalized, opt, res.solution.cost);
    CHECK(d.pp == Rat(3, 2));
    CHECK(d.cp1 == 0);
    CHECK(d.cp2 == 0);
  }
}
