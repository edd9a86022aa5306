#include "pcsf/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>

#include "pcsf/errors.hpp"

namespace {

using namespace pcsf;

constexpr int kMaxOracleEdges = 22;
constexpr int kMaxOraclePairs = 16;

void check_oracle_limits(const PcsfInstance& inst) {
  if (static_cast<int>(inst.edges().size()) > kMaxOracleEdges ||
      static_cast<int>(inst.pairs().size()) > kMaxOraclePairs)
    throw OracleLimitError("instance too large for exhaustive search");
}

/// Cost of buying exactly the edges of `mask`, or nullopt if they contain
/// a cycle.
std::optional<Rat> mask_cost(const PcsfInstance& inst, std::uint32_t mask) {
  UnionFind uf(inst.vertex_count());
  Rat cost = 0;
  for (int e = 0; e < static_cast<int>(inst.edges().size()); ++e) {
    if (!(mask >> e & 1)) continue;
    const Edge& ed = inst.edges()[e];
    if (uf.connected(ed.u, ed.v)) return std::nullopt;
    uf.unite(ed.u, ed.v);
    cost += ed.cost;
  }
  for (const PairDemand& d : inst.pairs())
    if (!uf.connected(d.i, d.j)) cost += d.penalty;
  return cost;
}

/// Lexicographic order on the ascending edge-index sequences of two masks;
/// used only to break cost ties.
bool lex_mask_less(std::uint32_t a, std::uint32_t b, int num_edges) {
  for (int e = 0; e < num_edges; ++e) {
    bool in_a = a >> e & 1, in_b = b >> e & 1;
    if (in_a == in_b) continue;
    if (in_a) return true;           // a's next index is smaller
    return (a >> (e + 1)) == 0;      // a is a proper prefix of b
  }
  return false;
}

Solution mask_solution(const PcsfInstance& inst, std::uint32_t mask) {
  Solution sol;
  UnionFind uf(inst.vertex_count());
  for (int e = 0; e < static_cast<int>(inst.edges().size()); ++e)
    if (mask >> e & 1) {
      sol.forest.push_back(e);
      uf.unite(inst.edges()[e].u, inst.edges()[e].v);
    }
  for (int p = 0; p < static_cast<int>(inst.pairs().size()); ++p)
    if (!uf.connected(inst.pairs()[p].i, inst.pairs()[p].j))
      sol.penalized.push_back(p);
  sol.cost = solution_cost(sol, inst);
  return sol;
}

}  // namespace

namespace pcsf {

Solution exact_solve_serial(const PcsfInstance& inst) {
  check_oracle_limits(inst);
  const std::uint32_t limit = std::uint32_t(1)
                              << inst.edges().size();
  std::uint32_t best_mask = 0;
  Rat best = *mask_cost(inst, 0);
  const int m = static_cast<int>(inst.edges().size());
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::optional<Rat> cost = mask_cost(inst, mask);
    if (cost && (*cost < best ||
                 (*cost == best && lex_mask_less(mask, best_mask, m)))) {
      best = *cost;
      best_mask = mask;
    }
  }
  return mask_solution(inst, best_mask);
}

Solution exact_solve(const PcsfInstance& inst) {
  check_oracle_limits(inst);
  const std::uint32_t limit = std::uint32_t(1)
                              << inst.edges().size();
  const int m = static_cast<int>(inst.edges().size());
  std::uint32_t best_mask = 0;
  Rat best = *mask_cost(inst, 0);
#pragma omp parallel
  {
    std::uint32_t local_mask = 0;
    Rat local_best = best;
    bool found = false;
#pragma omp for schedule(static)
    for (std::int64_t mask = 1; mask < static_cast<std::int64_t>(limit);
         ++mask) {
      std::uint32_t u = static_cast<std::uint32_t>(mask);
      std::optional<Rat> cost = mask_cost(inst, u);
      if (cost && (!found || *cost < local_best ||
                   (*cost == local_best && lex_mask_less(u, local_mask, m)))) {
        local_best = *cost;
        local_mask = u;
        found = true;
      }
    }
#pragma omp critical
    if (found &&
        (local_best < best ||
         (local_best == best && lex_mask_less(local_mask, best_mask, m)))) {
      best = local_best;
      best_mask = local_mask;
    }
  }
  return mask_solution(inst, best_mask);
}

Verdict verify_solution(const PcsfInstance& inst, const Solution& sol) {
  Verdict v;
  UnionFind uf(inst.vertex_count());
  for (int e : sol.forest) {
    if (e < 0 || e >= static_cast<int>(inst.edges().size())) {
      v.violations.push_back("unknown edge index " + std::to_string(e));
      continue;
    }
    const Edge& ed = inst.edges()[e];
    if (uf.connected(ed.u, ed.v)) {
      std::ostringstream os;
      os << "edge " << ed.u + 1 << "-" << ed.v + 1 << " closes a cycle";
      v.violations.push_back(os.str());
      continue;
    }
    uf.unite(ed.u, ed.v);
  }

  std::vector<char> paid(inst.pairs().size(), 0);
  for (int p : sol.penalized) {
    if (p < 0 || p >= static_cast<int>(inst.pairs().size()))
      v.violations.push_back("unknown pair index " + std::to_string(p));
    else
      paid[p] = 1;
  }
  for (int p = 0; p < static_cast<int>(inst.pairs().size()); ++p) {
    const PairDemand& d = inst.pairs()[p];
    if (!paid[p] && !uf.connected(d.i, d.j)) {
      std::ostringstream os;
      os << "pair " << d.i + 1 << "-" << d.j + 1
         << " neither connected nor penalized";
      v.violations.push_back(os.str());
    }
  }

  if (v.violations.empty() && solution_cost(sol, inst) != sol.cost)
    v.violations.push_back("recorded cost differs from recomputed cost");
  return v;
}

Diagnostics compute_diagnostics(const PcsfInstance& inst,
                                const MoatFamily& family,
                                const DynamicColoring& coloring,
                                const std::vector<int>& q1,
                                const Solution& opt, const Rat& algo_cost) {
  UnionFind uf(inst.vertex_count());
  for (int e : opt.forest) uf.unite(inst.edges()[e].u, inst.edges()[e].v);

  std::vector<char> paid(inst.pairs().size(), 0);
  for (int p : q1) paid[p] = 1;

  // Optimal-forest edges cut by each moat, for the cp split.
  std::vector<int> opt_degree(family.moats().size(), 0);
  for (const Moat& m : family.moats())
    for (int e : opt.forest)
      if (cuts_pair(m.members, inst.edges()[e].u, inst.edges()[e].v))
        ++opt_degree[m.id];

  Diagnostics d{.cc = 0, .cp = 0, .pc = 0, .pp = 0, .cp1 = 0, .cp2 = 0};
  for (int p = 0; p < static_cast<int>(inst.pairs().size()); ++p) {
    const Rat& y = coloring.pair_total[p];
    bool conn = uf.connected(inst.pairs()[p].i, inst.pairs()[p].j);
    if (conn && !paid[p]) d.cc += y;
    if (conn && paid[p]) {
      d.cp += y;
      for (const auto& [key, y_sij] : coloring.assignment)
        if (key.second == p)
          (opt_degree[key.first] == 1 ? d.cp1 : d.cp2) += y_sij;
    }
    if (!conn && !paid[p]) d.pc += y;
    if (!conn && paid[p]) d.pp += y;
  }
  d.lower_bound = d.cc + d.cp + d.cp2 + d.pc + d.pp;
  d.ratio = opt.cost == 0 ? Rat(1) : algo_cost / opt.cost;
  return d;
}

}  // namespace pcsf
