#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pcsf/errors.hpp"
#include "pcsf/io.hpp"
#include "pcsf/ipcsf.hpp"
#include "pcsf/oracle.hpp"
#include "pcsf/ratio_test.hpp"

namespace {

using namespace pcsf;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracleLimit = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string describe_records(const std::vector<IterationRecord>& records,
                             const PcsfInstance& inst) {
  std::ostringstream out;
  for (const IterationRecord& rec : records) {
    out << "depth " << rec.depth << " cost1 " << rat_to_string(rec.cost1);
    if (rec.cost2) out << " cost2 " << rat_to_string(*rec.cost2);
    out << " chosen " << rec.chosen << " q1";
    for (int p : rec.q1)
      out << ' ' << inst.pairs()[p].i + 1 << '-' << inst.pairs()[p].j + 1;
    out << '\n';
  }
  return out.str();
}

int cmd_solve(const std::string& path, const std::string& algorithm,
              const std::string& trace_path) {
  PcsfInstance inst = parse_instance(slurp(path));
  Solution sol;
  std::string trace;
  if (algorithm == "pcsf3") {
    Pcsf3Result res = pcsf3_solve(inst);
    sol = res.solution;
    trace = res.trace.serialize(inst);
  } else {
    IpcsfResult res = ipcsf_solve(inst);
    sol = res.solution;
    trace = res.base.trace.serialize(inst) + describe_records(res.records, inst);
  }
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw std::runtime_error("cannot write " + trace_path);
    out << trace;
  }
  std::cout << serialize_solution(sol, inst);
  return 0;
}

int cmd_exact(const std::string& path) {
  PcsfInstance inst = parse_instance(slurp(path));
  std::cout << serialize_solution(exact_solve(inst), inst);
  return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path) {
  PcsfInstance inst = parse_instance(slurp(inst_path));
  Solution sol = parse_solution(slurp(sol_path), inst);
  Verdict v = verify_solution(inst, sol);
  if (v.ok()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const std::string& s : v.violations) std::cout << s << '\n';
  return kExitViolation;
}

int cmd_ratio_test(int trials, int max_nodes, std::uint64_t seed) {
  RatioReport report = run_ratio_test(trials, max_nodes, seed);
  for (const std::string& v : report.violations) std::cout << v << '\n';
  std::cout << "trials " << report.trials << '\n';
  if (report.worst_trial >= 0)
    std::cout << "worst-ratio " << rat_to_string(report.worst_ratio)
              << " trial " << report.worst_trial << '\n';
  return report.ok() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prize-collecting Steiner forest solver"};
  app.require_subcommand(1);

  std::string inst_path, sol_path, trace_path;
  std::string algorithm = "ipcsf";
  int nodes = 0, edges = 0, pairs = 0, trials = 0, max_nodes = 8;
  long max_cost = 10, max_penalty = 10;
  std::uint64_t seed = 0;

  CLI::App* solve = app.add_subcommand("solve", "approximate a PCSF instance");
  solve->add_option("file", inst_path)->required();
  solve->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"ipcsf", "pcsf3"}));
  solve->add_option("--trace", trace_path);

  CLI::App* exact = app.add_subcommand("exact", "solve exactly (small inputs)");
  exact->add_option("file", inst_path)->required();

  CLI::App* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("instance", inst_path)->required();
  verify->add_option("solution", sol_path)->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--nodes", nodes)->required();
  gen->add_option("--edges", edges)->required();
  gen->add_option("--pairs", pairs)->required();
  gen->add_option("--max-cost", max_cost);
  gen->add_option("--max-penalty", max_penalty);
  gen->add_option("--seed", seed);

  CLI::App* ratio = app.add_subcommand("ratio-test",
                                       "random approximation-bound campaign");
  ratio->add_option("--trials", trials)->required();
  ratio->add_option("--max-nodes", max_nodes);
  ratio->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(inst_path, algorithm, trace_path);
    if (exact->parsed()) return cmd_exact(inst_path);
    if (verify->parsed()) return cmd_verify(inst_path, sol_path);
    if (gen->parsed()) {
      std::cout << serialize_instance(generate_instance(
          nodes, edges, pairs, max_cost, max_penalty, seed));
      return 0;
    }
    if (ratio->parsed()) return cmd_ratio_test(trials, max_nodes, seed);
  } catch (const OracleLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOracleLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
