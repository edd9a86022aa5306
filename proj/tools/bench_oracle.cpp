// Times the parallel exhaustive solver against the serial reference on
// seed-generated instances near the enumeration limit.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "pcsf/io.hpp"
#include "pcsf/oracle.hpp"

int main(int argc, char** argv) {
  using namespace pcsf;
  using clock = std::chrono::steady_clock;

  int rounds = argc > 1 ? std::atoi(argv[1]) : 5;
  std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;

  double serial_total = 0, parallel_total = 0;
  for (int r = 0; r < rounds; ++r) {
    PcsfInstance inst = generate_instance(12, 22, 16, 10, 10, seed + r);

    auto t0 = clock::now();
    Solution s = exact_solve_serial(inst);
    auto t1 = clock::now();
    Solution p = exact_solve(inst);
    auto t2 = clock::now();

    if (s.cost != p.cost || s.forest != p.forest ||
        s.penalized != p.penalized) {
      std::cerr << "solver disagreement on round " << r << '\n';
      return 1;
    }
    double serial = std::chrono::duration<double>(t1 - t0).count();
    double parallel = std::chrono::duration<double>(t2 - t1).count();
    serial_total += serial;
    parallel_total += parallel;
    std::cout << "round " << r << ": serial " << serial << "s, parallel "
              << parallel << "s, cost " << rat_to_string(s.cost) << '\n';
  }
  std::cout << "total: serial " << serial_total << "s, parallel "
            << parallel_total << "s, speedup "
            << serial_total / parallel_total << "x\n";
  return 0;
}
