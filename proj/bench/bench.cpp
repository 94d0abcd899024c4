// Serial vs OpenMP kernels, and a scaling sweep of the enumeration.
#include <omp.h>

#include <chrono>
#include <iostream>
#include <numeric>

#include "bnested/batch.hpp"
#include "bnested/generate.hpp"
#include "bnested/oracle.hpp"

using namespace bnested;
using Clock = std::chrono::steady_clock;

template <class F>
double millis(F&& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

int main() {
  std::cout << "threads: " << omp_get_max_threads() << "\n\n";

  std::vector<int> bs(64);
  std::iota(bs.begin(), bs.end(), 1);
  std::cout << "kernel,n,serial_ms,parallel_ms\n";
  for (int n : {10000, 100000}) {
    const auto tree = build_pqtree(normalize(gen::planted(n, 4, 1, {4, 4})));
    std::vector<std::uint64_t> s, p;
    const double ts = millis([&] { s = batch::common_count_profile_serial(tree, bs, MinSize::Two); });
    const double tp = millis([&] { p = batch::common_count_profile(tree, bs, MinSize::Two); });
    std::cout << "common_profile," << n << ',' << ts << ',' << tp << (s == p ? "" : ",MISMATCH") << '\n';

    const auto ctree = build_conserved_tree(normalize(gen::signed_reversals(n, 4, 1, n / 10)));
    const double cs = millis([&] { s = batch::conserved_count_profile_serial(ctree, bs, MinSize::Two); });
    const double cp = millis([&] { p = batch::conserved_count_profile(ctree, bs, MinSize::Two); });
    std::cout << "conserved_profile," << n << ',' << cs << ',' << cp << (s == p ? "" : ",MISMATCH") << '\n';
  }
  {
    const auto set = normalize(gen::uniform(64, 5, 3));
    const double ts = millis([&] { oracle::all_common(set); });
    const double tp = millis([&] { oracle::all_common_parallel(set); });
    std::cout << "oracle_common,64," << ts << ',' << tp << '\n';
  }

  std::cout << "\nn,K,b,nocc,build_us,enum_us,scan_iters\n";
  for (int n : {1000, 3000, 10000, 30000, 100000, 300000}) {
    const auto set = normalize(gen::planted(n, 4, 7, {3, 4}));
    PQTree tree;
    const double build = millis([&] { tree = build_pqtree(set); }, 1);
    std::uint64_t nocc = 0;
    ScanStats stats;
    const double enumerate = millis(
        [&] {
          nocc = 0;
          stats = {};
          for_each_b_nested_common(tree, 2, MinSize::Two, [&](Interval) { ++nocc; }, &stats);
        },
        1);
    std::cout << n << ",4,2," << nocc << ',' << static_cast<long>(build * 1000) << ','
              << static_cast<long>(enumerate * 1000) << ',' << stats.q_iterations << '\n';
  }
}
