// Timing harness: the partitioned OpenMP search against the single-worker
// reference, and the frontier-based predicate check against the plain
// enumeration reference.  Prints one line per instance; not a test.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "agree/constructions.hpp"
#include "agree/predicates.hpp"
#include "agree/reference.hpp"
#include "agree/search.hpp"

using namespace agree;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void bench_search_instance(int n, int r, int t, bool nontrivial) {
  SearchParams p;
  p.n = n;
  p.r = r;
  p.t = t;
  p.require_nontrivial = nontrivial;

  p.jobs = 1;
  auto t0 = std::chrono::steady_clock::now();
  const SearchResult serial = max_agreeing(p);
  const double serial_s = seconds_since(t0);

#ifdef _OPENMP
  p.jobs = omp_get_max_threads();
#else
  p.jobs = 1;
#endif
  t0 = std::chrono::steady_clock::now();
  const SearchResult parallel = max_agreeing(p);
  const double parallel_s = seconds_since(t0);

  std::printf(
      "search n=%d r=%d t=%d nontrivial=%d  optimum=%d  serial %.3fs "
      "(%llu nodes)  jobs=%d %.3fs (%llu nodes)  %s\n",
      n, r, t, nontrivial ? 1 : 0, serial.optimum, serial_s,
      static_cast<unsigned long long>(serial.stats.nodes_explored), p.jobs,
      parallel_s,
      static_cast<unsigned long long>(parallel.stats.nodes_explored),
      serial.optimum == parallel.optimum ? "consistent" : "MISMATCH");
}

void bench_predicate_instance(int n, int r, int t) {
  const Family f = brace_daykin(n, r, t);

  auto t0 = std::chrono::steady_clock::now();
  const bool fast = is_r_wise_t_agreeing(f, r, t);
  const double fast_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const bool slow = ref::is_r_wise_t_agreeing(f, r, t);
  const double slow_s = seconds_since(t0);

  std::printf(
      "check  n=%d r=%d t=%d |F|=%zu  frontier %.4fs  enumeration %.4fs  %s\n",
      n, r, t, f.size(), fast_s, slow_s,
      fast == slow ? "consistent" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled at build time\n");
#endif

  bench_search_instance(4, 3, 1, true);
  bench_search_instance(5, 2, 1, true);
  bench_search_instance(5, 3, 1, true);
  bench_search_instance(4, 3, 1, false);

  bench_predicate_instance(9, 3, 1);
  bench_predicate_instance(10, 3, 2);
  bench_predicate_instance(11, 2, 1);
  return 0;
}
