// Compares the serial reference implementations against the OpenMP paths:
// class closure, decision, and brute-force search. Also asserts that both
// modes return identical results.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twist/oracle.hpp"
#include "twist/twisted.hpp"

using namespace twist;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& f) {
  auto t0 = clock_type::now();
  f();
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  std::mt19937_64 rng(97);

  // class closure on a moderately long word
  {
    Fixture f = random_fixture(4, 6, 2, 11);
    Word v = random_reduced_word(4, 36, rng);
    BuildOptions serial, parallel;
    serial.exec = ExecMode::Serial;
    parallel.exec = ExecMode::Parallel;
    std::size_t ns = 0, np = 0;
    double ts = time_ms([&] { ns = build_class(v, f.phi, f.cert, serial).size(); });
    double tp = time_ms([&] { np = build_class(v, f.phi, f.cert, parallel).size(); });
    row("class closure", ts, tp);
    if (ns != np) {
      std::printf("MISMATCH: closure sizes differ (%zu vs %zu)\n", ns, np);
      return 1;
    }
  }

  // end-to-end decision on envelope-sized words
  {
    Fixture f = random_fixture(4, 4, 3, 12);
    Word u = random_reduced_word(4, 40, rng);
    Word v = random_reduced_word(4, 40, rng);
    BuildOptions serial, parallel;
    serial.exec = ExecMode::Serial;
    parallel.exec = ExecMode::Parallel;
    bool rs = false, rp = false;
    double ts = time_ms([&] { rs = decide_twisted_conjugacy(u, v, f.phi, f.cert, serial).has_value(); });
    double tp = time_ms([&] { rp = decide_twisted_conjugacy(u, v, f.phi, f.cert, parallel).has_value(); });
    row("decide", ts, tp);
    if (rs != rp) {
      std::printf("MISMATCH: decide answers differ\n");
      return 1;
    }
  }

  // brute-force witness search, miss-heavy workload
  {
    Fixture f = random_fixture(3, 2, 2, 13);
    Word u = random_reduced_word(3, 7, rng);
    Word v = random_reduced_word(3, 7, rng);
    std::optional<Word> rs, rp;
    double ts = time_ms([&] { rs = brute_force_decide(u, v, f.phi, 7, ExecMode::Serial); });
    double tp = time_ms([&] { rp = brute_force_decide(u, v, f.phi, 7, ExecMode::Parallel); });
    row("brute-force search", ts, tp);
    if (rs != rp) {
      std::printf("MISMATCH: brute-force witnesses differ\n");
      return 1;
    }
  }

  std::printf("results identical across modes\n");
  return 0;
}
